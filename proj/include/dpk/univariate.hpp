#pragma once

#include <vector>

#include "dpk/poly.hpp"

namespace dpk {

/// Dense univariate polynomial over a Field, coefficients low to high, no
/// trailing zeros (zero is the empty vector).
struct UniPoly {
    Field field;
    std::vector<Elem> c;

    int degree() const noexcept { return static_cast<int>(c.size()) - 1; }
    bool is_zero() const noexcept { return c.empty(); }
    void normalize();
};

UniPoly uni_mul(const UniPoly& a, const UniPoly& b);
/// Quotient and remainder; throws DomainError on division by zero.
std::pair<UniPoly, UniPoly> uni_divmod(const UniPoly& a, const UniPoly& b);
UniPoly uni_monic(UniPoly a);
/// Monic gcd (zero when both inputs are zero).
UniPoly uni_gcd(UniPoly a, UniPoly b);
UniPoly uni_derivative(const UniPoly& a);
/// Product of the distinct monic irreducible factors of a nonzero input.
UniPoly uni_squarefree(const UniPoly& a);

/// Squarefree part of a polynomial involving at most one variable; the
/// result is monic. Throws ArgumentError on zero or multivariate input.
MultiPoly squarefree_part(const MultiPoly& f);

/// Converts a polynomial in at most the single variable `var`.
UniPoly to_univariate(const MultiPoly& f, std::size_t var);
MultiPoly from_univariate(const UniPoly& u, const RingPtr& ring, std::size_t var);

}  // namespace dpk
