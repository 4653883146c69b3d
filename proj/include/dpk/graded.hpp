#pragma once

#include <boost/rational.hpp>
#include <cstddef>
#include <vector>

#include "dpk/groebner.hpp"

namespace dpk {

using Rational = boost::rational<long long>;

/// Hilbert series data of R/I for a homogeneous ideal I in n variables:
/// HS(t) = numerator(t) / (1-t)^n.
struct HilbertData {
    std::size_t nvars = 0;
    std::vector<long long> numerator;  // low to high
    /// Projective dimension of V(I); -1 when empty.
    int dim = -1;
    /// Degree of V(I); 0 when empty.
    long long degree = 0;
    /// Hilbert polynomial coefficients, low to high (empty when zero).
    std::vector<Rational> polynomial;

    long long hilbert_function(unsigned d) const;
    Rational polynomial_at(long long n) const;
};

/// Numerator of the Hilbert series of R/(monomials) over (1-t)^nvars.
std::vector<long long> monomial_hilbert_numerator(std::vector<Monomial> gens);

/// Throws ArgumentError for non-homogeneous input.
HilbertData hilbert(const Ideal& I);

/// dim_k I_d.
long long graded_piece_dim(const Ideal& I, unsigned d);

/// A basis of I_d (homogeneous I), in reduced echelon form.
std::vector<MultiPoly> graded_piece_basis(const Ideal& I, unsigned d);

/// Monomials of degree d outside the leading-term ideal of I (grevlex).
std::vector<Monomial> standard_monomials(const Ideal& I, unsigned d);

/// A minimal homogeneous generating set selected from I's generators,
/// degree by degree: a generator is kept when it is not in R_1 * I_{<d}
/// plus the previously kept generators of its degree.
std::vector<MultiPoly> minimal_generators(const Ideal& I);
std::vector<unsigned> minimal_generator_degrees(const Ideal& I);

long long binomial(long long n, long long k);

}  // namespace dpk
