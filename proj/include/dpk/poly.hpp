#pragma once

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "dpk/field.hpp"
#include "dpk/monomial.hpp"

namespace dpk {

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

/// Polynomial ring context: coefficient field, variable names, term order.
class Ring {
public:
    static RingPtr make(Field field, std::vector<std::string> vars,
                        MonomialOrder order = MonomialOrder::grevlex());

    const Field& field() const noexcept { return field_; }
    std::size_t nvars() const noexcept { return vars_.size(); }
    const std::vector<std::string>& vars() const noexcept { return vars_; }
    const MonomialOrder& order() const noexcept { return order_; }
    /// -1 when absent.
    int var_index(const std::string& name) const noexcept;

    RingPtr with_order(MonomialOrder order) const;
    RingPtr with_field(Field field) const;

    int compare(const Monomial& a, const Monomial& b) const noexcept {
        return order_.compare(a, b, vars_.size());
    }
    /// Same field and variables; orders may differ.
    bool compatible(const Ring& o) const noexcept { return field_ == o.field_ && vars_ == o.vars_; }
    bool operator==(const Ring& o) const noexcept { return compatible(o) && order_ == o.order_; }

private:
    Ring(Field f, std::vector<std::string> v, MonomialOrder o)
        : field_(std::move(f)), vars_(std::move(v)), order_(o) {}

    Field field_;
    std::vector<std::string> vars_;
    MonomialOrder order_;
};

struct Term {
    Monomial mono;
    Elem coeff;
};

/// Sparse multivariate polynomial. Terms are strictly decreasing in the
/// ring's order and carry nonzero coefficients; zero has no terms.
class MultiPoly {
public:
    explicit MultiPoly(RingPtr ring) : ring_(std::move(ring)) {}

    static MultiPoly constant(RingPtr ring, Elem c);
    static MultiPoly variable(RingPtr ring, std::size_t i);
    static MultiPoly monomial(RingPtr ring, const Monomial& m, Elem c = 1);
    /// Sorts, merges equal monomials and drops zero coefficients.
    static MultiPoly from_terms(RingPtr ring, std::vector<Term> terms);
    /// Trusts that `terms` is already canonical for `ring`.
    static MultiPoly from_sorted_terms(RingPtr ring, std::vector<Term> terms) {
        MultiPoly p(std::move(ring));
        p.terms_ = std::move(terms);
        return p;
    }

    const RingPtr& ring() const noexcept { return ring_; }
    const Field& field() const noexcept { return ring_->field(); }
    const std::vector<Term>& terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const noexcept { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }

    const Term& leading_term() const;
    const Monomial& leading_monomial() const { return leading_term().mono; }
    Elem leading_coeff() const { return leading_term().coeff; }
    /// Total degree; -1 for zero.
    int degree() const noexcept;
    bool is_homogeneous() const noexcept;
    /// Coefficient of `m` (0 when absent).
    Elem coeff(const Monomial& m) const noexcept;

    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator-() const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly& operator+=(const MultiPoly& o) { return *this = *this + o; }
    MultiPoly& operator-=(const MultiPoly& o) { return *this = *this - o; }
    MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }
    MultiPoly scaled(Elem c) const;
    MultiPoly times_term(const Monomial& m, Elem c) const;
    MultiPoly pow(unsigned e) const;
    MultiPoly monic() const;

    /// Evaluates at a point whose coordinates live in `point_field`, which
    /// must extend this polynomial's field.
    Elem evaluate(std::span<const Elem> point, const Field& point_field) const;
    Elem evaluate(std::span<const Elem> point) const { return evaluate(point, field()); }
    MultiPoly derivative(std::size_t var) const;

    /// Same polynomial viewed in a compatible ring (possibly another order),
    /// or in a ring over an extension of the coefficient field.
    MultiPoly in_ring(const RingPtr& target) const;

    std::string to_string() const;

    bool operator==(const MultiPoly& o) const;
    bool operator!=(const MultiPoly& o) const { return !(*this == o); }

private:
    void check_same_ring(const MultiPoly& o) const;

    RingPtr ring_;
    std::vector<Term> terms_;
};

/// Renames variables into `target`: variable i goes to image[i], or must
/// not occur when image[i] < 0.
MultiPoly map_variables(const MultiPoly& f, const RingPtr& target, const std::vector<int>& image);

/// Sets variable `var` to `value`, keeping the ring (the variable then no
/// longer occurs).
MultiPoly substitute(const MultiPoly& f, std::size_t var, Elem value);

/// Homogenizes with respect to variable `var`, which must not occur in f.
MultiPoly homogenize(const MultiPoly& f, std::size_t var);

/// All monomials of total degree d in n variables, in decreasing grevlex order.
std::vector<Monomial> monomials_of_degree(std::size_t nvars, unsigned d);

/// Polynomial from a linear combination over a monomial basis.
MultiPoly combine(const RingPtr& ring, const std::vector<Monomial>& basis,
                  std::span<const Elem> coeffs);

}  // namespace dpk
