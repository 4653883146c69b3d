#include "dpk/radical.hpp"

#include <optional>
#include <unordered_map>

#include "dpk/graded.hpp"
#include "dpk/ideal_ops.hpp"
#include "dpk/linalg.hpp"
#include "dpk/univariate.hpp"

namespace dpk {

namespace {

std::vector<Monomial> leading(const Ideal& I) {
    std::vector<Monomial> lm;
    for (const auto& g : I.groebner()) lm.push_back(g.leading_monomial());
    return lm;
}

bool in_lead_ideal(const std::vector<Monomial>& lm, const Monomial& m) {
    for (const auto& l : lm)
        if (l.divides(m)) return true;
    return false;
}

// Standard monomials of a zero-dimensional ideal, by breadth-first growth.
std::vector<Monomial> all_standard(const Ideal& I) {
    if (!is_zero_dimensional(I)) throw ArgumentError("ideal is not zero-dimensional");
    const auto lm = leading(I);
    const std::size_t n = I.ring()->nvars();
    std::vector<Monomial> out;
    if (in_lead_ideal(lm, Monomial{})) return out;
    std::unordered_map<Monomial, bool, MonomialHash> seen;
    out.push_back(Monomial{});
    seen[Monomial{}] = true;
    for (std::size_t k = 0; k < out.size(); ++k)
        for (std::size_t v = 0; v < n; ++v) {
            const Monomial m = out[k] * Monomial::variable(v);
            if (seen.count(m) || in_lead_ideal(lm, m)) continue;
            seen[m] = true;
            out.push_back(m);
        }
    return out;
}

}  // namespace

bool is_zero_dimensional(const Ideal& I) {
    const auto lm = leading(I);
    const std::size_t n = I.ring()->nvars();
    for (std::size_t v = 0; v < n; ++v) {
        bool pure = false;
        for (const auto& l : lm)
            if (l[v] == l.degree()) {
                pure = true;
                break;
            }
        if (!pure) return false;
    }
    return true;
}

std::size_t quotient_dimension(const Ideal& I) { return all_standard(I).size(); }

Matrix multiplication_matrix(const Ideal& I, const MultiPoly& g) {
    const auto monos = all_standard(I);
    const MonomialBasis basis(monos);
    const auto& gb = I.groebner();
    Matrix M(I.ring()->field(), monos.size(), monos.size());
    for (std::size_t j = 0; j < monos.size(); ++j) {
        const MultiPoly image = reduce(g * MultiPoly::monomial(I.ring(), monos[j]), gb);
        const auto v = basis.coords(image);
        for (std::size_t i = 0; i < v.size(); ++i) M.at(i, j) = v[i];
    }
    return M;
}

MultiPoly minimal_polynomial(const Ideal& I, std::size_t var) {
    const RingPtr& ring = I.ring();
    const auto basis_monos = all_standard(I);
    if (basis_monos.empty()) return MultiPoly::constant(ring, 1);
    const MonomialBasis basis(basis_monos);
    const Field& field = ring->field();
    const auto& gb = I.groebner();
    const MultiPoly x = MultiPoly::variable(ring, var);
    std::vector<std::vector<Elem>> powers;
    IncrementalEchelon ech(field, basis.size());
    MultiPoly cur = reduce(MultiPoly::constant(ring, 1), gb);
    for (;;) {
        auto v = basis.coords(cur);
        powers.push_back(v);
        if (!ech.add(v)) break;
        cur = reduce(cur * x, gb);
    }
    // Dependency among x^0..x^k with x^k's coefficient normalized to 1.
    Matrix M(field, basis.size(), powers.size());
    for (std::size_t c = 0; c < powers.size(); ++c)
        for (std::size_t r = 0; r < basis.size(); ++r) M.at(r, c) = powers[c][r];
    const auto ker = M.kernel();
    if (ker.size() != 1) throw GeometryError("unexpected kernel in minimal polynomial computation");
    const auto& k = ker.front();
    const Elem lead_inv = field.inv(k.back());
    std::vector<Term> terms;
    for (std::size_t e = 0; e < k.size(); ++e)
        if (k[e] != 0) terms.push_back({Monomial::variable(var, static_cast<unsigned>(e)), field.mul(k[e], lead_inv)});
    return MultiPoly::from_terms(ring, std::move(terms));
}

Ideal zero_dim_radical(const Ideal& I) {
    if (!is_zero_dimensional(I)) throw ArgumentError("ideal is not zero-dimensional");
    if (I.is_unit()) return I;
    std::vector<MultiPoly> gens = I.groebner();
    for (std::size_t v = 0; v < I.ring()->nvars(); ++v)
        gens.push_back(squarefree_part(minimal_polynomial(I, v)));
    Ideal r(I.ring(), std::move(gens));
    r.options = I.options;
    return r.reduced();
}

std::size_t projective_point_count(const Ideal& I) {
    if (!I.is_homogeneous()) throw ArgumentError("ideal is not homogeneous");
    const RingPtr& ring = I.ring();
    std::size_t count = 0;
    for (std::size_t i = 0; i < ring->nvars(); ++i) {
        std::vector<MultiPoly> gens = I.groebner();
        for (std::size_t j = 0; j < i; ++j) gens.push_back(MultiPoly::variable(ring, j));
        gens.push_back(MultiPoly::variable(ring, i) - MultiPoly::constant(ring, 1));
        Ideal stratum(ring, std::move(gens));
        stratum.options = I.options;
        if (stratum.is_unit()) continue;
        count += quotient_dimension(zero_dim_radical(stratum));
    }
    return count;
}

Ideal projective_radical(const Ideal& I) {
    if (!I.is_homogeneous()) throw ArgumentError("ideal is not homogeneous");
    const RingPtr& ring = I.ring();
    std::optional<Ideal> acc;
    for (std::size_t i = 0; i < ring->nvars(); ++i) {
        Ideal chart = I.with_generator(MultiPoly::variable(ring, i) - MultiPoly::constant(ring, 1));
        if (chart.is_unit()) continue;
        std::vector<MultiPoly> hom;
        const Ideal rad = zero_dim_radical(chart);
        for (const auto& g : rad.groebner()) {
            if (g.leading_monomial()[i] != 0) continue;  // x_i - 1 itself
            hom.push_back(homogenize(g, i));
        }
        Ideal closure(ring, std::move(hom));
        closure.options = I.options;
        acc = acc ? intersect(*acc, closure) : closure;
    }
    if (!acc) return Ideal(ring, {MultiPoly::constant(ring, 1)});
    return acc->reduced();
}

}  // namespace dpk
