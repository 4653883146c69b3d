#include "dpk/geometry.hpp"

#include <bit>
#include <cstdint>
#include <span>
#include <map>
#include <unordered_map>

#include "dpk/graded.hpp"
#include "dpk/linalg.hpp"
#include "dpk/ideal_ops.hpp"
#include "dpk/radical.hpp"

namespace dpk {

namespace {

MultiPoly det_rec(const PolyMatrix& m, std::size_t row, std::uint32_t mask,
                  std::unordered_map<std::uint32_t, MultiPoly>& memo, const RingPtr& ring) {
    if (row == m.size()) return MultiPoly::constant(ring, 1);
    if (const auto it = memo.find(mask); it != memo.end()) return it->second;
    MultiPoly acc(ring);
    int sign_pos = 0;
    for (std::size_t c = 0; c < m.size(); ++c) {
        if (!(mask & (1u << c))) continue;
        const MultiPoly& e = m[row][c];
        if (!e.is_zero()) {
            MultiPoly sub = det_rec(m, row + 1, mask & ~(1u << c), memo, ring);
            if (!sub.is_zero()) {
                MultiPoly t = e * sub;
                acc = (sign_pos % 2 == 0) ? acc + t : acc - t;
            }
        }
        ++sign_pos;
    }
    memo.emplace(mask, acc);
    return acc;
}

MultiPoly poly_gcd(const MultiPoly& a, const MultiPoly& b) {
    const RingPtr& ring = a.ring();
    if (a.is_zero()) return b.is_zero() ? b : b.monic();
    if (b.is_zero()) return a.monic();
    if (a.is_constant() || b.is_constant()) return MultiPoly::constant(ring, 1);
    const Ideal l = intersect(Ideal(ring, {a}), Ideal(ring, {b}));
    const auto& gb = l.groebner();
    if (gb.size() != 1) throw GeometryError("intersection of principal ideals is not principal");
    return exact_divide(a * b, gb.front()).monic();
}

MultiPoly pth_root_poly(const MultiPoly& f) {
    const Field& fd = f.field();
    const unsigned p = fd.characteristic();
    std::vector<Term> terms;
    for (const auto& t : f.terms()) {
        Monomial m;
        for (std::size_t i = 0; i < f.ring()->nvars(); ++i) m.set(i, t.mono[i] / p);
        terms.push_back({m, fd.frobenius_root(t.coeff)});
    }
    return MultiPoly::from_terms(f.ring(), std::move(terms));
}

MultiPoly linear_form(const RingPtr& ring, const std::array<Elem, 3>& c) {
    std::vector<Term> t;
    for (std::size_t i = 0; i < 3; ++i)
        if (c[i] != 0) t.push_back({Monomial::variable(i), c[i]});
    return MultiPoly::from_terms(ring, std::move(t));
}

void require_three_vars(const RingPtr& ring) {
    if (ring->nvars() != 3) throw ArgumentError("expected a ring in three variables");
}

}  // namespace

MultiPoly determinant(const PolyMatrix& m) {
    if (m.empty()) throw ArgumentError("empty matrix");
    const std::size_t n = m.size();
    for (const auto& r : m)
        if (r.size() != n) throw ArgumentError("determinant of a non-square matrix");
    if (n > 16) throw ArgumentError("matrix too large for cofactor expansion");
    std::unordered_map<std::uint32_t, MultiPoly> memo;
    return det_rec(m, 0, (1u << n) - 1, memo, m[0][0].ring());
}

std::vector<MultiPoly> minors(const PolyMatrix& m, std::size_t k) {
    std::vector<MultiPoly> out;
    const std::size_t rows = m.size();
    if (rows == 0) return out;
    const std::size_t cols = m[0].size();
    if (k == 0 || k > rows || k > cols) return out;
    std::vector<std::size_t> rsel, csel;
    auto subsets = [](std::size_t n, std::size_t k) {
        std::vector<std::vector<std::size_t>> all;
        for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
            if (static_cast<std::size_t>(std::popcount(mask)) != k) continue;
            std::vector<std::size_t> s;
            for (std::size_t i = 0; i < n; ++i)
                if (mask & (1u << i)) s.push_back(i);
            all.push_back(std::move(s));
        }
        return all;
    };
    const auto rs = subsets(rows, k);
    const auto cs = subsets(cols, k);
    for (const auto& r : rs)
        for (const auto& c : cs) {
            PolyMatrix sub(k);
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t j = 0; j < k; ++j) sub[i].push_back(m[r[i]][c[j]]);
            MultiPoly d = determinant(sub);
            if (!d.is_zero()) out.push_back(std::move(d));
        }
    return out;
}

PolyMatrix jacobian(const std::vector<MultiPoly>& polys) {
    PolyMatrix j;
    for (const auto& f : polys) {
        std::vector<MultiPoly> row;
        for (std::size_t v = 0; v < f.ring()->nvars(); ++v) row.push_back(f.derivative(v));
        j.push_back(std::move(row));
    }
    return j;
}

namespace {

// Appends the polynomials of `polys` that are linearly independent (per
// degree) of the ones already kept from that list.
void append_independent(std::vector<MultiPoly>& out, std::vector<MultiPoly> polys, const Ring& ring) {
    std::map<int, std::vector<MultiPoly>> by_degree;
    for (auto& m : polys)
        if (!m.is_zero()) by_degree[m.degree()].push_back(std::move(m));
    for (auto& [deg, group] : by_degree) {
        bool homogeneous = true;
        for (const auto& m : group) homogeneous = homogeneous && m.is_homogeneous();
        if (!homogeneous) {
            for (auto& m : group) out.push_back(std::move(m));
            continue;
        }
        const MonomialBasis basis(ring.nvars(), static_cast<unsigned>(deg));
        IncrementalEchelon ech(ring.field(), basis.size());
        for (auto& m : group)
            if (ech.add(basis.coords(m))) out.push_back(std::move(m));
    }
}

// All k x k minors, expanded along their first row with memoized smaller
// minors; every entry and product is reduced modulo `gb`.
class ReducedMinors {
public:
    ReducedMinors(const PolyMatrix& m, std::span<const MultiPoly> gb) : gb_(gb) {
        for (const auto& row : m) {
            std::vector<MultiPoly> r;
            for (const auto& e : row) r.push_back(reduce(e, gb_));
            m_.push_back(std::move(r));
        }
    }

    const MultiPoly& get(std::uint32_t rows, std::uint32_t cols) {
        const std::uint64_t key = (static_cast<std::uint64_t>(rows) << 32) | cols;
        if (const auto it = memo_.find(key); it != memo_.end()) return it->second;
        const std::size_t r0 = static_cast<std::size_t>(std::countr_zero(rows));
        MultiPoly acc(m_[r0][0].ring());
        if (std::popcount(rows) == 1) {
            acc = m_[r0][static_cast<std::size_t>(std::countr_zero(cols))];
        } else {
            int sign = 0;
            for (std::uint32_t rest = cols; rest != 0; rest &= rest - 1, ++sign) {
                const std::size_t c = static_cast<std::size_t>(std::countr_zero(rest));
                const MultiPoly& e = m_[r0][c];
                if (e.is_zero()) continue;
                const MultiPoly& sub = get(rows & (rows - 1), cols & ~(1u << c));
                if (sub.is_zero()) continue;
                const MultiPoly t = reduce(e * sub, gb_);
                acc = (sign % 2 == 0) ? acc + t : acc - t;
            }
        }
        return memo_.emplace(key, std::move(acc)).first->second;
    }

private:
    std::span<const MultiPoly> gb_;
    PolyMatrix m_;
    std::unordered_map<std::uint64_t, MultiPoly> memo_;
};

Ideal with_options(Ideal J, const GbOptions& o) {
    J.options = o;
    return J;
}

std::vector<std::uint32_t> subsets(std::size_t n, std::size_t k) {
    std::vector<std::uint32_t> all;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask)
        if (static_cast<std::size_t>(std::popcount(mask)) == k) all.push_back(mask);
    return all;
}

}  // namespace

Ideal singular_locus_ideal(const Ideal& I, std::size_t codim) {
    const RingPtr& ring = I.ring();
    const auto gens = minimal_generators(I);  // ascending degree
    const PolyMatrix jac = jacobian(gens);
    const std::size_t rows = jac.size(), cols = ring->nvars();
    std::vector<MultiPoly> all = I.generators();
    if (codim == 0 || codim > rows || codim > cols) return with_options(Ideal(ring, std::move(all)), I.options);
    if (rows > 31 || cols > 31) {
        append_independent(all, minors(jac, codim), *ring);
        return with_options(Ideal(ring, std::move(all)), I.options);
    }
    // Seed with the minors through the codim - 1 lowest-degree rows; the rest
    // are only needed modulo the ideal they generate.
    const std::uint32_t fixed = (1u << (codim - 1)) - 1;
    std::vector<MultiPoly> seed;
    for (std::size_t r = codim - 1; r < rows; ++r) {
        PolyMatrix sub;
        for (std::size_t i = 0; i < rows; ++i)
            if ((fixed >> i) & 1u || i == r) sub.push_back(jac[i]);
        for (auto& m : minors(sub, codim)) seed.push_back(std::move(m));
    }
    append_independent(all, std::move(seed), *ring);
    const Ideal G0 = with_options(Ideal(ring, all), I.options);
    const auto& gb = G0.groebner();
    ReducedMinors rm(jac, gb);
    std::vector<MultiPoly> rest;
    for (const auto r : subsets(rows, codim)) {
        if ((r & fixed) == fixed) continue;
        for (const auto c : subsets(cols, codim)) {
            const MultiPoly& m = rm.get(r, c);
            if (!m.is_zero()) rest.push_back(m);
        }
    }
    append_independent(all, std::move(rest), *ring);
    return with_options(Ideal(ring, std::move(all)), I.options);
}

bool is_smooth(const Ideal& I, std::size_t codim) { return hilbert(singular_locus_ideal(I, codim)).dim < 0; }

SingularityCensus singularity_census(const Ideal& I, std::size_t codim) {
    SingularityCensus c;
    c.ambient_dim = I.ring()->nvars() - 1;
    const Ideal J = singular_locus_ideal(I, codim);
    const HilbertData h = hilbert(J);
    if (h.dim > 0) {
        c.finite = false;
        c.scheme_degree = c.radical_degree = -1;
        c.error = "singular locus has dimension " + std::to_string(h.dim);
        return c;
    }
    if (h.dim < 0) return c;
    c.scheme_degree = h.degree;
    c.radical_degree = static_cast<long long>(projective_point_count(J));
    return c;
}

CurveInvariants curve_invariants(const Ideal& C) {
    const HilbertData h = hilbert(C);
    if (h.dim != 1) throw ArgumentError("not a curve: projective dimension " + std::to_string(h.dim));
    const Rational c0 = h.polynomial_at(0);
    if (c0.denominator() != 1) throw GeometryError("non-integral Hilbert polynomial");
    return {h.degree, 1 - c0.numerator()};
}

PlaneCurve::PlaneCurve(MultiPoly f) : f_(std::move(f)) {
    require_three_vars(f_.ring());
    if (f_.is_zero() || !f_.is_homogeneous() || f_.degree() < 1)
        throw ArgumentError("a plane curve needs a nonconstant homogeneous equation");
    degree_ = static_cast<unsigned>(f_.degree());
}

MultiPoly squarefree_polynomial(const MultiPoly& f) {
    if (f.is_zero()) throw ArgumentError("squarefree part of zero");
    const MultiPoly g0 = f.monic();
    if (g0.degree() <= 0) return MultiPoly::constant(f.ring(), 1);
    for (std::size_t v = 0; v < f.ring()->nvars(); ++v) {
        const MultiPoly d = g0.derivative(v);
        if (d.is_zero()) continue;
        const MultiPoly g = poly_gcd(g0, d);
        const MultiPoly r = exact_divide(g0, g).monic();
        // Strip r's factors from g; what is left has only factors that r misses.
        MultiPoly h = g;
        for (MultiPoly t = poly_gcd(h, r); t.degree() > 0; t = poly_gcd(h, r)) h = exact_divide(h, t);
        return (r * squarefree_polynomial(h)).monic();
    }
    return squarefree_polynomial(pth_root_poly(g0));
}

PlaneCurve dual_curve(const PlaneCurve& C) {
    const RingPtr& r3 = C.equation().ring();
    const Ring& base = *r3;
    std::vector<std::string> names = base.vars();
    for (int i = 0; i < 3; ++i) names.push_back("_dual" + std::to_string(i));
    const RingPtr r6 = Ring::make(base.field(), names);
    const MultiPoly F = map_variables(C.equation(), r6, {0, 1, 2});
    std::array<MultiPoly, 3> grad{F.derivative(0), F.derivative(1), F.derivative(2)};
    std::array<MultiPoly, 3> dual{MultiPoly::variable(r6, 3), MultiPoly::variable(r6, 4), MultiPoly::variable(r6, 5)};
    std::vector<MultiPoly> gens{F};
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = i + 1; j < 3; ++j) {
            MultiPoly m = grad[i] * dual[j] - grad[j] * dual[i];
            if (!m.is_zero()) gens.push_back(std::move(m));
        }
    Ideal inc(r6, std::move(gens));
    inc = saturate(inc, MultiPoly::variable(r6, 0));
    if (!is_smooth(C.ideal(), 1)) {
        std::vector<MultiPoly> g(grad.begin(), grad.end());
        inc = saturate(inc, Ideal(r6, g));
    }
    const Ideal e = eliminate(inc, {0, 1, 2});
    const auto& gb = e.groebner();
    if (gb.size() != 1) throw GeometryError("dual curve eliminant is not principal");
    const MultiPoly G = map_variables(gb.front(), r3, {-1, -1, -1, 0, 1, 2});
    if (G.degree() < 1) throw GeometryError("dual curve eliminant is constant");
    return PlaneCurve(squarefree_polynomial(G));
}

MultiPoly determinant_curve(const std::array<Mat3, 3>& m, const RingPtr& abc) {
    require_three_vars(abc);
    PolyMatrix a(3);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) a[i].push_back(linear_form(abc, {m[0][i][j], m[1][i][j], m[2][i][j]}));
    MultiPoly d = determinant(a);
    if (d.is_zero()) throw DegeneracyError("determinant of the net vanishes identically");
    return d;
}

MultiPoly column_contraction_curve(const std::array<Mat3, 3>& m, const RingPtr& ring) {
    require_three_vars(ring);
    PolyMatrix a(3, std::vector<MultiPoly>(3, MultiPoly(ring)));
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t k = 0; k < 3; ++k) a[i][k] = linear_form(ring, m[k][i]);
    return determinant(a);
}

MultiPoly row_contraction_curve(const std::array<Mat3, 3>& m, const RingPtr& ring) {
    require_three_vars(ring);
    PolyMatrix a(3, std::vector<MultiPoly>(3, MultiPoly(ring)));
    for (std::size_t k = 0; k < 3; ++k)
        for (std::size_t j = 0; j < 3; ++j) a[k][j] = linear_form(ring, {m[k][0][j], m[k][1][j], m[k][2][j]});
    return determinant(a);
}

std::vector<std::vector<Elem>> quadric_matrix(const MultiPoly& q) {
    const Field& f = q.field();
    if (f.characteristic() == 2) throw ArgumentError("quadric matrices need odd characteristic");
    if (!q.is_zero() && (q.degree() != 2 || !q.is_homogeneous())) throw ArgumentError("not a quadratic form");
    const std::size_t n = q.ring()->nvars();
    const Elem half = f.inv(2);
    std::vector<std::vector<Elem>> s(n, std::vector<Elem>(n, 0));
    for (const auto& t : q.terms()) {
        std::vector<std::size_t> idx;
        for (std::size_t i = 0; i < n; ++i)
            for (unsigned e = 0; e < t.mono[i]; ++e) idx.push_back(i);
        if (idx[0] == idx[1]) {
            s[idx[0]][idx[0]] = t.coeff;
        } else {
            s[idx[0]][idx[1]] = s[idx[1]][idx[0]] = f.mul(t.coeff, half);
        }
    }
    return s;
}

bool quadric_net_square_identity(const std::array<MultiPoly, 3>& quadrics, const RingPtr& abc) {
    require_three_vars(abc);
    const std::size_t n = quadrics[0].ring()->nvars();
    if (n != 6) throw ArgumentError("the net must live in six variables");
    std::array<std::vector<std::vector<Elem>>, 3> s;
    for (std::size_t k = 0; k < 3; ++k) s[k] = quadric_matrix(quadrics[k]);
    PolyMatrix big(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) big[i].push_back(linear_form(abc, {s[0][i][j], s[1][i][j], s[2][i][j]}));
    const MultiPoly d6 = determinant(big);
    std::array<Mat3, 3> m{};
    for (std::size_t k = 0; k < 3; ++k)
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) {
                Monomial mono = Monomial::variable(i) * Monomial::variable(j + 3);
                m[k][i][j] = quadrics[k].coeff(mono);
            }
    MultiPoly d3(abc);
    try {
        d3 = determinant_curve(m, abc);
    } catch (const DegeneracyError&) {
        return false;
    }
    const MultiPoly sq = d3 * d3;
    if (d6.is_zero()) return false;
    const Elem c0 = abc->field().div(d6.leading_coeff(), sq.leading_coeff());
    return d6 == sq.scaled(c0);
}

}  // namespace dpk
