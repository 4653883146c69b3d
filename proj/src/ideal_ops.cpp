#include "dpk/ideal_ops.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

namespace dpk {

namespace {

int single_variable(const MultiPoly& g) {
    if (g.size() != 1 || g.terms()[0].mono.degree() != 1) return -1;
    const Monomial& m = g.terms()[0].mono;
    for (std::size_t i = 0; i < g.ring()->nvars(); ++i)
        if (m[i] == 1) return static_cast<int>(i);
    return -1;
}

// Divides every term by x_var^e.
MultiPoly divide_by_var_power(const MultiPoly& f, std::size_t var, unsigned e) {
    std::vector<Term> t = f.terms();
    for (auto& x : t) x.mono = x.mono / Monomial::variable(var, e);
    return MultiPoly::from_sorted_terms(f.ring(), std::move(t));
}

unsigned var_content(const MultiPoly& f, std::size_t var) {
    unsigned e = 255;
    for (const auto& t : f.terms()) e = std::min<unsigned>(e, t.mono[var]);
    return f.is_zero() ? 0 : e;
}

// Homogeneous I, quotient (or saturation) by a variable: with the variable
// last in grevlex, a reduced basis element whose leading monomial is
// divisible by it is divisible by it as a whole.
Ideal bayer(const Ideal& I, std::size_t var, bool saturate) {
    const Ring& r = *I.ring();
    const std::size_t n = r.nvars();
    std::vector<int> to_perm(n), from_perm(n);
    std::vector<std::string> names;
    for (std::size_t i = 0, k = 0; i < n; ++i)
        if (i != var) {
            to_perm[i] = static_cast<int>(k);
            from_perm[k] = static_cast<int>(i);
            names.push_back(r.vars()[i]);
            ++k;
        }
    to_perm[var] = static_cast<int>(n - 1);
    from_perm[n - 1] = static_cast<int>(var);
    names.push_back(r.vars()[var]);
    const RingPtr pr = Ring::make(r.field(), names, MonomialOrder::grevlex());
    std::vector<MultiPoly> gens;
    for (const auto& g : I.generators()) gens.push_back(map_variables(g, pr, to_perm));
    Ideal P(pr, std::move(gens));
    P.options = I.options;
    std::vector<MultiPoly> out;
    for (const auto& g : P.groebner()) {
        const unsigned c = var_content(g, n - 1);
        const unsigned e = saturate ? c : std::min(c, 1u);
        out.push_back(map_variables(divide_by_var_power(g, n - 1, e), I.ring(), from_perm));
    }
    Ideal res(I.ring(), std::move(out));
    res.options = I.options;
    return res;
}

Ideal with_options(Ideal J, const GbOptions& o) {
    J.options = o;
    return J;
}

}  // namespace

Ideal variable_ideal(const RingPtr& ring, const std::vector<std::size_t>& vars) {
    std::vector<MultiPoly> g;
    for (auto v : vars) g.push_back(MultiPoly::variable(ring, v));
    return Ideal(ring, std::move(g));
}

Ideal intersect(const Ideal& I, const Ideal& J) {
    const Ring& r = *I.ring();
    if (!r.compatible(*J.ring())) throw ArgumentError("ideals live in different rings");
    if (r.nvars() + 1 > kMaxVars) throw ArgumentError("no room for an auxiliary variable");
    if (I.is_unit()) return J;
    if (J.is_unit()) return I;
    if (I.is_zero() || J.is_zero()) return with_options(Ideal(I.ring()), I.options);
    std::vector<std::string> names{"_y"};
    for (const auto& v : r.vars()) names.push_back(v);
    const RingPtr er = Ring::make(r.field(), names, MonomialOrder::elimination(1));
    std::vector<int> shift(r.nvars());
    std::iota(shift.begin(), shift.end(), 1);
    std::vector<int> back(r.nvars() + 1);
    back[0] = -1;
    std::iota(back.begin() + 1, back.end(), 0);
    const MultiPoly y = MultiPoly::variable(er, 0);
    const MultiPoly one_minus_y = MultiPoly::constant(er, 1) - y;
    std::vector<MultiPoly> gens;
    for (const auto& g : I.generators()) gens.push_back(y * map_variables(g, er, shift));
    for (const auto& g : J.generators()) gens.push_back(one_minus_y * map_variables(g, er, shift));
    Ideal E(er, std::move(gens));
    E.options = I.options;
    std::vector<MultiPoly> out;
    for (const auto& g : E.groebner())
        if (g.leading_monomial()[0] == 0) out.push_back(map_variables(g, I.ring(), back));
    return with_options(Ideal(I.ring(), std::move(out)), I.options);
}

Ideal quotient(const Ideal& I, const MultiPoly& g) {
    if (g.is_zero()) return with_options(Ideal(I.ring(), {MultiPoly::constant(I.ring(), 1)}), I.options);
    const int v = single_variable(g);
    if (v >= 0 && I.is_homogeneous()) return bayer(I, static_cast<std::size_t>(v), false);
    // (I : g) = (I intersect (g)) / g.
    const Ideal K = intersect(I, Ideal(I.ring(), {g}));
    std::vector<MultiPoly> out;
    for (const auto& h : K.groebner()) out.push_back(exact_divide(h, g.in_ring(h.ring())));
    return with_options(Ideal(I.ring(), std::move(out)), I.options);
}

Ideal quotient(const Ideal& I, const Ideal& J) {
    if (J.is_zero()) return with_options(Ideal(I.ring(), {MultiPoly::constant(I.ring(), 1)}), I.options);
    std::vector<MultiPoly> gens = J.generators();
    std::optional<Ideal> acc;
    for (const auto& g : gens) {
        Ideal q = quotient(I, g);
        acc = acc ? intersect(*acc, q) : q;
    }
    return acc->reduced();
}

Ideal saturate(const Ideal& I, const MultiPoly& g, unsigned max_iter) {
    const int v = single_variable(g);
    if (v >= 0 && I.is_homogeneous()) return bayer(I, static_cast<std::size_t>(v), true).reduced();
    Ideal cur = I;
    for (unsigned it = 0; it < max_iter; ++it) {
        Ideal next = quotient(cur, g);
        if (next == cur) return next.reduced();
        cur = std::move(next);
    }
    throw ResourceError("saturation did not stabilize within the iteration cap");
}

Ideal saturate(const Ideal& I, const Ideal& J, unsigned max_iter) {
    Ideal cur = I;
    for (unsigned it = 0; it < max_iter; ++it) {
        Ideal next = quotient(cur, J);
        if (next == cur) return next.reduced();
        cur = std::move(next);
    }
    throw ResourceError("saturation did not stabilize within the iteration cap");
}

Ideal eliminate(const Ideal& I, const std::vector<std::size_t>& drop) {
    const Ring& r = *I.ring();
    const std::size_t n = r.nvars();
    std::vector<bool> dropped(n, false);
    for (auto d : drop) {
        if (d >= n) throw ArgumentError("variable index out of range");
        dropped[d] = true;
    }
    std::vector<int> to_perm(n), from_perm(n);
    std::vector<std::string> names;
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i)
        if (dropped[i]) {
            to_perm[i] = static_cast<int>(k);
            from_perm[k++] = static_cast<int>(i);
            names.push_back(r.vars()[i]);
        }
    const std::size_t block = k;
    for (std::size_t i = 0; i < n; ++i)
        if (!dropped[i]) {
            to_perm[i] = static_cast<int>(k);
            from_perm[k++] = static_cast<int>(i);
            names.push_back(r.vars()[i]);
        }
    const RingPtr er = Ring::make(r.field(), names, MonomialOrder::elimination(static_cast<unsigned>(block)));
    std::vector<MultiPoly> gens;
    for (const auto& g : I.generators()) gens.push_back(map_variables(g, er, to_perm));
    Ideal E(er, std::move(gens));
    E.options = I.options;
    std::vector<MultiPoly> out;
    for (const auto& g : E.groebner()) {
        bool clean = true;
        for (std::size_t b = 0; b < block && clean; ++b)
            if (g.leading_monomial()[b] != 0) clean = false;
        if (clean) out.push_back(map_variables(g, I.ring(), from_perm));
    }
    return with_options(Ideal(I.ring(), std::move(out)), I.options);
}

}  // namespace dpk
