#include "dpk/univariate.hpp"

namespace dpk {

void UniPoly::normalize() {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

UniPoly uni_mul(const UniPoly& a, const UniPoly& b) {
    UniPoly r{a.field, {}};
    if (a.is_zero() || b.is_zero()) return r;
    const Field& f = a.field;
    r.c.assign(a.c.size() + b.c.size() - 1, 0);
    for (std::size_t i = 0; i < a.c.size(); ++i)
        for (std::size_t j = 0; j < b.c.size(); ++j) r.c[i + j] = f.add(r.c[i + j], f.mul(a.c[i], b.c[j]));
    r.normalize();
    return r;
}

std::pair<UniPoly, UniPoly> uni_divmod(const UniPoly& a, const UniPoly& b) {
    if (b.is_zero()) throw DomainError("univariate division by zero");
    const Field& f = a.field;
    UniPoly q{f, {}}, r = a;
    r.normalize();
    if (r.c.size() < b.c.size()) return {q, r};
    q.c.assign(r.c.size() - b.c.size() + 1, 0);
    const Elem lead_inv = f.inv(b.c.back());
    while (!r.is_zero() && r.c.size() >= b.c.size()) {
        const std::size_t shift = r.c.size() - b.c.size();
        const Elem k = f.mul(r.c.back(), lead_inv);
        q.c[shift] = k;
        for (std::size_t i = 0; i < b.c.size(); ++i) r.c[shift + i] = f.sub(r.c[shift + i], f.mul(k, b.c[i]));
        r.normalize();
    }
    q.normalize();
    return {q, r};
}

UniPoly uni_monic(UniPoly a) {
    a.normalize();
    if (a.is_zero()) return a;
    const Elem inv = a.field.inv(a.c.back());
    for (auto& x : a.c) x = a.field.mul(x, inv);
    return a;
}

UniPoly uni_gcd(UniPoly a, UniPoly b) {
    a.normalize();
    b.normalize();
    while (!b.is_zero()) {
        UniPoly r = uni_divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return uni_monic(std::move(a));
}

UniPoly uni_derivative(const UniPoly& a) {
    UniPoly r{a.field, {}};
    if (a.c.size() <= 1) return r;
    r.c.resize(a.c.size() - 1);
    for (std::size_t i = 1; i < a.c.size(); ++i) r.c[i - 1] = a.field.mul(a.c[i], a.field.from_int(static_cast<long long>(i)));
    r.normalize();
    return r;
}

namespace {

// Requires every exponent with a nonzero coefficient to be divisible by p.
UniPoly pth_root(const UniPoly& a) {
    const std::uint32_t p = a.field.characteristic();
    UniPoly r{a.field, {}};
    r.c.assign((a.c.size() - 1) / p + 1, 0);
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i] == 0) continue;
        r.c[i / p] = a.field.frobenius_root(a.c[i]);
    }
    r.normalize();
    return r;
}

bool is_one(const UniPoly& a) { return a.c.size() == 1 && a.c[0] == 1; }

}  // namespace

UniPoly uni_squarefree(const UniPoly& input) {
    UniPoly a = uni_monic(input);
    if (a.is_zero()) throw ArgumentError("squarefree part of zero");
    if (a.degree() <= 0) return a;
    const UniPoly da = uni_derivative(a);
    if (da.is_zero()) return uni_squarefree(pth_root(a));
    const UniPoly g = uni_gcd(a, da);
    // r collects the factors whose multiplicity is prime to p.
    const UniPoly r = uni_monic(uni_divmod(a, g).first);
    UniPoly h = g;
    for (UniPoly d = uni_gcd(h, r); !is_one(d); d = uni_gcd(h, r)) h = uni_divmod(h, d).first;
    // What remains of h has only multiplicities divisible by p.
    h = uni_monic(h);
    if (h.degree() <= 0) return r;
    return uni_monic(uni_mul(r, uni_squarefree(pth_root(h))));
}

UniPoly to_univariate(const MultiPoly& f, std::size_t var) {
    UniPoly u{f.field(), {}};
    for (const auto& t : f.terms()) {
        if (t.mono.degree() != t.mono[var]) throw ArgumentError("polynomial is not univariate");
        const std::size_t e = t.mono[var];
        if (u.c.size() <= e) u.c.resize(e + 1, 0);
        u.c[e] = t.coeff;
    }
    u.normalize();
    return u;
}

MultiPoly from_univariate(const UniPoly& u, const RingPtr& ring, std::size_t var) {
    std::vector<Term> terms;
    for (std::size_t i = 0; i < u.c.size(); ++i)
        if (u.c[i] != 0) terms.push_back({Monomial::variable(var, static_cast<unsigned>(i)), u.c[i]});
    return MultiPoly::from_terms(ring, std::move(terms));
}

MultiPoly squarefree_part(const MultiPoly& f) {
    if (f.is_zero()) throw ArgumentError("squarefree part of zero");
    int var = -1;
    for (const auto& t : f.terms())
        for (std::size_t i = 0; i < f.ring()->nvars(); ++i)
            if (t.mono[i] != 0) {
                if (var >= 0 && static_cast<std::size_t>(var) != i) throw ArgumentError("polynomial is not univariate");
                var = static_cast<int>(i);
            }
    if (var < 0) return MultiPoly::constant(f.ring(), 1);
    const auto v = static_cast<std::size_t>(var);
    return from_univariate(uni_squarefree(to_univariate(f, v)), f.ring(), v);
}

}  // namespace dpk
