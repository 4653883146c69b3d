#include "dpk/graded.hpp"

#include <algorithm>
#include <map>

#include "dpk/linalg.hpp"

namespace dpk {

namespace {

using Series = std::vector<long long>;

void trim(Series& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

Series add_shifted(const Series& a, const Series& b, unsigned shift) {
    Series r(std::max(a.size(), b.size() + shift), 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i + shift] += b[i];
    trim(r);
    return r;
}

Series mul_one_minus(const Series& a, unsigned d) {
    // a * (1 - t^d)
    Series neg(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) neg[i] = -a[i];
    return add_shifted(a, neg, d);
}

void minimalize(std::vector<Monomial>& g) {
    std::sort(g.begin(), g.end(), [](const Monomial& a, const Monomial& b) { return a.degree() < b.degree(); });
    std::vector<Monomial> out;
    for (const auto& m : g) {
        bool redundant = false;
        for (const auto& o : out)
            if (o.divides(m)) {
                redundant = true;
                break;
            }
        if (!redundant) out.push_back(m);
    }
    g.swap(out);
}

Series numerator_rec(std::vector<Monomial> gens) {
    minimalize(gens);
    if (gens.empty()) return {1};
    if (gens.front().is_one()) return {};
    // Pairwise coprime generators give a product of (1 - t^deg).
    std::array<int, kMaxVars> count{};
    bool coprime = true;
    for (const auto& m : gens)
        for (std::size_t i = 0; i < kMaxVars; ++i)
            if (m[i] != 0 && ++count[i] > 1) coprime = false;
    if (coprime) {
        Series r{1};
        for (const auto& m : gens) r = mul_one_minus(r, m.degree());
        return r;
    }
    std::size_t var = 0;
    for (std::size_t i = 1; i < kMaxVars; ++i)
        if (count[i] > count[var]) var = i;
    // Pivot on x^e taken from a generator that is not a pure power of x.
    unsigned e = 0;
    for (const auto& m : gens)
        if (m[var] != 0 && m[var] != m.degree()) {
            e = m[var];
            break;
        }
    const Monomial p = Monomial::variable(var, e);
    std::vector<Monomial> plus = gens;
    plus.push_back(p);
    std::vector<Monomial> colon;
    colon.reserve(gens.size());
    for (const auto& m : gens) {
        const Monomial g = Monomial::gcd(m, p);
        colon.push_back(m / g);
    }
    return add_shifted(numerator_rec(std::move(plus)), numerator_rec(std::move(colon)), e);
}

void require_homogeneous(const Ideal& I) {
    if (!I.is_homogeneous()) throw ArgumentError("ideal is not homogeneous");
}

std::vector<Monomial> leading_monomials(const Ideal& I) {
    std::vector<Monomial> lm;
    for (const auto& g : I.groebner(MonomialOrder::grevlex())) lm.push_back(g.leading_monomial());
    return lm;
}

// Integer polynomial in n times rational factor.
std::vector<Rational> poly_mul_linear(const std::vector<Rational>& a, long long c) {
    // a(n) * (n + c)
    std::vector<Rational> r(a.size() + 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        r[i + 1] += a[i];
        r[i] += a[i] * c;
    }
    return r;
}

}  // namespace

long long binomial(long long n, long long k) {
    if (k < 0 || n < k) return 0;
    k = std::min(k, n - k);
    long long r = 1;
    for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

std::vector<long long> monomial_hilbert_numerator(std::vector<Monomial> gens) {
    return numerator_rec(std::move(gens));
}

long long HilbertData::hilbert_function(unsigned d) const {
    long long s = 0;
    const long long n = static_cast<long long>(nvars);
    for (std::size_t k = 0; k < numerator.size() && k <= d; ++k)
        s += numerator[k] * binomial(static_cast<long long>(d) - static_cast<long long>(k) + n - 1, n - 1);
    return s;
}

Rational HilbertData::polynomial_at(long long n) const {
    Rational s(0), pw(1);
    for (const auto& c : polynomial) {
        s += c * pw;
        pw *= n;
    }
    return s;
}

HilbertData hilbert(const Ideal& I) {
    require_homogeneous(I);
    HilbertData h;
    h.nvars = I.ring()->nvars();
    h.numerator = numerator_rec(leading_monomials(I));
    if (h.numerator.empty()) return h;
    // Strip factors (1 - t).
    Series q = h.numerator;
    std::size_t stripped = 0;
    auto value_at_one = [](const Series& s) {
        long long v = 0;
        for (auto c : s) v += c;
        return v;
    };
    while (value_at_one(q) == 0 && stripped < h.nvars) {
        // Synthetic division by (1 - t): q = (1 - t) * r  =>  r_k = sum_{i<=k} q_i.
        Series r(q.size() - 1);
        long long acc = 0;
        for (std::size_t k = 0; k + 1 < q.size(); ++k) {
            acc += q[k];
            r[k] = acc;
        }
        q = std::move(r);
        trim(q);
        ++stripped;
    }
    const long long r = static_cast<long long>(h.nvars - stripped);
    h.dim = static_cast<int>(r) - 1;
    if (r == 0) {
        h.dim = -1;
        return h;
    }
    h.degree = value_at_one(q);
    // HP(n) = sum_k q_k * C(n - k + r - 1, r - 1).
    long long fact = 1;
    for (long long i = 2; i <= r - 1; ++i) fact *= i;
    std::vector<Rational> total(static_cast<std::size_t>(r), Rational(0));
    for (std::size_t k = 0; k < q.size(); ++k) {
        if (q[k] == 0) continue;
        std::vector<Rational> term{Rational(1)};
        for (long long i = 1; i <= r - 1; ++i) term = poly_mul_linear(term, i - static_cast<long long>(k));
        for (std::size_t j = 0; j < term.size(); ++j) total[j] += term[j] * q[k] / fact;
    }
    while (!total.empty() && total.back().numerator() == 0) total.pop_back();
    h.polynomial = std::move(total);
    return h;
}

long long graded_piece_dim(const Ideal& I, unsigned d) {
    require_homogeneous(I);
    const long long n = static_cast<long long>(I.ring()->nvars());
    const long long total = binomial(d + n - 1, n - 1);
    return total - static_cast<long long>(standard_monomials(I, d).size());
}

std::vector<Monomial> standard_monomials(const Ideal& I, unsigned d) {
    const auto lms = leading_monomials(I);
    std::vector<Monomial> out;
    for (const auto& m : monomials_of_degree(I.ring()->nvars(), d)) {
        bool in = false;
        for (const auto& l : lms)
            if (l.divides(m)) {
                in = true;
                break;
            }
        if (!in) out.push_back(m);
    }
    return out;
}

std::vector<MultiPoly> graded_piece_basis(const Ideal& I, unsigned d) {
    require_homogeneous(I);
    const RingPtr& ring = I.ring();
    const MonomialBasis basis(ring->nvars(), d);
    IncrementalEchelon ech(ring->field(), basis.size());
    std::vector<std::vector<Elem>> rows;
    for (const auto& g0 : I.groebner()) {
        const int dg = g0.degree();
        if (dg > static_cast<int>(d)) continue;
        for (const auto& m : monomials_of_degree(ring->nvars(), d - static_cast<unsigned>(dg))) {
            auto v = basis.coords(g0.times_term(m, 1));
            if (ech.add(v)) rows.push_back(std::move(v));
        }
    }
    Matrix M(ring->field(), rows.size(), basis.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        std::copy(rows[i].begin(), rows[i].end(), M.row(i).begin());
    M.rref();
    std::vector<MultiPoly> out;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto r = M.row(i);
        out.push_back(combine(ring, basis.monomials(), r));
    }
    return out;
}

std::vector<MultiPoly> minimal_generators(const Ideal& I) {
    require_homogeneous(I);
    const RingPtr& ring = I.ring();
    std::map<unsigned, std::vector<MultiPoly>> by_degree;
    for (const auto& g : I.generators()) by_degree[static_cast<unsigned>(g.degree())].push_back(g);
    std::vector<MultiPoly> kept;
    for (const auto& [d, gens] : by_degree) {
        const MonomialBasis basis(ring->nvars(), d);
        IncrementalEchelon ech(ring->field(), basis.size());
        for (const auto& k : kept)
            for (const auto& m : monomials_of_degree(ring->nvars(), d - static_cast<unsigned>(k.degree())))
                ech.add(basis.coords(k.times_term(m, 1)));
        for (const auto& g : gens)
            if (ech.add(basis.coords(g))) kept.push_back(g);
    }
    return kept;
}

std::vector<unsigned> minimal_generator_degrees(const Ideal& I) {
    std::vector<unsigned> d;
    for (const auto& g : minimal_generators(I)) d.push_back(static_cast<unsigned>(g.degree()));
    return d;
}

}  // namespace dpk
