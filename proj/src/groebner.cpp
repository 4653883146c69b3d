#include "dpk/groebner.hpp"

#include <algorithm>
#include <limits>

namespace dpk {

namespace {

using Terms = std::vector<Term>;

// out := a - c * m * b, where a and b are sorted in `ring`'s order.
void sub_mul_merge(const Ring& ring, const Terms& a, std::size_t a_from, const Terms& b,
                   std::size_t b_from, const Monomial& m, Elem c, Terms& out) {
    const Field& f = ring.field();
    const Elem nc = f.neg(c);
    out.clear();
    out.reserve(a.size() - a_from + b.size() - b_from);
    std::size_t i = a_from, j = b_from;
    bool have_bm = false;
    Monomial bm;
    while (i < a.size() && j < b.size()) {
        if (!have_bm) {
            bm = b[j].mono * m;
            have_bm = true;
        }
        const int cmp = ring.compare(a[i].mono, bm);
        if (cmp > 0) {
            out.push_back(a[i++]);
        } else if (cmp < 0) {
            out.push_back({bm, f.mul(nc, b[j].coeff)});
            ++j;
            have_bm = false;
        } else {
            const Elem s = f.add(a[i].coeff, f.mul(nc, b[j].coeff));
            if (s != 0) out.push_back({bm, s});
            ++i;
            ++j;
            have_bm = false;
        }
    }
    for (; i < a.size(); ++i) out.push_back(a[i]);
    for (; j < b.size(); ++j) out.push_back({b[j].mono * m, f.mul(nc, b[j].coeff)});
}

// Basis view used during reduction: monic polynomials with their leading
// monomials kept alongside for fast divisor search.
struct Reducers {
    std::vector<const Terms*> polys;
    std::vector<Monomial> lms;

    void add(const Terms* t) {
        polys.push_back(t);
        lms.push_back(t->front().mono);
    }
    int find(const Monomial& m) const {
        for (std::size_t k = 0; k < lms.size(); ++k)
            if (lms[k].divides(m)) return static_cast<int>(k);
        return -1;
    }
};

// Full reduction of h modulo monic reducers.
Terms full_reduce(const Ring& ring, Terms h, const Reducers& red) {
    const Field& f = ring.field();
    Terms rem, buf;
    std::size_t pos = 0;
    while (pos < h.size()) {
        const Term lt = h[pos];
        const int k = red.find(lt.mono);
        if (k < 0) {
            rem.push_back(lt);
            ++pos;
            continue;
        }
        const Terms& g = *red.polys[static_cast<std::size_t>(k)];
        const Monomial m = lt.mono / g.front().mono;
        sub_mul_merge(ring, h, pos + 1, g, 1, m, lt.coeff, buf);
        h.swap(buf);
        pos = 0;
    }
    (void)f;
    return rem;
}

void make_monic(const Field& f, Terms& t) {
    if (t.empty() || t.front().coeff == 1) return;
    const Elem inv = f.inv(t.front().coeff);
    for (auto& x : t) x.coeff = f.mul(x.coeff, inv);
}

struct Pair {
    std::size_t i, j;
    Monomial lcm;
    unsigned sugar;
};

class Buchberger {
public:
    Buchberger(const RingPtr& ring, const GbOptions& opts) : ring_(ring), r_(*ring), opts_(opts) {}

    std::vector<MultiPoly> run(std::vector<MultiPoly> gens) {
        // Seed: interreduce inputs lightly by inserting them one at a time in
        // increasing order of leading monomial.
        std::vector<Terms> input;
        for (auto& g : gens) {
            if (g.is_zero()) continue;
            Terms t = g.terms();
            make_monic(r_.field(), t);
            input.push_back(std::move(t));
        }
        std::sort(input.begin(), input.end(), [&](const Terms& a, const Terms& b) {
            const unsigned da = degree_of(a), db = degree_of(b);
            if (da != db) return da < db;
            return r_.compare(a.front().mono, b.front().mono) < 0;
        });
        for (auto& t : input) {
            const unsigned s = degree_of(t);
            Terms h = full_reduce(r_, std::move(t), active_reducers());
            if (h.empty()) continue;
            make_monic(r_.field(), h);
            insert(std::move(h), s);
        }
        std::size_t processed = 0;
        while (!pairs_.empty()) {
            if (++processed > opts_.max_pairs) throw ResourceError("Groebner pair budget exhausted");
            const Pair p = pop_pair();
            Terms s = spoly(p);
            Terms h = full_reduce(r_, std::move(s), active_reducers());
            if (h.empty()) continue;
            make_monic(r_.field(), h);
            insert(std::move(h), p.sugar);
        }
        return finish();
    }

private:
    static unsigned degree_of(const Terms& t) {
        unsigned d = 0;
        for (const auto& x : t) d = std::max(d, x.mono.degree());
        return d;
    }

    const Reducers& active_reducers() {
        if (reducers_dirty_) {
            reducers_ = Reducers{};
            for (std::size_t k = 0; k < basis_.size(); ++k)
                if (active_[k]) reducers_.add(&basis_[k]);
            reducers_dirty_ = false;
        }
        return reducers_;
    }

    Terms spoly(const Pair& p) const {
        const Terms& a = basis_[p.i];
        const Terms& b = basis_[p.j];
        const Monomial ma = p.lcm / a.front().mono;
        const Monomial mb = p.lcm / b.front().mono;
        Terms am;
        am.reserve(a.size());
        for (std::size_t k = 1; k < a.size(); ++k) am.push_back({a[k].mono * ma, a[k].coeff});
        Terms out;
        sub_mul_merge(r_, am, 0, b, 1, mb, 1, out);
        return out;
    }

    Pair pop_pair() {
        std::size_t best = 0;
        for (std::size_t k = 1; k < pairs_.size(); ++k) {
            const Pair& a = pairs_[k];
            const Pair& b = pairs_[best];
            if (a.sugar != b.sugar ? a.sugar < b.sugar
                                   : (a.lcm.degree() != b.lcm.degree() ? a.lcm.degree() < b.lcm.degree()
                                                                       : (a.i != b.i ? a.i < b.i : a.j < b.j)))
                best = k;
        }
        Pair p = pairs_[best];
        pairs_[best] = pairs_.back();
        pairs_.pop_back();
        return p;
    }

    // Gebauer-Moeller update for the new element h.
    void insert(Terms h, unsigned sugar) {
        const std::size_t hk = basis_.size();
        const Monomial lh = h.front().mono;
        const unsigned hdeg = lh.degree();
        basis_.push_back(std::move(h));
        sugar_.push_back(std::max(sugar, hdeg));
        active_.push_back(true);
        reducers_dirty_ = true;

        std::vector<Pair> c;
        for (std::size_t g = 0; g < hk; ++g) {
            if (!active_[g]) continue;
            const Monomial l = Monomial::lcm(basis_[g].front().mono, lh);
            const Monomial& lg = basis_[g].front().mono;
            const unsigned s = std::max(sugar_[g] + l.degree() - lg.degree(), sugar_[hk] + l.degree() - hdeg);
            c.push_back({g, hk, l, s});
        }
        std::vector<Pair> d;
        for (std::size_t a = 0; a < c.size(); ++a) {
            const Pair& p = c[a];
            const bool coprime = basis_[p.i].front().mono.coprime(lh);
            bool keep = coprime;
            if (!keep) {
                keep = true;
                for (std::size_t b = a + 1; b < c.size() && keep; ++b)
                    if (c[b].lcm.divides(p.lcm)) keep = false;
                for (std::size_t b = 0; b < d.size() && keep; ++b)
                    if (d[b].lcm.divides(p.lcm)) keep = false;
            }
            if (keep) d.push_back(p);
        }
        std::vector<Pair> kept;
        kept.reserve(pairs_.size() + d.size());
        for (const Pair& p : pairs_) {
            if (lh.divides(p.lcm)) {
                const Monomial l1 = Monomial::lcm(basis_[p.i].front().mono, lh);
                const Monomial l2 = Monomial::lcm(basis_[p.j].front().mono, lh);
                if (l1 != p.lcm && l2 != p.lcm) continue;
            }
            kept.push_back(p);
        }
        for (const Pair& p : d)
            if (!basis_[p.i].front().mono.coprime(lh)) kept.push_back(p);
        pairs_.swap(kept);
        for (std::size_t g = 0; g < hk; ++g)
            if (active_[g] && lh.divides(basis_[g].front().mono)) active_[g] = false;
    }

    std::vector<MultiPoly> finish() {
        std::vector<std::size_t> idx;
        for (std::size_t k = 0; k < basis_.size(); ++k)
            if (active_[k]) idx.push_back(k);
        // Minimalize (defensive; active elements already have pairwise
        // non-dividing leading monomials).
        std::vector<std::size_t> minimal;
        for (std::size_t a : idx) {
            bool redundant = false;
            for (std::size_t b : idx)
                if (a != b && basis_[b].front().mono.divides(basis_[a].front().mono) &&
                    (basis_[b].front().mono != basis_[a].front().mono || b < a)) {
                    redundant = true;
                    break;
                }
            if (!redundant) minimal.push_back(a);
        }
        std::vector<Terms> out;
        for (std::size_t a : minimal) {
            Reducers red;
            for (std::size_t b : minimal)
                if (b != a) red.add(&basis_[b]);
            Terms tail(basis_[a].begin() + 1, basis_[a].end());
            Terms reduced = full_reduce(r_, std::move(tail), red);
            Terms full;
            full.reserve(reduced.size() + 1);
            full.push_back(basis_[a].front());
            full.insert(full.end(), reduced.begin(), reduced.end());
            out.push_back(std::move(full));
        }
        std::sort(out.begin(), out.end(),
                  [&](const Terms& a, const Terms& b) { return r_.compare(a.front().mono, b.front().mono) < 0; });
        std::vector<MultiPoly> result;
        result.reserve(out.size());
        for (auto& t : out) result.push_back(MultiPoly::from_sorted_terms(ring_, std::move(t)));
        return result;
    }

    RingPtr ring_;
    const Ring& r_;
    GbOptions opts_;
    std::vector<Terms> basis_;
    std::vector<unsigned> sugar_;
    std::vector<bool> active_;
    std::vector<Pair> pairs_;
    Reducers reducers_;
    bool reducers_dirty_ = true;
};

}  // namespace

std::vector<MultiPoly> buchberger(std::vector<MultiPoly> gens, const GbOptions& opts) {
    if (gens.empty()) return {};
    const RingPtr ring = gens.front().ring();
    for (const auto& g : gens)
        if (!(*g.ring() == *ring)) throw ArgumentError("generators live in different rings");
    return Buchberger(ring, opts).run(std::move(gens));
}

MultiPoly reduce(const MultiPoly& f, std::span<const MultiPoly> basis) {
    Reducers red;
    std::vector<Terms> monic_copies;
    monic_copies.reserve(basis.size());
    for (const auto& b : basis) {
        if (b.is_zero()) continue;
        if (!(*b.ring() == *f.ring())) throw ArgumentError("reduction basis lives in another ring");
        Terms t = b.terms();
        make_monic(f.field(), t);
        monic_copies.push_back(std::move(t));
    }
    for (const auto& t : monic_copies) red.add(&t);
    return MultiPoly::from_sorted_terms(f.ring(), full_reduce(*f.ring(), f.terms(), red));
}

MultiPoly exact_divide(const MultiPoly& f, const MultiPoly& g) {
    if (g.is_zero()) throw DomainError("division by the zero polynomial");
    const Ring& ring = *f.ring();
    const Field& fd = ring.field();
    const Elem lc_inv = fd.inv(g.leading_coeff());
    const Monomial& lg = g.leading_monomial();
    Terms h = f.terms(), buf;
    std::vector<Term> quotient;
    while (!h.empty()) {
        const Term lt = h.front();
        if (!lg.divides(lt.mono)) throw ArgumentError("polynomial division is not exact");
        const Monomial m = lt.mono / lg;
        const Elem c = fd.mul(lt.coeff, lc_inv);
        quotient.push_back({m, c});
        // h := h - c*m*g; the leading terms cancel.
        Terms scaled;
        sub_mul_merge(ring, h, 1, g.terms(), 1, m, c, buf);
        h.swap(buf);
    }
    return MultiPoly::from_terms(f.ring(), std::move(quotient));
}

Ideal::Ideal(RingPtr ring, std::vector<MultiPoly> gens)
    : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {
    for (auto& g : gens) {
        if (!g.ring()->compatible(*ring_)) throw ArgumentError("generator lives in another ring");
        if (g.is_zero()) continue;
        gens_.push_back(g.in_ring(ring_));
    }
}

const std::vector<MultiPoly>& Ideal::groebner(const MonomialOrder& order) const {
    {
        std::lock_guard<std::mutex> lock(cache_->mu);
        for (const auto& [o, b] : cache_->bases)
            if (o == order) return *b;
    }
    const RingPtr target = order == ring_->order() ? ring_ : ring_->with_order(order);
    std::vector<MultiPoly> gens;
    gens.reserve(gens_.size());
    for (const auto& g : gens_) gens.push_back(g.in_ring(target));
    auto basis = std::make_shared<const std::vector<MultiPoly>>(buchberger(std::move(gens), options));
    std::lock_guard<std::mutex> lock(cache_->mu);
    for (const auto& [o, b] : cache_->bases)
        if (o == order) return *b;
    cache_->bases.emplace_back(order, std::move(basis));
    return *cache_->bases.back().second;
}

MultiPoly Ideal::normal_form(const MultiPoly& f) const {
    const auto& gb = groebner();
    return reduce(f.in_ring(ring_), gb);
}

MultiPoly Ideal::normal_form(const MultiPoly& f, const MonomialOrder& order) const {
    const auto& gb = groebner(order);
    if (gb.empty()) return f.in_ring(ring_->with_order(order));
    return reduce(f.in_ring(gb.front().ring()), gb);
}

bool Ideal::contains(const Ideal& other) const {
    for (const auto& g : other.generators())
        if (!contains(g)) return false;
    return true;
}

bool Ideal::is_unit() const {
    const auto& gb = groebner();
    return gb.size() == 1 && gb.front().is_constant();
}

bool Ideal::is_zero() const { return gens_.empty(); }

bool Ideal::is_homogeneous() const {
    for (const auto& g : gens_)
        if (!g.is_homogeneous()) return false;
    return true;
}

bool Ideal::operator==(const Ideal& o) const {
    if (!ring_->compatible(*o.ring_)) return false;
    const auto& a = groebner();
    const auto& b = o.groebner(ring_->order());
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return false;
    return true;
}

Ideal Ideal::operator+(const Ideal& o) const {
    std::vector<MultiPoly> g = gens_;
    for (const auto& x : o.gens_) g.push_back(x.in_ring(ring_));
    Ideal r(ring_, std::move(g));
    r.options = options;
    return r;
}

Ideal Ideal::operator*(const Ideal& o) const {
    std::vector<MultiPoly> g;
    for (const auto& a : gens_)
        for (const auto& b : o.gens_) g.push_back(a * b.in_ring(ring_));
    Ideal r(ring_, std::move(g));
    r.options = options;
    return r;
}

Ideal Ideal::with_generator(const MultiPoly& f) const {
    std::vector<MultiPoly> g = gens_;
    g.push_back(f.in_ring(ring_));
    Ideal r(ring_, std::move(g));
    r.options = options;
    return r;
}

}  // namespace dpk
