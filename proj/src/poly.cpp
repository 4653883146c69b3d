#include "dpk/poly.hpp"

#include <algorithm>
#include <sstream>

namespace dpk {

RingPtr Ring::make(Field field, std::vector<std::string> vars, MonomialOrder order) {
    if (vars.size() > kMaxVars) throw ArgumentError("too many variables");
    for (std::size_t i = 0; i < vars.size(); ++i)
        for (std::size_t j = i + 1; j < vars.size(); ++j)
            if (vars[i] == vars[j]) throw ArgumentError("duplicate variable name " + vars[i]);
    if (order.kind() == MonomialOrder::Kind::Elimination && order.block() > vars.size())
        throw ArgumentError("elimination block larger than the ring");
    return RingPtr(new Ring(std::move(field), std::move(vars), order));
}

int Ring::var_index(const std::string& name) const noexcept {
    for (std::size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i] == name) return static_cast<int>(i);
    return -1;
}

RingPtr Ring::with_order(MonomialOrder order) const { return make(field_, vars_, order); }
RingPtr Ring::with_field(Field field) const { return make(std::move(field), vars_, order_); }

MultiPoly MultiPoly::constant(RingPtr ring, Elem c) {
    MultiPoly p(std::move(ring));
    if (c != 0) p.terms_.push_back({Monomial{}, c});
    return p;
}

MultiPoly MultiPoly::variable(RingPtr ring, std::size_t i) {
    if (i >= ring->nvars()) throw ArgumentError("variable index out of range");
    return monomial(std::move(ring), Monomial::variable(i), 1);
}

MultiPoly MultiPoly::monomial(RingPtr ring, const Monomial& m, Elem c) {
    MultiPoly p(std::move(ring));
    if (c != 0) p.terms_.push_back({m, c});
    return p;
}

MultiPoly MultiPoly::from_terms(RingPtr ring, std::vector<Term> terms) {
    const Ring& r = *ring;
    const Field& f = r.field();
    std::sort(terms.begin(), terms.end(),
              [&](const Term& a, const Term& b) { return r.compare(a.mono, b.mono) > 0; });
    std::vector<Term> out;
    out.reserve(terms.size());
    for (const auto& t : terms) {
        if (!out.empty() && out.back().mono == t.mono) {
            out.back().coeff = f.add(out.back().coeff, t.coeff);
            if (out.back().coeff == 0) out.pop_back();
        } else if (t.coeff != 0) {
            out.push_back(t);
        }
    }
    return from_sorted_terms(std::move(ring), std::move(out));
}

const Term& MultiPoly::leading_term() const {
    if (terms_.empty()) throw ArgumentError("leading term of the zero polynomial");
    return terms_.front();
}

int MultiPoly::degree() const noexcept {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.mono.degree()));
    return d;
}

bool MultiPoly::is_homogeneous() const noexcept {
    for (const auto& t : terms_)
        if (t.mono.degree() != terms_.front().mono.degree()) return false;
    return true;
}

Elem MultiPoly::coeff(const Monomial& m) const noexcept {
    for (const auto& t : terms_)
        if (t.mono == m) return t.coeff;
    return 0;
}

void MultiPoly::check_same_ring(const MultiPoly& o) const {
    if (ring_ != o.ring_ && !(*ring_ == *o.ring_))
        throw ArgumentError("polynomials live in different rings");
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    check_same_ring(o);
    const Ring& r = *ring_;
    const Field& f = r.field();
    std::vector<Term> out;
    out.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
        const int c = r.compare(terms_[i].mono, o.terms_[j].mono);
        if (c > 0) {
            out.push_back(terms_[i++]);
        } else if (c < 0) {
            out.push_back(o.terms_[j++]);
        } else {
            const Elem s = f.add(terms_[i].coeff, o.terms_[j].coeff);
            if (s != 0) out.push_back({terms_[i].mono, s});
            ++i;
            ++j;
        }
    }
    out.insert(out.end(), terms_.begin() + static_cast<std::ptrdiff_t>(i), terms_.end());
    out.insert(out.end(), o.terms_.begin() + static_cast<std::ptrdiff_t>(j), o.terms_.end());
    return from_sorted_terms(ring_, std::move(out));
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r = *this;
    for (auto& t : r.terms_) t.coeff = field().neg(t.coeff);
    return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const { return *this + (-o); }

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    check_same_ring(o);
    if (is_zero() || o.is_zero()) return MultiPoly(ring_);
    const Ring& r = *ring_;
    const Field& f = field();
    const auto& small = terms_.size() <= o.terms_.size() ? terms_ : o.terms_;
    const auto& large = terms_.size() <= o.terms_.size() ? o.terms_ : terms_;
    // Each row small[i] * large is already sorted; merge rows one by one.
    std::vector<Term> acc, row, merged;
    for (const auto& a : small) {
        row.clear();
        row.reserve(large.size());
        for (const auto& b : large) row.push_back({a.mono * b.mono, f.mul(a.coeff, b.coeff)});
        merged.clear();
        merged.reserve(acc.size() + row.size());
        std::size_t i = 0, j = 0;
        while (i < acc.size() && j < row.size()) {
            const int c = r.compare(acc[i].mono, row[j].mono);
            if (c > 0) {
                merged.push_back(acc[i++]);
            } else if (c < 0) {
                merged.push_back(row[j++]);
            } else {
                const Elem s = f.add(acc[i].coeff, row[j].coeff);
                if (s != 0) merged.push_back({acc[i].mono, s});
                ++i;
                ++j;
            }
        }
        merged.insert(merged.end(), acc.begin() + static_cast<std::ptrdiff_t>(i), acc.end());
        merged.insert(merged.end(), row.begin() + static_cast<std::ptrdiff_t>(j), row.end());
        acc.swap(merged);
    }
    return from_sorted_terms(ring_, std::move(acc));
}

MultiPoly MultiPoly::scaled(Elem c) const {
    if (c == 0) return MultiPoly(ring_);
    MultiPoly r = *this;
    for (auto& t : r.terms_) t.coeff = field().mul(t.coeff, c);
    return r;
}

MultiPoly MultiPoly::times_term(const Monomial& m, Elem c) const {
    if (c == 0) return MultiPoly(ring_);
    MultiPoly r = *this;
    for (auto& t : r.terms_) {
        t.mono = t.mono * m;
        t.coeff = field().mul(t.coeff, c);
    }
    return r;
}

MultiPoly MultiPoly::pow(unsigned e) const {
    MultiPoly r = constant(ring_, 1), base = *this;
    while (e > 0) {
        if (e & 1) r = r * base;
        e >>= 1;
        if (e > 0) base = base * base;
    }
    return r;
}

MultiPoly MultiPoly::monic() const {
    if (is_zero()) return *this;
    return scaled(field().inv(leading_coeff()));
}

Elem MultiPoly::evaluate(std::span<const Elem> point, const Field& pf) const {
    if (point.size() != ring_->nvars()) throw ArgumentError("point arity does not match the ring");
    if (!pf.extends(field())) throw ArgumentError("point field does not extend the coefficient field");
    Elem acc = 0;
    for (const auto& t : terms_) {
        Elem v = t.coeff;
        for (std::size_t i = 0; i < ring_->nvars() && v != 0; ++i)
            if (t.mono[i] != 0) v = pf.mul(v, pf.pow(point[i], t.mono[i]));
        acc = pf.add(acc, v);
    }
    return acc;
}

MultiPoly MultiPoly::derivative(std::size_t var) const {
    if (var >= ring_->nvars()) throw ArgumentError("variable index out of range");
    const Field& f = field();
    std::vector<Term> out;
    for (const auto& t : terms_) {
        const unsigned e = t.mono[var];
        if (e == 0) continue;
        const Elem c = f.mul(t.coeff, f.from_int(e));
        if (c == 0) continue;
        Monomial m = t.mono;
        m.set(var, e - 1);
        out.push_back({m, c});
    }
    // Removing one power of a variable keeps the relative order for every
    // order used here, but re-sorting is cheap and safe.
    return from_terms(ring_, std::move(out));
}

MultiPoly MultiPoly::in_ring(const RingPtr& target) const {
    if (target == ring_) return *this;
    if (target->vars() != ring_->vars()) throw ArgumentError("incompatible variables");
    if (!target->field().extends(field())) throw ArgumentError("incompatible coefficient field");
    if (target->order() == ring_->order()) return from_sorted_terms(target, terms_);
    return from_terms(target, terms_);
}

std::string MultiPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    const Field& f = field();
    bool first = true;
    for (const auto& t : terms_) {
        if (!first) os << " + ";
        first = false;
        const bool ext_coeff = !f.is_prime_field() && t.coeff >= f.characteristic();
        std::string c = f.format(t.coeff);
        if (ext_coeff) c = "(" + c + ")";
        if (t.mono.is_one()) {
            os << c;
            continue;
        }
        if (t.coeff != 1) os << c << "*";
        bool first_var = true;
        for (std::size_t i = 0; i < ring_->nvars(); ++i) {
            if (t.mono[i] == 0) continue;
            if (!first_var) os << "*";
            first_var = false;
            os << ring_->vars()[i];
            if (t.mono[i] > 1) os << "^" << unsigned(t.mono[i]);
        }
    }
    return os.str();
}

bool MultiPoly::operator==(const MultiPoly& o) const {
    if (!ring_->compatible(*o.ring_)) return false;
    if (terms_.size() != o.terms_.size()) return false;
    if (ring_->order() == o.ring_->order()) {
        for (std::size_t i = 0; i < terms_.size(); ++i)
            if (terms_[i].mono != o.terms_[i].mono || terms_[i].coeff != o.terms_[i].coeff) return false;
        return true;
    }
    return (*this - o.in_ring(ring_)).is_zero();
}

MultiPoly map_variables(const MultiPoly& f, const RingPtr& target, const std::vector<int>& image) {
    if (image.size() != f.ring()->nvars()) throw ArgumentError("variable map has wrong arity");
    if (!target->field().extends(f.field())) throw ArgumentError("incompatible coefficient field");
    std::vector<Term> out;
    out.reserve(f.size());
    for (const auto& t : f.terms()) {
        Monomial m;
        for (std::size_t i = 0; i < image.size(); ++i) {
            if (t.mono[i] == 0) continue;
            if (image[i] < 0) throw ArgumentError("variable " + f.ring()->vars()[i] + " has no image");
            m.set(static_cast<std::size_t>(image[i]), m[static_cast<std::size_t>(image[i])] + t.mono[i]);
        }
        out.push_back({m, t.coeff});
    }
    return MultiPoly::from_terms(target, std::move(out));
}

MultiPoly substitute(const MultiPoly& f, std::size_t var, Elem value) {
    const Field& fd = f.field();
    std::vector<Term> out;
    out.reserve(f.size());
    for (const auto& t : f.terms()) {
        Monomial m = t.mono;
        const unsigned e = m[var];
        m.set(var, 0);
        out.push_back({m, fd.mul(t.coeff, fd.pow(value, e))});
    }
    return MultiPoly::from_terms(f.ring(), std::move(out));
}

MultiPoly homogenize(const MultiPoly& f, std::size_t var) {
    const int d = f.degree();
    std::vector<Term> out;
    out.reserve(f.size());
    for (const auto& t : f.terms()) {
        if (t.mono[var] != 0) throw ArgumentError("homogenizing variable already occurs");
        Monomial m = t.mono;
        m.set(var, static_cast<unsigned>(d) - t.mono.degree());
        out.push_back({m, t.coeff});
    }
    return MultiPoly::from_terms(f.ring(), std::move(out));
}

namespace {
void enumerate(std::size_t nvars, std::size_t pos, unsigned left, Monomial& cur, std::vector<Monomial>& out) {
    if (pos + 1 == nvars) {
        cur.set(pos, left);
        out.push_back(cur);
        cur.set(pos, 0);
        return;
    }
    for (unsigned e = left + 1; e-- > 0;) {
        cur.set(pos, e);
        enumerate(nvars, pos + 1, left - e, cur, out);
    }
    cur.set(pos, 0);
}
}  // namespace

std::vector<Monomial> monomials_of_degree(std::size_t nvars, unsigned d) {
    std::vector<Monomial> out;
    if (nvars == 0) {
        if (d == 0) out.emplace_back();
        return out;
    }
    Monomial cur;
    enumerate(nvars, 0, d, cur, out);
    const auto order = MonomialOrder::grevlex();
    std::sort(out.begin(), out.end(),
              [&](const Monomial& a, const Monomial& b) { return order.compare(a, b, nvars) > 0; });
    return out;
}

MultiPoly combine(const RingPtr& ring, const std::vector<Monomial>& basis, std::span<const Elem> coeffs) {
    if (basis.size() != coeffs.size()) throw ArgumentError("basis/coefficient size mismatch");
    std::vector<Term> terms;
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (coeffs[i] != 0) terms.push_back({basis[i], coeffs[i]});
    return MultiPoly::from_terms(ring, std::move(terms));
}

}  // namespace dpk
