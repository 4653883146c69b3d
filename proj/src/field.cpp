#include "dpk/field.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

#include "dpk/errors.hpp"

namespace dpk {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

namespace {

// Dense polynomials over F_p, coefficients low to high.
using ModPoly = std::vector<std::uint32_t>;

void trim(ModPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
    std::int64_t t = 0, nt = 1, r = p, nr = a;
    while (nr != 0) {
        std::int64_t q = r / nr;
        std::tie(t, nt) = std::make_pair(nt, t - q * nt);
        std::tie(r, nr) = std::make_pair(nr, r - q * nr);
    }
    if (t < 0) t += p;
    return static_cast<std::uint32_t>(t);
}

ModPoly rem_mod(ModPoly a, const ModPoly& b, std::uint32_t p) {
    trim(a);
    const std::uint32_t lead_inv = inv_mod(b.back(), p);
    while (a.size() >= b.size()) {
        const std::uint64_t c = static_cast<std::uint64_t>(a.back()) * lead_inv % p;
        const std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) {
            const std::uint64_t sub = c * b[i] % p;
            a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - sub) % p);
        }
        trim(a);
    }
    return a;
}

}  // namespace

bool is_irreducible_mod_p(const std::vector<Elem>& monic, std::uint32_t p) {
    const std::size_t deg = monic.size() - 1;
    if (monic.empty() || monic.back() != 1) throw ArgumentError("modulus must be monic");
    if (deg <= 1) return deg == 1;
    // Try every monic divisor of degree 1..deg/2.
    for (std::size_t d = 1; d <= deg / 2; ++d) {
        std::uint64_t count = 1;
        for (std::size_t i = 0; i < d; ++i) count *= p;
        for (std::uint64_t code = 0; code < count; ++code) {
            ModPoly g(d + 1);
            std::uint64_t c = code;
            for (std::size_t i = 0; i < d; ++i) {
                g[i] = static_cast<std::uint32_t>(c % p);
                c /= p;
            }
            g[d] = 1;
            if (rem_mod(monic, g, p).empty()) return false;
        }
    }
    return true;
}

struct Field::Tables {
    std::vector<Elem> exp;            // exp[i] = g^i, i in [0, q-1)
    std::vector<std::uint32_t> log;   // log[a] for a != 0
    std::vector<std::uint16_t> add;   // q*q table when small, else empty
    std::vector<Elem> neg;
};

Field Field::prime(std::uint32_t p) {
    if (!is_prime(p)) throw ArgumentError("characteristic " + std::to_string(p) + " is not prime");
    if (p >= (1u << 31)) throw ArgumentError("characteristic too large");
    return Field(p, 1, {});
}

Field Field::extension(std::uint32_t p, unsigned k) {
    if (!is_prime(p)) throw ArgumentError("characteristic " + std::to_string(p) + " is not prime");
    if (k == 0 || k > kMaxDegree) throw ArgumentError("extension degree must be in [1, 4]");
    if (k == 1) return prime(p);
    // Enumerate c_{k-1} ... c_0 lexicographically; the code counts with c_0
    // as least significant digit, which realizes exactly that order.
    std::uint64_t count = 1;
    for (unsigned i = 0; i < k; ++i) count *= p;
    for (std::uint64_t code = 0; code < count; ++code) {
        std::vector<Elem> m(k + 1);
        std::uint64_t c = code;
        for (unsigned i = 0; i < k; ++i) {
            m[i] = static_cast<Elem>(c % p);
            c /= p;
        }
        m[k] = 1;
        if (is_irreducible_mod_p(m, p)) return Field(p, k, std::move(m));
    }
    throw Error("no irreducible polynomial found");  // unreachable for prime p
}

Field Field::with_modulus(std::uint32_t p, std::vector<Elem> modulus) {
    if (!is_prime(p)) throw ArgumentError("characteristic " + std::to_string(p) + " is not prime");
    const std::size_t k = modulus.empty() ? 0 : modulus.size() - 1;
    if (k == 0 || k > kMaxDegree) throw ArgumentError("modulus degree must be in [1, 4]");
    for (auto& c : modulus) c %= p;
    if (modulus.back() != 1) throw ArgumentError("modulus must be monic");
    if (!is_irreducible_mod_p(modulus, p)) throw ArgumentError("modulus is reducible");
    if (k == 1) return prime(p);
    return Field(p, static_cast<unsigned>(k), std::move(modulus));
}

Field::Field(std::uint32_t p, unsigned k, std::vector<Elem> modulus)
    : p_(p), k_(k), modulus_(std::move(modulus)) {
    q_ = 1;
    for (unsigned i = 0; i < k; ++i) q_ *= p;
    if (k == 1) return;
    if (q_ > (1u << 22)) throw ArgumentError("extension field too large for table arithmetic");

    auto tables = std::make_shared<Tables>();
    const auto q = static_cast<std::uint32_t>(q_);

    auto to_poly = [&](Elem a) {
        ModPoly v(k);
        for (unsigned i = 0; i < k; ++i) {
            v[i] = a % p;
            a /= p;
        }
        return v;
    };
    auto from_poly = [&](const ModPoly& v) {
        Elem a = 0;
        for (unsigned i = k; i-- > 0;) a = a * p + (i < v.size() ? v[i] : 0);
        return a;
    };
    auto slow_mul = [&](Elem a, Elem b) {
        const ModPoly x = to_poly(a), y = to_poly(b);
        ModPoly prod(2 * k - 1, 0);
        for (unsigned i = 0; i < k; ++i)
            for (unsigned j = 0; j < k; ++j)
                prod[i + j] = static_cast<std::uint32_t>(
                    (prod[i + j] + static_cast<std::uint64_t>(x[i]) * y[j]) % p);
        return from_poly(rem_mod(prod, modulus_, p));
    };

    // Find a primitive element by brute force over small codes.
    tables->exp.assign(q - 1, 0);
    tables->log.assign(q, 0);
    for (Elem g = 2; g < q; ++g) {
        Elem x = 1;
        std::uint32_t i = 0;
        bool ok = true;
        for (; i < q - 1; ++i) {
            if (i > 0 && x == 1) {
                ok = false;
                break;
            }
            tables->exp[i] = x;
            x = slow_mul(x, g);
        }
        if (ok && x == 1) break;
    }
    for (std::uint32_t i = 0; i < q - 1; ++i) tables->log[tables->exp[i]] = i;

    tables->neg.resize(q);
    for (Elem a = 0; a < q; ++a) {
        ModPoly v = to_poly(a);
        for (auto& c : v) c = (p - c) % p;
        tables->neg[a] = from_poly(v);
    }
    if (q <= 1024) {
        tables->add.resize(static_cast<std::size_t>(q) * q);
        for (Elem a = 0; a < q; ++a) {
            const ModPoly x = to_poly(a);
            for (Elem b = 0; b < q; ++b) {
                const ModPoly y = to_poly(b);
                ModPoly s(k);
                for (unsigned i = 0; i < k; ++i) s[i] = (x[i] + y[i]) % p;
                tables->add[static_cast<std::size_t>(a) * q + b] =
                    static_cast<std::uint16_t>(from_poly(s));
            }
        }
    }
    tables_ = std::move(tables);
}

Elem Field::add_ext(Elem a, Elem b) const noexcept {
    if (!tables_->add.empty()) return tables_->add[static_cast<std::size_t>(a) * q_ + b];
    Elem r = 0, scale = 1;
    for (unsigned i = 0; i < k_; ++i) {
        const Elem s = (a % p_ + b % p_) % p_;
        r += s * scale;
        scale *= p_;
        a /= p_;
        b /= p_;
    }
    return r;
}

Elem Field::neg_ext(Elem a) const noexcept { return tables_->neg[a]; }

Elem Field::mul_ext(Elem a, Elem b) const noexcept {
    if (a == 0 || b == 0) return 0;
    std::uint64_t e = static_cast<std::uint64_t>(tables_->log[a]) + tables_->log[b];
    if (e >= q_ - 1) e -= q_ - 1;
    return tables_->exp[e];
}

Elem Field::inv(Elem a) const {
    if (a == 0) throw DomainError("inverse of zero");
    if (k_ == 1) return inv_mod(a, p_);
    const std::uint32_t l = tables_->log[a];
    return tables_->exp[l == 0 ? 0 : (q_ - 1 - l)];
}

Elem Field::pow(Elem a, std::uint64_t e) const noexcept {
    Elem r = 1;
    while (e > 0) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

Elem Field::frobenius_root(Elem a) const noexcept {
    // a^(q/p) is the inverse of x -> x^p on F_q.
    return pow(a, q_ / p_);
}

std::vector<std::uint32_t> Field::coordinates(Elem a) const {
    std::vector<std::uint32_t> c(k_);
    for (unsigned i = 0; i < k_; ++i) {
        c[i] = a % p_;
        a /= p_;
    }
    return c;
}

Elem Field::from_coordinates(const std::vector<std::uint32_t>& c) const {
    if (c.size() > k_) throw ArgumentError("too many coordinates for field");
    Elem a = 0;
    for (std::size_t i = c.size(); i-- > 0;) a = a * p_ + (c[i] % p_);
    return a;
}

std::string Field::format(Elem a) const {
    if (k_ == 1) return std::to_string(a);
    const auto c = coordinates(a);
    std::ostringstream os;
    bool first = true;
    for (unsigned i = k_; i-- > 0;) {
        if (c[i] == 0) continue;
        if (!first) os << "+";
        first = false;
        if (i == 0) {
            os << c[i];
        } else {
            if (c[i] != 1) os << c[i] << "*";
            os << "t";
            if (i > 1) os << "^" << i;
        }
    }
    if (first) os << "0";
    return os.str();
}

}  // namespace dpk
