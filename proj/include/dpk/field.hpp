#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace dpk {

/// A field element. For F_p it is the canonical residue in [0, p); for
/// F_{p^k} it encodes the residue polynomial c_0 + c_1 t + ... as the
/// base-p integer c_0 + c_1 p + ... so the prime subfield keeps its codes.
using Elem = std::uint32_t;

bool is_prime(std::uint64_t n);

/// Finite field context F_{p^k}, k <= 4. Cheap to copy; arithmetic tables
/// for extensions are shared and immutable.
class Field {
public:
    static constexpr unsigned kMaxDegree = 4;

    Field() : Field(prime(2)) {}

    static Field prime(std::uint32_t p);
    /// Extension with the lexicographically first monic irreducible modulus,
    /// comparing coefficient vectors from t^{k-1} down to t^0.
    static Field extension(std::uint32_t p, unsigned k);
    /// Extension with an explicit monic modulus (coefficients low to high).
    static Field with_modulus(std::uint32_t p, std::vector<Elem> modulus);

    std::uint32_t characteristic() const noexcept { return p_; }
    unsigned degree() const noexcept { return k_; }
    std::uint64_t order() const noexcept { return q_; }
    bool is_prime_field() const noexcept { return k_ == 1; }
    /// Monic modulus, coefficients low to high; empty for prime fields.
    const std::vector<Elem>& modulus() const noexcept { return modulus_; }

    Elem from_int(long long v) const noexcept {
        long long r = v % static_cast<long long>(p_);
        return static_cast<Elem>(r < 0 ? r + p_ : r);
    }
    /// Class of t in F_p[t]/(modulus); for prime fields returns 0.
    Elem generator() const noexcept { return k_ == 1 ? 0 : p_; }

    Elem add(Elem a, Elem b) const noexcept {
        if (k_ == 1) {
            Elem s = a + b;
            return s >= p_ ? s - p_ : s;
        }
        return add_ext(a, b);
    }
    Elem neg(Elem a) const noexcept {
        if (k_ == 1) return a == 0 ? 0 : p_ - a;
        return neg_ext(a);
    }
    Elem sub(Elem a, Elem b) const noexcept { return add(a, neg(b)); }
    Elem mul(Elem a, Elem b) const noexcept {
        if (k_ == 1)
            return static_cast<Elem>((static_cast<std::uint64_t>(a) * b) % p_);
        return mul_ext(a, b);
    }
    /// Throws DomainError on zero.
    Elem inv(Elem a) const;
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
    Elem pow(Elem a, std::uint64_t e) const noexcept;
    /// The unique b with b^p = a (inverse Frobenius).
    Elem frobenius_root(Elem a) const noexcept;

    /// Coordinates over F_p in the power basis 1, t, ..., t^{k-1}.
    std::vector<std::uint32_t> coordinates(Elem a) const;
    Elem from_coordinates(const std::vector<std::uint32_t>& c) const;

    std::string format(Elem a) const;

    bool operator==(const Field& o) const noexcept {
        return p_ == o.p_ && k_ == o.k_ && modulus_ == o.modulus_;
    }
    bool operator!=(const Field& o) const noexcept { return !(*this == o); }
    /// True when `sub` is F_p itself or equal to this field.
    bool extends(const Field& sub) const noexcept {
        return *this == sub || (sub.k_ == 1 && sub.p_ == p_);
    }

private:
    struct Tables;

    Field(std::uint32_t p, unsigned k, std::vector<Elem> modulus);
    Elem add_ext(Elem a, Elem b) const noexcept;
    Elem neg_ext(Elem a) const noexcept;
    Elem mul_ext(Elem a, Elem b) const noexcept;

    std::uint32_t p_ = 2;
    unsigned k_ = 1;
    std::uint64_t q_ = 2;
    std::vector<Elem> modulus_;
    std::shared_ptr<const Tables> tables_;
};

/// True iff the monic polynomial (coefficients low to high) is irreducible
/// over F_p. Brute-force trial division; intended for degree <= 4.
bool is_irreducible_mod_p(const std::vector<Elem>& monic, std::uint32_t p);

}  // namespace dpk
