#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>

#include "dpk/errors.hpp"

namespace dpk {

constexpr std::size_t kMaxVars = 12;

/// Exponent vector with cached total degree and a short divisibility mask.
/// Unused slots beyond the ring's arity stay zero.
class Monomial {
public:
    Monomial() = default;

    std::uint8_t operator[](std::size_t i) const noexcept { return exp_[i]; }
    unsigned degree() const noexcept { return deg_; }
    std::uint64_t mask() const noexcept { return mask_; }
    bool is_one() const noexcept { return deg_ == 0; }

    void set(std::size_t i, unsigned e) {
        if (i >= kMaxVars) throw ArgumentError("variable index out of range");
        if (e > 255) throw ArgumentError("exponent overflow");
        deg_ = static_cast<std::uint16_t>(deg_ - exp_[i] + e);
        exp_[i] = static_cast<std::uint8_t>(e);
        refresh_mask();
    }

    static Monomial variable(std::size_t i, unsigned e = 1) {
        Monomial m;
        m.set(i, e);
        return m;
    }

    /// True iff this divides `other`.
    bool divides(const Monomial& other) const noexcept {
        if ((mask_ & ~other.mask_) != 0) return false;
        for (std::size_t i = 0; i < kMaxVars; ++i)
            if (exp_[i] > other.exp_[i]) return false;
        return true;
    }

    bool coprime(const Monomial& other) const noexcept {
        for (std::size_t i = 0; i < kMaxVars; ++i)
            if (exp_[i] != 0 && other.exp_[i] != 0) return false;
        return true;
    }

    Monomial operator*(const Monomial& o) const {
        Monomial r;
        if (deg_ + o.deg_ <= 255) {
            for (std::size_t i = 0; i < kMaxVars; ++i) r.exp_[i] = static_cast<std::uint8_t>(exp_[i] + o.exp_[i]);
        } else {
            for (std::size_t i = 0; i < kMaxVars; ++i) {
                const unsigned e = unsigned(exp_[i]) + o.exp_[i];
                if (e > 255) throw ArgumentError("exponent overflow");
                r.exp_[i] = static_cast<std::uint8_t>(e);
            }
        }
        r.deg_ = static_cast<std::uint16_t>(deg_ + o.deg_);
        r.refresh_mask();
        return r;
    }

    /// Quotient; requires o | *this.
    Monomial operator/(const Monomial& o) const noexcept {
        Monomial r;
        for (std::size_t i = 0; i < kMaxVars; ++i)
            r.exp_[i] = static_cast<std::uint8_t>(exp_[i] - o.exp_[i]);
        r.deg_ = static_cast<std::uint16_t>(deg_ - o.deg_);
        r.refresh_mask();
        return r;
    }

    static Monomial lcm(const Monomial& a, const Monomial& b) noexcept {
        Monomial r;
        unsigned d = 0;
        for (std::size_t i = 0; i < kMaxVars; ++i) {
            r.exp_[i] = a.exp_[i] > b.exp_[i] ? a.exp_[i] : b.exp_[i];
            d += r.exp_[i];
        }
        r.deg_ = static_cast<std::uint16_t>(d);
        r.refresh_mask();
        return r;
    }

    static Monomial gcd(const Monomial& a, const Monomial& b) noexcept {
        Monomial r;
        unsigned d = 0;
        for (std::size_t i = 0; i < kMaxVars; ++i) {
            r.exp_[i] = a.exp_[i] < b.exp_[i] ? a.exp_[i] : b.exp_[i];
            d += r.exp_[i];
        }
        r.deg_ = static_cast<std::uint16_t>(d);
        r.refresh_mask();
        return r;
    }

    bool operator==(const Monomial& o) const noexcept { return exp_ == o.exp_; }
    bool operator!=(const Monomial& o) const noexcept { return exp_ != o.exp_; }

    std::size_t hash() const noexcept {
        std::size_t h = 1469598103934665603ull;
        for (auto e : exp_) h = (h ^ e) * 1099511628211ull;
        return h;
    }

private:
    void refresh_mask() noexcept {
        std::uint64_t m = 0;
        for (std::size_t i = 0; i < kMaxVars; ++i) {
            const unsigned e = exp_[i] < 4 ? exp_[i] : 4;
            m |= std::uint64_t((1u << e) - 1) << (4 * i);
        }
        mask_ = m;
    }

    std::array<std::uint8_t, kMaxVars> exp_{};
    std::uint16_t deg_ = 0;
    std::uint64_t mask_ = 0;
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const noexcept { return m.hash(); }
};

/// Monomial orders. `Elimination(k)` is the product order grevlex(first k
/// variables) > grevlex(rest), an elimination order for the first block.
class MonomialOrder {
public:
    enum class Kind { Grevlex, Lex, Elimination };

    static MonomialOrder grevlex() { return MonomialOrder(Kind::Grevlex, 0); }
    static MonomialOrder lex() { return MonomialOrder(Kind::Lex, 0); }
    static MonomialOrder elimination(unsigned first_block) {
        return MonomialOrder(Kind::Elimination, first_block);
    }

    Kind kind() const noexcept { return kind_; }
    unsigned block() const noexcept { return block_; }
    bool degree_compatible() const noexcept { return kind_ == Kind::Grevlex; }

    /// Negative, zero, or positive as a < b, a == b, a > b.
    int compare(const Monomial& a, const Monomial& b, std::size_t nvars) const noexcept {
        switch (kind_) {
            case Kind::Grevlex:
                return grevlex_range(a, b, 0, nvars, a.degree(), b.degree());
            case Kind::Lex:
                for (std::size_t i = 0; i < nvars; ++i)
                    if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
                return 0;
            case Kind::Elimination: {
                unsigned da = 0, db = 0;
                for (std::size_t i = 0; i < block_; ++i) {
                    da += a[i];
                    db += b[i];
                }
                if (int c = grevlex_range(a, b, 0, block_, da, db)) return c;
                return grevlex_range(a, b, block_, nvars, a.degree() - da, b.degree() - db);
            }
        }
        return 0;
    }

    bool operator==(const MonomialOrder& o) const noexcept {
        return kind_ == o.kind_ && block_ == o.block_;
    }
    bool operator!=(const MonomialOrder& o) const noexcept { return !(*this == o); }

private:
    MonomialOrder(Kind k, unsigned b) : kind_(k), block_(b) {}

    static int grevlex_range(const Monomial& a, const Monomial& b, std::size_t lo,
                             std::size_t hi, unsigned da, unsigned db) noexcept {
        if (da != db) return da > db ? 1 : -1;
        for (std::size_t i = hi; i-- > lo;)
            if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
        return 0;
    }

    Kind kind_;
    unsigned block_;
};

}  // namespace dpk
