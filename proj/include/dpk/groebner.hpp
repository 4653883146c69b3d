#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <span>
#include <vector>

#include "dpk/poly.hpp"

namespace dpk {

struct GbOptions {
    /// Budget on processed critical pairs; exceeding it raises ResourceError.
    std::size_t max_pairs = 5'000'000;
};

/// Reduced Groebner basis of the ideal generated by `gens` with respect to
/// the order of their ring. Pair selection uses the sugar degree (the
/// normal strategy on homogeneous input), ties broken by lowest pair
/// index; Buchberger's criteria are applied in Gebauer-Moeller form. The
/// result is monic and sorted by increasing leading monomial.
std::vector<MultiPoly> buchberger(std::vector<MultiPoly> gens, const GbOptions& opts = {});

/// Remainder of multivariate division of f by `basis` (fully reduced).
/// `basis` must share f's ring.
MultiPoly reduce(const MultiPoly& f, std::span<const MultiPoly> basis);

/// Division by a single polynomial: returns the quotient, throws
/// ArgumentError when the division is not exact.
MultiPoly exact_divide(const MultiPoly& f, const MultiPoly& g);

/// An ideal: generators plus a write-once cache of reduced Groebner bases
/// keyed by monomial order. Copies share the cache.
class Ideal {
public:
    Ideal(RingPtr ring, std::vector<MultiPoly> gens);
    explicit Ideal(RingPtr ring) : Ideal(std::move(ring), {}) {}

    const RingPtr& ring() const noexcept { return ring_; }
    const std::vector<MultiPoly>& generators() const noexcept { return gens_; }

    /// Reduced basis in the ring's own order.
    const std::vector<MultiPoly>& groebner() const { return groebner(ring_->order()); }
    /// Reduced basis for another order; elements live in ring()->with_order(order).
    const std::vector<MultiPoly>& groebner(const MonomialOrder& order) const;

    MultiPoly normal_form(const MultiPoly& f) const;
    MultiPoly normal_form(const MultiPoly& f, const MonomialOrder& order) const;
    bool contains(const MultiPoly& f) const { return normal_form(f).is_zero(); }
    bool contains(const Ideal& other) const;
    bool is_unit() const;
    bool is_zero() const;
    bool is_homogeneous() const;
    /// Equality of ideals (reduced bases coincide).
    bool operator==(const Ideal& o) const;
    bool operator!=(const Ideal& o) const { return !(*this == o); }

    Ideal operator+(const Ideal& o) const;
    Ideal operator*(const Ideal& o) const;
    Ideal with_generator(const MultiPoly& f) const;
    /// Same ideal with the reduced basis as generators.
    Ideal reduced() const { return Ideal(ring_, groebner()); }

    GbOptions options;

private:
    struct Cache {
        std::mutex mu;
        std::vector<std::pair<MonomialOrder, std::shared_ptr<const std::vector<MultiPoly>>>> bases;
    };

    RingPtr ring_;
    std::vector<MultiPoly> gens_;
    std::shared_ptr<Cache> cache_;
};

}  // namespace dpk
