#pragma once

#include <cstddef>
#include <vector>

#include "dpk/groebner.hpp"

namespace dpk {

/// (I : g) = {f : f g in I}.
Ideal quotient(const Ideal& I, const MultiPoly& g);
/// (I : J) as the intersection of the quotients by J's generators.
Ideal quotient(const Ideal& I, const Ideal& J);

/// (I : g^inf) and (I : J^inf) by iterated quotients until the reduced
/// bases stop changing. Throws ResourceError after `max_iter` rounds.
Ideal saturate(const Ideal& I, const MultiPoly& g, unsigned max_iter = 64);
Ideal saturate(const Ideal& I, const Ideal& J, unsigned max_iter = 64);

/// I intersect J, by eliminating an auxiliary variable from yI + (1-y)J.
Ideal intersect(const Ideal& I, const Ideal& J);

/// I intersected with the subring generated by the variables not in `drop`.
/// The result stays in I's ring.
Ideal eliminate(const Ideal& I, const std::vector<std::size_t>& drop);

/// Ideal generated by the given variables.
Ideal variable_ideal(const RingPtr& ring, const std::vector<std::size_t>& vars);

}  // namespace dpk
