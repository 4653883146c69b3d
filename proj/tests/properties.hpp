#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

// Randomized and exhaustive property suites shared by the unit tests and the
// acceptance runner. Each returns the number of cases examined and the first
// counterexample, if any.
namespace dpk::props {

struct Outcome {
    std::string name;
    std::size_t cases = 0;
    std::string failure;
    bool ok() const { return failure.empty(); }
};

Outcome gb_permutation_uniqueness(std::size_t trials, std::uint64_t seed);
Outcome saturation_idempotence(std::size_t trials, std::uint64_t seed);
Outcome membership_two_orders(std::size_t trials, std::uint64_t seed);
Outcome complete_intersection_degree(std::size_t trials, std::uint64_t seed);
Outcome hilbert_function_complement(std::size_t trials, std::uint64_t seed);
Outcome brute_force_membership(std::size_t trials, std::uint64_t seed);

std::vector<Outcome> engine_suite();

Outcome gram_delta_exhaustive(long long bound);
Outcome normalize_exhaustive(long long bound);
Outcome enumeration_up_to(long long max);
Outcome smith_certificates(std::size_t trials, std::uint64_t seed);
Outcome square_six_discriminant_group();

std::vector<Outcome> lattice_suite();

Outcome euler_agreement(long long max_degree);

}  // namespace dpk::props
