#include <gtest/gtest.h>

#include "dpk/errors.hpp"
#include "dpk/lattice.hpp"
#include "properties.hpp"

using namespace dpk;

namespace {

void expect_ok(const props::Outcome& o) {
    EXPECT_TRUE(o.ok()) << o.name << ": " << o.failure;
    EXPECT_GT(o.cases, 0u);
}

}  // namespace

TEST(LatticeProperties, GramDeterminantIsDelta) { expect_ok(props::gram_delta_exhaustive(20)); }
TEST(LatticeProperties, NormalizationInvariance) { expect_ok(props::normalize_exhaustive(20)); }
TEST(LatticeProperties, EnumerationTo200) { expect_ok(props::enumeration_up_to(200)); }
TEST(LatticeProperties, SmithCertificates) { expect_ok(props::smith_certificates(1000, 41)); }
TEST(LatticeProperties, SquareSixComplement) { expect_ok(props::square_six_discriminant_group()); }
TEST(LatticeProperties, EulerAgreement) { expect_ok(props::euler_agreement(8)); }

TEST(Lattice, Enumeration) {
    const auto e = admissible_discriminants(50);
    ASSERT_EQ(e.values.size(), 4u);
    const std::vector<long long> want{9, 21, 33, 45};
    for (std::size_t i = 0; i < 4; ++i) EXPECT_EQ(e.values[i].delta, want[i]);
    EXPECT_EQ(e.values[0].a, 1);
    EXPECT_EQ(e.values[0].b, 1);
    EXPECT_TRUE(e.small_delta_warning);
    EXPECT_FALSE(e.warning.empty());
    EXPECT_THROW(admissible_discriminants(8), ArgumentError);
}

TEST(Lattice, StandardLattices) {
    EXPECT_EQ(lattice_e8().determinant(), 1);
    EXPECT_TRUE(lattice_e8().is_even());
    EXPECT_EQ(lattice_a2().determinant(), 3);
    EXPECT_EQ(lattice_u().determinant(), -1);
    EXPECT_EQ(discriminant_group(lattice_a2()), IntVector{3});
    EXPECT_TRUE(discriminant_group(lattice_e8()).empty());
    EXPECT_THROW(discriminant_group(GramLattice(int_matrix({{1, 1}, {1, 1}}))), LatticeError);
}

TEST(Lattice, DeltaValues) {
    EXPECT_EQ(delta(1, 1), 9);
    EXPECT_EQ(delta(0, 2), 33);
    EXPECT_EQ(delta(-1, 3), 21);
    for (long long a = -5; a <= 5; ++a)
        for (long long b = -5; b <= 5; ++b)
            if ((a - b) % 2 == 0) EXPECT_EQ(((delta(a, b) % 12) + 12) % 12, 9);
}

TEST(Lattice, EvenComplementExactlyForMatchingParity) {
    for (long long a = -6; a <= 6; ++a)
        for (long long b = -6; b <= 6; ++b) EXPECT_EQ(evenness_check(a, b), (a - b) % 2 == 0) << a << " " << b;
}

TEST(Lattice, EulerValues) {
    EXPECT_EQ(euler_p2(6, 6, 9), 27);
    const auto n = strata_p2(6, 6, 9);
    EXPECT_EQ(n.b_III, 36);
    EXPECT_EQ(n.b_IV, 9);
    EXPECT_THROW(strata_p2(0, 6, 0), ArgumentError);
}

TEST(Lattice, SmithSmallCases) {
    const SmithForm s = smith_normal_form(int_matrix({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}}));
    EXPECT_EQ(s.diagonal, (IntVector{2, 6, 12}));
    const SmithForm z = smith_normal_form(int_matrix({{0, 0}, {0, 0}, {0, 0}}));
    EXPECT_EQ(z.diagonal, (IntVector{0, 0}));
}
