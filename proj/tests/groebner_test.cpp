#include <gtest/gtest.h>

#include "dpk/errors.hpp"
#include "dpk/graded.hpp"
#include "dpk/groebner.hpp"
#include "dpk/ideal_ops.hpp"
#include "dpk/parse.hpp"
#include "dpk/radical.hpp"
#include "dpk/syzygy.hpp"
#include "properties.hpp"
#include "support.hpp"

using namespace dpk;

namespace {

Ideal ideal(const RingPtr& r, std::initializer_list<const char*> gens) {
    std::vector<MultiPoly> g;
    for (const char* s : gens) g.push_back(parse_poly(s, r));
    return Ideal(r, g);
}

RingPtr ring(std::uint32_t p, std::vector<std::string> vars) { return Ring::make(Field::prime(p), std::move(vars)); }

void expect_ok(const props::Outcome& o) {
    EXPECT_TRUE(o.ok()) << o.name << ": " << o.failure;
    EXPECT_GT(o.cases, 0u);
}

}  // namespace

TEST(GroebnerProperties, UniqueUnderPermutation) { expect_ok(props::gb_permutation_uniqueness(100, 101)); }
TEST(GroebnerProperties, SaturationIdempotent) { expect_ok(props::saturation_idempotence(10, 102)); }
TEST(GroebnerProperties, MembershipTwoOrders) { expect_ok(props::membership_two_orders(40, 103)); }
TEST(GroebnerProperties, CompleteIntersectionDegree) { expect_ok(props::complete_intersection_degree(15, 104)); }
TEST(GroebnerProperties, HilbertFunctionComplement) { expect_ok(props::hilbert_function_complement(20, 105)); }
TEST(GroebnerProperties, BruteForceMembership) { expect_ok(props::brute_force_membership(40, 106)); }

TEST(Groebner, ReducedBasisShape) {
    const RingPtr r = ring(7, {"x", "y", "z"});
    const Ideal I = ideal(r, {"x^2 - y*z", "x*y - z^2", "y^2 - x*z + 3*z^2"});
    const auto& gb = I.groebner();
    for (std::size_t i = 0; i < gb.size(); ++i) {
        EXPECT_EQ(gb[i].leading_coeff(), 1u);
        for (std::size_t j = 0; j < gb.size(); ++j) {
            if (i == j) continue;
            for (const auto& t : gb[j].terms()) EXPECT_FALSE(gb[i].leading_monomial().divides(t.mono));
        }
    }
    for (const auto& g : I.generators()) EXPECT_TRUE(reduce(g, gb).is_zero());
}

TEST(Groebner, PairBudget) {
    const RingPtr r = ring(5, {"x", "y", "z", "w"});
    Ideal I = ideal(r, {"x^3 + y^2*z + w^3", "x*y*z + z^3 + w^2*x", "y^3 + x*w^2 + z*w^2"});
    I.options.max_pairs = 3;
    EXPECT_THROW(I.groebner(), ResourceError);
}

TEST(Groebner, UnitAndZero) {
    const RingPtr r = ring(5, {"x", "y"});
    EXPECT_TRUE(ideal(r, {"x", "x + 1"}).is_unit());
    EXPECT_TRUE(Ideal(r).is_zero());
    EXPECT_FALSE(ideal(r, {"x*y"}).is_unit());
}

TEST(IdealOps, QuotientSaturationIntersection) {
    const RingPtr r = ring(5, {"x", "y", "z"});
    const Ideal I = ideal(r, {"x^2*y", "x*y^2"});
    EXPECT_EQ(quotient(I, parse_poly("x", r)), ideal(r, {"x*y", "y^2"}));
    EXPECT_EQ(saturate(I, parse_poly("x", r)), ideal(r, {"y"}));
    EXPECT_EQ(saturate(I, ideal(r, {"x", "y"})), ideal(r, {"x*y"}));
    EXPECT_TRUE(saturate(I, parse_poly("x*y", r)).is_unit());
    EXPECT_EQ(intersect(ideal(r, {"x"}), ideal(r, {"y"})), ideal(r, {"x*y"}));
    EXPECT_EQ(intersect(ideal(r, {"x", "y"}), ideal(r, {"y", "z"})), ideal(r, {"y", "x*z"}));
}

TEST(IdealOps, EliminationTwistedCubic) {
    const RingPtr r = ring(7, {"s", "t", "a", "b", "c", "d"});
    const Ideal graph = ideal(r, {"a - s^3", "b - s^2*t", "c - s*t^2", "d - t^3"});
    const Ideal e = eliminate(graph, {0, 1});
    const RingPtr abcd = ring(7, {"a", "b", "c", "d"});
    std::vector<MultiPoly> gens;
    for (const auto& g : e.groebner()) gens.push_back(map_variables(g, abcd, {-1, -1, 0, 1, 2, 3}));
    const Ideal C(abcd, gens);
    EXPECT_EQ(C, ideal(abcd, {"a*c - b^2", "b*d - c^2", "a*d - b*c"}));
    const HilbertData h = hilbert(C);
    EXPECT_EQ(h.dim, 1);
    EXPECT_EQ(h.degree, 3);
    EXPECT_EQ(minimal_generator_degrees(C), (std::vector<unsigned>{2, 2, 2}));
}

TEST(Hilbert, PlaneCurveGenus) {
    const RingPtr r = ring(5, {"x", "y", "z"});
    const HilbertData h = hilbert(ideal(r, {"x^4 + y^4 + z^4"}));
    EXPECT_EQ(h.dim, 1);
    EXPECT_EQ(h.degree, 4);
    EXPECT_EQ(h.polynomial_at(0), Rational(-2));  // 1 - g with g = 3
    for (unsigned d = 4; d < 10; ++d) EXPECT_EQ(Rational(h.hilbert_function(d)), h.polynomial_at(d));
}

TEST(Syzygy, RelationsVanish) {
    const RingPtr r = ring(5, {"x", "y", "z"});
    const std::vector<MultiPoly> gens{parse_poly("x*y", r), parse_poly("y*z", r), parse_poly("x*z", r)};
    const SyzygyModule s = syzygies(gens);
    ASSERT_FALSE(s.syzygies.empty());
    for (const auto& v : s.syzygies) {
        MultiPoly acc(r);
        for (std::size_t i = 0; i < gens.size(); ++i) acc += v[i] * gens[i];
        EXPECT_TRUE(acc.is_zero());
    }
    // Three linear syzygies, as for the ideal of three coordinate points.
    EXPECT_GE(s.syzygies.size(), 2u);
}

TEST(Radical, PointCounts) {
    const RingPtr r = ring(7, {"x", "y", "z"});
    // Four points of P^2, one of them doubled.
    const Ideal pts = intersect(intersect(ideal(r, {"x", "y"}), ideal(r, {"y", "z"})),
                                intersect(ideal(r, {"x - z", "y - z"}), ideal(r, {"x^2", "z"})));
    EXPECT_EQ(hilbert(pts).degree, 5);
    EXPECT_EQ(projective_point_count(pts), 4u);
    const Ideal aff = ideal(r, {"x^2 - 1", "y^3", "z - x"});
    EXPECT_EQ(quotient_dimension(aff), 6u);
    EXPECT_EQ(quotient_dimension(zero_dim_radical(aff)), 2u);
}

TEST(Radical, MultiplicationMatrixEigenvalues) {
    const RingPtr r = ring(7, {"x", "y"});
    const Ideal I = ideal(r, {"x^2 - 3*x + 2", "y - x"});
    const Matrix m = multiplication_matrix(I, parse_poly("x", r));
    ASSERT_EQ(m.rows(), 2u);
    const UniPoly chi = characteristic_polynomial(m);
    EXPECT_EQ(chi.c, (std::vector<Elem>{2, 4, 1}));
}
