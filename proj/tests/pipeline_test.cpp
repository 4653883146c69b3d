#include <gtest/gtest.h>

#include <memory>

#include "dpk/errors.hpp"
#include "dpk/parse.hpp"
#include "dpk/pipeline.hpp"
#include "support.hpp"

using namespace dpk;

namespace {

struct Example {
    PolyData data = parse_poly_data(embedded_example_data());
    PolyData printed = parse_poly_data(embedded_example_curves());
    RingPtr base = base_ring(data.ring->field());
    NetOfQuadrics net = NetOfQuadrics::from_quadrics({data.get("Q1"), data.get("Q2"), data.get("Q3")});
    std::unique_ptr<Fibration> fib;
    std::unique_ptr<DiscriminantCurves> curves;

    Example() {
        SurfaceT T = build_T(net);
        CubicFourfold X = make_cubic(T, data.get("f"));
        fib = std::make_unique<Fibration>(Fibration{net, std::move(T), X});
        curves = std::make_unique<DiscriminantCurves>(DiscriminantCurves{
            PlaneCurve(map_variables(printed.get("BI"), base, {0, 1, 2})),
            PlaneCurve(map_variables(printed.get("BII"), base, {0, 1, 2}))});
    }

    BasePoint point(Elem a, Elem b, Elem c) const { return BasePoint(base->field(), {a, b, c}); }
};

const Example& example() {
    static const Example e;
    return e;
}

}  // namespace

TEST(Pipeline, SurfaceTOfTheExample) {
    const SurfaceT& T = example().fib->T;
    EXPECT_TRUE(T.generic());
    EXPECT_EQ(T.hilbert.dim, 2);
    EXPECT_EQ(T.hilbert.degree, 6);
    EXPECT_EQ(T.h0, (std::array<long long, 3>{0, 3, 20}));
    std::vector<int> degrees;
    for (const auto& g : T.generators) degrees.push_back(g.degree());
    EXPECT_EQ(degrees, (std::vector<int>{2, 2, 2, 3, 3}));
    for (const char* name : {"C1", "C2"})
        if (example().data.has(name)) EXPECT_TRUE(T.ideal.contains(example().data.get(name)));
}

TEST(Pipeline, CubicMustContainT) {
    const Example& e = example();
    EXPECT_TRUE(e.fib->X.smooth);
    const RingPtr& R = e.data.ring;
    const MultiPoly corrupted = e.data.get("f") + parse_poly("x0^3", R);
    EXPECT_THROW(make_cubic(e.fib->T, corrupted), ArgumentError);
    const MultiPoly shifted = e.data.get("f") + parse_poly("x0*x1*x3", R);
    EXPECT_THROW(make_cubic(e.fib->T, shifted), ArgumentError);
}

TEST(Pipeline, FiberInvariantUnderRescaling) {
    const Example& e = example();
    for (const auto& [a, b, c] : {std::array<Elem, 3>{1, 0, 1}, {0, 1, 1}, {0, 0, 1}}) {
        const FiberReport r = fiber_at(*e.fib, e.point(a, b, c), e.curves.get());
        for (Elem s = 2; s < 5; ++s) {
            const Field& k = e.base->field();
            const BasePoint scaled(k, {k.mul(s, a), k.mul(s, b), k.mul(s, c)});
            EXPECT_EQ(scaled, r.point);
            const FiberReport q = fiber_at(*e.fib, scaled, e.curves.get());
            EXPECT_EQ(q.type, r.type);
            EXPECT_EQ(q.census.scheme_degree, r.census.scheme_degree);
            EXPECT_EQ(q.census.radical_degree, r.census.radical_degree);
            ASSERT_TRUE(q.fiber && r.fiber);
            EXPECT_EQ(*q.fiber, *r.fiber);
        }
    }
}

TEST(Pipeline, FiberTypesAtKnownPoints) {
    const Example& e = example();
    const FiberReport three = fiber_at(*e.fib, e.point(0, 0, 1), e.curves.get());
    EXPECT_EQ(three.type, FiberType::III);
    EXPECT_EQ(three.census.scheme_degree, 2);
    EXPECT_EQ(three.census.radical_degree, 2);
    const FiberReport one = fiber_at(*e.fib, e.point(1, 2, 0), e.curves.get());
    EXPECT_EQ(one.type, FiberType::I);
    const FiberReport two = fiber_at(*e.fib, e.point(0, 1, 0), e.curves.get());
    EXPECT_EQ(two.type, FiberType::II);
    const FiberReport bare = fiber_at(*e.fib, e.point(1, 2, 0));
    EXPECT_EQ(bare.type, FiberType::a1_singular);
    const FiberReport smooth = fiber_at(*e.fib, e.point(0, 1, 1), e.curves.get());
    EXPECT_EQ(smooth.type, FiberType::smooth);
    EXPECT_EQ(smooth.dim, 2);
    EXPECT_EQ(smooth.degree, 6);
}

TEST(Pipeline, TrisectionOnSmoothFiberOnly) {
    const Example& e = example();
    const FiberReport smooth = fiber_at(*e.fib, e.point(0, 1, 1), e.curves.get());
    const TrisectionReport t = trisection_check(*e.fib, smooth);
    EXPECT_EQ(t.D.degree, 12);
    EXPECT_EQ(t.D.genus, 7);
    EXPECT_EQ(t.plane_degrees, (std::array<long long, 2>{3, 3}));
    const FiberReport one = fiber_at(*e.fib, e.point(1, 0, 1), e.curves.get());
    EXPECT_THROW(trisection_check(*e.fib, one), ArgumentError);
}

TEST(Pipeline, ScanAgainstPerturbedCurveIsInconsistent) {
    const Example& e = example();
    const MultiPoly bent = e.curves->B_I.equation() + parse_poly("a^5*b", e.base);
    const DiscriminantCurves wrong{PlaneCurve(bent), e.curves->B_II};
    const ScanReport s = fiber_scan(*e.fib, 1, &wrong, 1);
    ASSERT_TRUE(s.consistent.has_value());
    EXPECT_FALSE(*s.consistent);
    EXPECT_FALSE(s.mismatches.empty());
}

TEST(Pipeline, MembershipOfPrintedCurves) {
    const Example& e = example();
    const CurveMembership m = membership(*e.curves, e.point(0, 0, 1));
    EXPECT_TRUE(m.on_B_I);
    EXPECT_TRUE(m.on_B_II);
    EXPECT_EQ(expected_type(m), FiberType::III);
    EXPECT_EQ(expected_type(CurveMembership{false, true, true}), FiberType::IV);
    EXPECT_EQ(expected_type(CurveMembership{}), FiberType::smooth);
}

TEST(Pipeline, DeformationsAndE3) {
    const Example& e = example();
    EXPECT_EQ(deformation_dim(e.fib->T, e.fib->X), 1u);
    const PlaneCurve E3 = e3_curve(e.net);
    EXPECT_EQ(E3.degree(), 3u);
    EXPECT_TRUE(is_smooth(E3.ideal(), 1));
    EXPECT_TRUE(quadric_net_square_identity(e.net.Q, e.base));
}

TEST(Pipeline, BasePoints) {
    const Field f5 = Field::prime(5);
    EXPECT_EQ(projective_plane_points(f5).size(), 31u);
    EXPECT_EQ(projective_plane_points(Field::extension(5, 2)).size(), 651u);
    const BasePoint p(f5, {0, 3, 2});
    EXPECT_EQ(p.coords, (std::array<Elem, 3>{0, 1, 4}));
    EXPECT_EQ(p.to_string(), "(0:1:4)");
    EXPECT_THROW(BasePoint(f5, {0, 0, 0}), ArgumentError);
}

TEST(Pipeline, RandomNetsAreDeterministic) {
    const NetOfQuadrics a = random_net(7, 3), b = random_net(7, 3), c = random_net(7, 4);
    EXPECT_EQ(a.Q, b.Q);
    EXPECT_NE(a.Q, c.Q);
    for (const auto& q : a.Q) {
        EXPECT_EQ(q.degree(), 2);
        EXPECT_TRUE(q.is_homogeneous());
    }
    EXPECT_THROW(random_net(6, 1), ArgumentError);
}

TEST(Pipeline, NetRejectsQuadricsMissingAPlane) {
    const RingPtr R = coordinate_ring(Field::prime(5));
    EXPECT_THROW(NetOfQuadrics::from_quadrics({parse_poly("x0*x3", R), parse_poly("x1*x4", R), parse_poly("x0^2", R)}),
                 ArgumentError);
    EXPECT_THROW(NetOfQuadrics::from_quadrics({parse_poly("x0*x3", R), parse_poly("x1*x4", R), parse_poly("2*x0*x3", R)}),
                 ArgumentError);
}

TEST(Pipeline, StandardizingTransform) {
    const Field f = Field::prime(7);
    const RingPtr R = coordinate_ring(f);
    dpk::testing::Rng rng(51);
    std::array<std::array<Elem, 6>, 3> A1{}, A2{};
    for (auto* A : {&A1, &A2})
        for (auto& row : *A)
            for (auto& x : row) x = dpk::testing::random_elem(f, rng);
    Mat6 B;
    try {
        B = standardizing_transform(f, A1, A2);
    } catch (const DegeneracyError&) {
        GTEST_SKIP() << "random planes meet";
    }
    for (std::size_t i = 0; i < 6; ++i) {
        const auto& row = i < 3 ? A1[i] : A2[i - 3];
        MultiPoly l(R);
        for (std::size_t j = 0; j < 6; ++j) l += MultiPoly::variable(R, j).scaled(row[j]);
        EXPECT_EQ(linear_substitution(l, B), MultiPoly::variable(R, i));
    }
    std::array<std::array<Elem, 6>, 3> same = A1;
    EXPECT_THROW(standardizing_transform(f, A1, same), DegeneracyError);
}
