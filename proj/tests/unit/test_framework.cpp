#include <gtest/gtest.h>

#include "volrig/errors.hpp"
#include "volrig/framework.hpp"

using namespace volrig;

namespace {

Configuration planar(std::vector<std::pair<Rational, Rational>> pts)
{
    std::vector<Point> points;
    for (auto& [x, y] : pts)
        points.push_back({x, y});
    return Configuration(2, std::move(points));
}

Configuration unit_triangle() { return planar({{0, 0}, {1, 0}, {0, 1}}); }

AffineTransform transform(std::vector<long> a, std::vector<long> b)
{
    AffineTransform t;
    t.linear = RationalMatrix(2, 2);
    t.linear(0, 0) = a[0];
    t.linear(0, 1) = a[1];
    t.linear(1, 0) = a[2];
    t.linear(1, 1) = a[3];
    t.translation = {Rational(b[0]), Rational(b[1])};
    return t;
}

ErrorKind kind_of(const std::function<void()>& body)
{
    try {
        body();
    } catch (const Error& e) {
        return e.kind();
    }
    ADD_FAILURE() << "no error thrown";
    return ErrorKind::InternalConsistency;
}

}  // namespace

TEST(ConfigurationMatrix, Examples)
{
    const RationalMatrix c = configuration_matrix(unit_triangle());
    ASSERT_EQ(c.rows(), 3u);
    EXPECT_EQ(c.row(0), (RationalVector{1, 1, 1}));
    EXPECT_EQ(c.row(1), (RationalVector{0, 1, 0}));
    EXPECT_EQ(c.row(2), (RationalVector{0, 0, 1}));
    EXPECT_EQ(configuration_matrix(planar({{5, 7}})).column(0), (RationalVector{1, 5, 7}));
    const auto p = planar({{0, 0}, {1, 0}, {0, 1}, {3, 3}});
    EXPECT_EQ(configuration_matrix(p, {1, 2, 3}), configuration_matrix(unit_triangle()));
}

TEST(Measure, UnitTriangleAndAntisymmetry)
{
    const Hypergraph triangle(2, 3, {{1, 2, 3}});
    EXPECT_EQ(measure(triangle, unit_triangle()).values, (RationalVector{1}));
    const auto swapped = planar({{1, 0}, {0, 0}, {0, 1}});
    EXPECT_EQ(measure(triangle, swapped).values, (RationalVector{-1}));
    EXPECT_EQ(kind_of([&] { measure(triangle, planar({{0, 0}, {1, 0}})); }), ErrorKind::InvalidParameters);
}

TEST(Measure, HomologyIdentityOnRandomConfigurations)
{
    for (int n : {4, 6, 9}) {
        const Hypergraph h = n == 4 ? complete_hypergraph(2, 4) : bipyramid(n);
        const auto c = homology_coefficients(h);
        for (std::uint64_t seed = 1; seed <= 5; ++seed) {
            const auto values = measure(h, random_generic_configuration(2, n, seed)).values;
            Rational sum = 0;
            for (std::size_t i = 0; i < values.size(); ++i)
                sum += c.coefficients[i] * values[i];
            EXPECT_EQ(sum, 0);
        }
    }
}

TEST(Measure, FourPointIdentity)
{
    const auto p = random_generic_configuration(2, 4, 17);
    EXPECT_EQ(signed_volume(p, {1, 2, 3}) - signed_volume(p, {1, 2, 4}) + signed_volume(p, {1, 3, 4}) -
                  signed_volume(p, {2, 3, 4}),
              0);
}

TEST(Equivalence, Examples)
{
    const Hypergraph triangle(2, 3, {{1, 2, 3}});
    EXPECT_TRUE(are_equivalent(triangle, unit_triangle(), unit_triangle()));
    EXPECT_FALSE(are_equivalent(triangle, unit_triangle(), planar({{0, 0}, {2, 0}, {0, 1}})));
    const auto p = random_generic_configuration(2, 6, 3);
    const auto sheared = transform({1, 1, 0, 1}, {0, 0}).apply(p);
    EXPECT_TRUE(are_equivalent(bipyramid(6), p, sheared));
    EXPECT_TRUE(are_equivalent(complete_hypergraph(2, 6), p, sheared));
}

TEST(Congruence, Examples)
{
    const auto p = random_generic_configuration(2, 5, 9);
    EXPECT_TRUE(are_congruent(p, transform({1, 0, 0, 1}, {3, -2}).apply(p)));
    EXPECT_FALSE(are_congruent(p, transform({2, 0, 0, 2}, {0, 0}).apply(p)));
    EXPECT_TRUE(are_congruent_by_transform(p, transform({1, 0, 0, 1}, {3, -2}).apply(p)));
    EXPECT_FALSE(are_congruent_by_transform(p, transform({2, 0, 0, 2}, {0, 0}).apply(p)));
}

TEST(Congruence, TransformExamples)
{
    const auto p = random_generic_configuration(2, 5, 21);
    const auto identity = find_congruence_transform(p, p);
    ASSERT_TRUE(identity);
    EXPECT_EQ(identity->linear, RationalMatrix::identity(2));
    EXPECT_EQ(identity->translation, (RationalVector{0, 0}));

    const AffineTransform shear = transform({1, 3, 0, 1}, {1, 2});
    const auto found = find_congruence_transform(p, shear.apply(p));
    ASSERT_TRUE(found);
    EXPECT_EQ(found->linear, shear.linear);
    EXPECT_EQ(found->translation, shear.translation);
    EXPECT_TRUE(found->is_volume_preserving());

    const auto reflected = transform({-1, 0, 0, 1}, {0, 0}).apply(p);
    EXPECT_FALSE(find_congruence_transform(p, reflected));
    EXPECT_NE(measure(complete_hypergraph(2, 5), p), measure(complete_hypergraph(2, 5), reflected));

    const auto flat = planar({{0, 0}, {1, 1}, {2, 2}});
    EXPECT_EQ(kind_of([&] { find_congruence_transform(flat, flat); }), ErrorKind::FlatConfiguration);
}

TEST(Congruence, DirectAndTransformAgreeOnRandomPairs)
{
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        const auto p = random_generic_configuration(2, 5, seed);
        const auto q = seed % 2 == 0 ? transform({2, 1, 1, 1}, {4, -1}).apply(p)
                                     : random_generic_configuration(2, 5, seed + 100);
        EXPECT_EQ(are_congruent(p, q), are_congruent_by_transform(p, q));
        if (are_congruent(p, q))
            EXPECT_TRUE(are_equivalent(bipyramid(5), p, q));
    }
}

TEST(Flatness, Detection)
{
    EXPECT_TRUE(is_flat(planar({{0, 0}, {1, 1}, {3, 3}, {-1, -1}})));
    EXPECT_FALSE(is_flat(unit_triangle()));
    EXPECT_TRUE(is_flat(planar({{0, 0}, {1, 1}})));
}

TEST(Pinning, WorkedExample)
{
    const auto p = planar({{1, 1}, {3, 1}, {1, 4}, {2, 2}});
    const Hypergraph h = complete_hypergraph(2, 4);
    const PinnedConfiguration pinned = standard_pinning(h, p, {1, 2, 3});
    EXPECT_EQ(pinned.points.point(1), (Point{0, 0}));
    EXPECT_EQ(pinned.points.point(2), (Point{1, 0}));
    EXPECT_EQ(pinned.points.point(3), (Point{0, 1}));
    EXPECT_EQ(pinned.points.point(4), (Point{Rational(1, 2), Rational(1, 3)}));
    EXPECT_EQ(signed_volume(pinned.points, {1, 2, 3}), 1);
}

TEST(Pinning, IdempotentAndRelabelsBase)
{
    const auto p = random_generic_configuration(2, 6, 4);
    const Hypergraph b = bipyramid(6);
    const auto once = standard_pinning(b, p, {2, 5, 6});
    EXPECT_EQ(once.labels, (std::vector<Vertex>{0, 2, 5, 6, 1, 3, 4}));
    const auto twice = standard_pinning(relabelled(b, once.labels), once.points, {1, 2, 3});
    EXPECT_EQ(twice.points, once.points);
    EXPECT_EQ(as_pinned(once.points).points, once.points);
}

TEST(Pinning, Errors)
{
    const auto collinear = planar({{0, 0}, {1, 1}, {2, 2}, {0, 1}});
    EXPECT_EQ(kind_of([&] { standard_pinning(complete_hypergraph(2, 4), collinear, {1, 2, 3}); }),
              ErrorKind::DegenerateBase);
    EXPECT_EQ(kind_of([&] { standard_pinning(bipyramid(5), random_generic_configuration(2, 5, 1), {1, 2, 5}); }),
              ErrorKind::MissingHyperedge);
    EXPECT_EQ(kind_of([&] { as_pinned(planar({{0, 0}, {2, 0}, {0, 1}})); }), ErrorKind::InvalidParameters);
}

TEST(Pinning, AffineInvariance)
{
    // Pinning forgets any volume-preserving affine motion of the input.
    const auto p = random_generic_configuration(2, 7, 8);
    const auto moved = transform({3, 1, 5, 2}, {-7, 4}).apply(p);
    EXPECT_EQ(standard_pinning(bipyramid(7), p, {1, 2, 3}).points,
              standard_pinning(bipyramid(7), moved, {1, 2, 3}).points);
}

TEST(RandomConfiguration, Deterministic)
{
    EXPECT_EQ(random_generic_configuration(2, 6, 5), random_generic_configuration(2, 6, 5));
    EXPECT_NE(random_generic_configuration(2, 6, 5), random_generic_configuration(2, 6, 6));
    const auto p = random_generic_configuration(3, 8, 2, 10);
    for (const auto& x : p.points())
        for (const auto& c : x) {
            EXPECT_LE(abs(numerator(c)), 10);
            EXPECT_LE(denominator(c), 997);
        }
    EXPECT_EQ(random_pinned_configuration(2, 8, 3).points, random_pinned_configuration(2, 8, 3).points);
}
