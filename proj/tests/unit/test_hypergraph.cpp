#include <gtest/gtest.h>

#include "volrig/errors.hpp"
#include "volrig/hypergraph.hpp"

using namespace volrig;

namespace {

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

std::size_t count_edges(const Hypergraph& h) { return h.edges().size(); }

}  // namespace

TEST(Hypergraph, SortsAndValidates)
{
    const Hypergraph h(2, 4, {{3, 2, 1}, {4, 1, 2}});
    EXPECT_EQ(h.hyperedges(), (std::vector<Hyperedge>{{1, 2, 3}, {1, 2, 4}}));
    EXPECT_EQ(h.index_of({2, 4, 1}), 1u);
    EXPECT_FALSE(h.contains({1, 3, 4}));
    EXPECT_EQ(kind_of([] { Hypergraph(2, 4, {{1, 2}}); }), ErrorKind::InvalidParameters);
    EXPECT_EQ(kind_of([] { Hypergraph(2, 4, {{1, 2, 5}}); }), ErrorKind::InvalidParameters);
    EXPECT_EQ(kind_of([] { Hypergraph(2, 4, {{1, 2, 2}}); }), ErrorKind::InvalidParameters);
    EXPECT_EQ(kind_of([] { Hypergraph(2, 4, {{1, 2, 3}, {3, 2, 1}}); }), ErrorKind::InvalidParameters);
}

TEST(CompleteHypergraph, Examples)
{
    EXPECT_EQ(complete_hypergraph(2, 4).hyperedges(),
              (std::vector<Hyperedge>{{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}}));
    EXPECT_EQ(complete_hypergraph(2, 5).hyperedge_count(), 10u);
    EXPECT_EQ(complete_hypergraph(3, 4).hyperedges(), (std::vector<Hyperedge>{{1, 2, 3, 4}}));
    EXPECT_EQ(kind_of([] { complete_hypergraph(2, 2); }), ErrorKind::InvalidParameters);
}

TEST(Bipyramid, Labelling)
{
    EXPECT_EQ(bipyramid(5).hyperedges(),
              (std::vector<Hyperedge>{{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 5}, {2, 4, 5}, {3, 4, 5}}));
    EXPECT_EQ(bipyramid(8).hyperedge_count(), 12u);
    EXPECT_EQ(bipyramid(6).hyperedge_count(), 8u);
    EXPECT_TRUE(bipyramid(8).contains({1, 2, 7}));
    EXPECT_TRUE(bipyramid(8).contains({2, 7, 8}));
    EXPECT_EQ(kind_of([] { bipyramid(4); }), ErrorKind::InvalidParameters);
}

TEST(Sphere, Recognition)
{
    EXPECT_TRUE(is_triangulation_of_s2(complete_hypergraph(2, 4)));
    EXPECT_TRUE(is_triangulation_of_s2(bipyramid(7)));
    EXPECT_FALSE(is_triangulation_of_s2(complete_hypergraph(2, 5)));
    EXPECT_FALSE(is_triangulation_of_s2(without_hyperedges(bipyramid(6), {{1, 2, 3}})));
    // Two tetrahedra sharing only vertex 1: every edge lies in two
    // triangles but the link of vertex 1 is two cycles.
    const Hypergraph pinched(2, 7,
                             {{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4},
                              {1, 5, 6}, {1, 5, 7}, {1, 6, 7}, {5, 6, 7}});
    EXPECT_FALSE(is_triangulation_of_s2(pinched));
    EXPECT_EQ(kind_of([] { is_triangulation_of_s2(complete_hypergraph(3, 5)); }),
              ErrorKind::UnsupportedDimension);
}

TEST(Sphere, EulerCounts)
{
    for (int n = 5; n <= 12; ++n) {
        const Hypergraph b = bipyramid(n);
        const auto m = b.hyperedge_count();
        const auto s = count_edges(b);
        EXPECT_EQ(3 * m, 2 * s);
        EXPECT_EQ(static_cast<long>(m) - static_cast<long>(s) + n, 2);
    }
}

TEST(Homology, Tetrahedron)
{
    const auto c = homology_coefficients(complete_hypergraph(2, 4));
    EXPECT_EQ(c.coefficients, (std::vector<int>{1, -1, 1, -1}));
}

TEST(Homology, BoundaryVanishesAndCanonicalSign)
{
    for (int n = 5; n <= 10; ++n) {
        const Hypergraph b = bipyramid(n);
        const auto c = homology_coefficients(b);
        ASSERT_EQ(c.coefficients.size(), b.hyperedge_count());
        EXPECT_EQ(c.coefficients.front(), 1);
        for (int x : boundary_of(b, c))
            EXPECT_EQ(x, 0);
        OrientationVector flipped = c;
        for (int& x : flipped.coefficients)
            x = -x;
        for (int x : boundary_of(b, flipped))
            EXPECT_EQ(x, 0);
        EXPECT_EQ(flipped.coefficients.front(), -1);
    }
    EXPECT_EQ(kind_of([] { homology_coefficients(complete_hypergraph(2, 5)); }), ErrorKind::Topology);
}

TEST(SubdivisionSplit, Examples)
{
    const Hypergraph triangle(2, 3, {{1, 2, 3}});
    const Hypergraph once = simplex_subdivision_split(triangle, {1, 2, 3});
    EXPECT_EQ(once.vertex_count(), 4);
    EXPECT_EQ(once.hyperedges(), (std::vector<Hyperedge>{{1, 2, 4}, {1, 3, 4}, {2, 3, 4}}));
    const Hypergraph twice = simplex_subdivision_split(once, {2, 3, 4});
    EXPECT_EQ(twice.vertex_count(), 5);
    EXPECT_EQ(twice.hyperedge_count(), 5u);
    EXPECT_EQ(kind_of([&] { simplex_subdivision_split(once, {1, 2, 3}); }), ErrorKind::MissingHyperedge);

    const Hypergraph solid = simplex_subdivision_split(complete_hypergraph(3, 4), {1, 2, 3, 4});
    EXPECT_EQ(solid.hyperedge_count(), 4u);
    EXPECT_TRUE(solid.contains({1, 2, 3, 5}));
}

TEST(VertexSplit, Examples)
{
    const Hypergraph tet_split = vertex_split_2d(complete_hypergraph(2, 4), 4, {{1, 2, 4}});
    EXPECT_EQ(tet_split.vertex_count(), 5);
    EXPECT_EQ(tet_split.hyperedge_count(), 6u);
    EXPECT_TRUE(is_triangulation_of_s2(tet_split));

    const Hypergraph oct_split = vertex_split_2d(bipyramid(6), 6, {{2, 3, 6}, {2, 5, 6}});
    EXPECT_EQ(oct_split.vertex_count(), 7);
    EXPECT_EQ(oct_split.hyperedge_count(), 10u);
    EXPECT_TRUE(is_triangulation_of_s2(oct_split));

    EXPECT_EQ(kind_of([] { vertex_split_2d(bipyramid(6), 6, {{2, 3, 6}, {4, 5, 6}}); }), ErrorKind::InvalidFan);
    EXPECT_EQ(kind_of([] { vertex_split_2d(bipyramid(6), 6, {{1, 2, 3}}); }), ErrorKind::InvalidFan);
}

TEST(VertexSplit, PreservesSphereOverRepeatedSplits)
{
    Hypergraph h = bipyramid(6);
    for (int step = 0; step < 5; ++step) {
        const Vertex v = h.vertex_count();
        const auto star = h.star(v);
        ASSERT_FALSE(star.empty());
        h = vertex_split_2d(h, v, {h.hyperedge(star.front())});
        EXPECT_TRUE(is_triangulation_of_s2(h));
        EXPECT_EQ(h.hyperedge_count(), static_cast<std::size_t>(2 * h.vertex_count() - 4));
    }
}

TEST(Gluing, FigureConstruction)
{
    const Hypergraph tet = complete_hypergraph(2, 4);
    const Hypergraph oct = bipyramid(6);
    const Hypergraph once = glue_at_hyperedge(tet, {1, 2, 4}, oct, {1, 2, 3}, false);
    EXPECT_EQ(once.vertex_count(), 7);
    EXPECT_EQ(once.hyperedge_count(), 10u);
    EXPECT_TRUE(is_triangulation_of_s2(once));
    EXPECT_FALSE(once.contains({1, 2, 4}));
    const Hypergraph twice = glue_at_hyperedge(once, {1, 3, 4}, oct, {1, 2, 3}, false);
    EXPECT_EQ(twice.vertex_count(), 10);
    EXPECT_EQ(twice.hyperedge_count(), 16u);
    EXPECT_TRUE(is_triangulation_of_s2(twice));

    const Hypergraph kept = glue_at_hyperedge(tet, {1, 2, 4}, oct, {1, 2, 3}, true);
    EXPECT_EQ(kept.hyperedge_count(), 11u);
    EXPECT_TRUE(kept.contains({1, 2, 4}));
}

TEST(Gluing, LabelsFollowTuplePosition)
{
    const auto labels = glued_labels(4, {1, 2, 4}, 6, {1, 2, 3});
    EXPECT_EQ(labels[1], 1);
    EXPECT_EQ(labels[2], 2);
    EXPECT_EQ(labels[3], 4);
    EXPECT_EQ(labels[4], 5);
    EXPECT_EQ(labels[6], 7);
    EXPECT_EQ(kind_of([] {
                  glue_at_hyperedge(complete_hypergraph(2, 4), {1, 2, 3}, complete_hypergraph(3, 4),
                                    {1, 2, 3, 4}, false);
              }),
              ErrorKind::InvalidParameters);
}

TEST(Gluing, HyperedgeCountsOfGluedPieces)
{
    // Minimally rigid pieces (m = 2n-5) keep that count when the common
    // hyperedge is kept and fall one below it when it is removed.
    const Hypergraph piece = without_hyperedges(complete_hypergraph(2, 4), {{2, 3, 4}});
    const Hypergraph kept = glue_at_hyperedge(piece, {1, 2, 3}, piece, {1, 2, 3}, true);
    EXPECT_EQ(kept.vertex_count(), 5);
    EXPECT_EQ(kept.hyperedge_count(), static_cast<std::size_t>(2 * 5 - 5));
    const Hypergraph removed = glue_at_hyperedge(piece, {1, 2, 3}, piece, {1, 2, 3}, false);
    EXPECT_EQ(removed.hyperedge_count(), static_cast<std::size_t>(2 * 5 - 6));
    // Sphere triangulations glued without the common hyperedge stay
    // triangulations, with m = 2n-4.
    const Hypergraph spheres = glue_at_hyperedge(bipyramid(6), {1, 2, 3}, bipyramid(6), {1, 2, 3}, false);
    EXPECT_EQ(spheres.hyperedge_count(), static_cast<std::size_t>(2 * spheres.vertex_count() - 4));
    EXPECT_TRUE(is_triangulation_of_s2(spheres));
}

TEST(Relabel, RoundTrip)
{
    const Hypergraph b = bipyramid(6);
    const std::vector<Vertex> labels{0, 6, 5, 4, 3, 2, 1};
    const Hypergraph r = relabelled(b, labels);
    EXPECT_EQ(r.hyperedge_count(), b.hyperedge_count());
    EXPECT_EQ(relabelled(r, labels), b);
}
