/**
 * (d+1)-uniform hypergraphs with 1-based vertex labels.
 *
 * Hyperedges are stored as strictly increasing tuples and the hyperedge list
 * is kept in strictly increasing lexicographic order, so two hypergraphs on
 * the same labelled vertex set compare equal exactly when they have the same
 * hyperedges.
 */
#ifndef VOLRIG_HYPERGRAPH_HPP
#define VOLRIG_HYPERGRAPH_HPP

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace volrig {

using Vertex = int;
using Hyperedge = std::vector<Vertex>;

/// "1,2,4" style rendering used in messages and the CLI.
std::string to_string(const Hyperedge& hyperedge);

class Hypergraph {
public:
    /// Sorts each tuple and the list; rejects wrong arity, labels outside
    /// 1..n, repeated members and duplicate hyperedges.
    Hypergraph(int d, int n, std::vector<Hyperedge> hyperedges);

    int dimension() const noexcept { return d_; }
    int vertex_count() const noexcept { return n_; }
    std::size_t hyperedge_count() const noexcept { return hyperedges_.size(); }
    const std::vector<Hyperedge>& hyperedges() const noexcept { return hyperedges_; }
    const Hyperedge& hyperedge(std::size_t index) const { return hyperedges_.at(index); }

    /// Position of a hyperedge in the lexicographic order; the argument need
    /// not be sorted.
    std::optional<std::size_t> index_of(Hyperedge hyperedge) const;
    bool contains(const Hyperedge& hyperedge) const { return index_of(hyperedge).has_value(); }

    /// Distinct 2-subsets occurring inside some hyperedge, sorted.
    std::vector<std::array<Vertex, 2>> edges() const;

    /// Hyperedges containing v, in list order.
    std::vector<std::size_t> star(Vertex v) const;

    bool operator==(const Hypergraph& other) const = default;

private:
    int d_;
    int n_;
    std::vector<Hyperedge> hyperedges_;
};

/// ±1 coefficients, parallel to the hyperedge list, whose signed sum of
/// oriented triangles has zero boundary.
struct OrientationVector {
    std::vector<int> coefficients;
};

Hypergraph complete_hypergraph(int d, int n);

/// B_{n-2}: apexes 1 and n, equator 2..n-1 with the cycle 2,3,...,n-1,2.
Hypergraph bipyramid(int n);

bool is_triangulation_of_s2(const Hypergraph& hypergraph);

/// Canonical orientation (first coefficient +1); throws Topology if the
/// hypergraph is not a triangulation of the sphere.
OrientationVector homology_coefficients(const Hypergraph& hypergraph);

/// Coefficients of the 1-chain d_2(sum c_h [h]) keyed by the sorted edge list
/// of the hypergraph. Zero everywhere for a valid orientation.
std::vector<int> boundary_of(const Hypergraph& hypergraph, const OrientationVector& orientation);

/// Replaces h by the d+1 simplices coning its facets to a new vertex n+1.
Hypergraph simplex_subdivision_split(const Hypergraph& hypergraph, const Hyperedge& h);

/// Planar vertex split at v: the fan (consecutive members share an edge
/// through v) is removed and a new vertex n+1 is joined to the fan's boundary
/// path and to v.
Hypergraph vertex_split_2d(const Hypergraph& hypergraph, Vertex v,
                           const std::vector<Hyperedge>& fan);

/// Labels of the second hypergraph's vertices after gluing: h2[k] goes to
/// h1[k], the remaining vertices follow n1 in ascending order. Index 0 unused.
std::vector<Vertex> glued_labels(int n1, const Hyperedge& h1, int n2, const Hyperedge& h2);

Hypergraph glue_at_hyperedge(const Hypergraph& first, const Hyperedge& h1,
                             const Hypergraph& second, const Hyperedge& h2,
                             bool keep_common);

/// Renames vertex labels[v] -> v, i.e. `labels` lists old labels in new order.
/// labels[0] is ignored so that indices match vertex labels.
Hypergraph relabelled(const Hypergraph& hypergraph, std::span<const Vertex> labels);

Hypergraph without_hyperedges(const Hypergraph& hypergraph,
                              const std::vector<Hyperedge>& removed);

}  // namespace volrig

#endif
