/**
 * Rigidity matrices and the rank-based rigidity tests.
 *
 * R(Θ,p) is the Jacobian of the measurement map: one row per hyperedge in
 * lexicographic order, columns in vertex-major groups of d. A framework is
 * infinitesimally rigid when its rank reaches dn - (d²+d-1), the dimension of
 * the measurement map's image modulo volume-preserving affine motions.
 */
#ifndef VOLRIG_RIGIDITY_HPP
#define VOLRIG_RIGIDITY_HPP

#include <cstdint>
#include <vector>

#include "volrig/framework.hpp"

namespace volrig {

/// Shape m x dn; the block of row h and vertex i vanishes unless i ∈ h.
using RigidityMatrix = RationalMatrix;

struct FlexSpace {
    std::vector<RationalVector> basis;
    std::size_t trivial_dimension = 0;

    std::size_t dimension() const noexcept { return basis.size(); }
    std::size_t nontrivial_dimension() const noexcept { return basis.size() - trivial_dimension; }
};

struct RankReport {
    std::size_t rank = 0;
    std::size_t max_rank = 0;
    std::size_t nullity = 0;
    std::size_t trivial_dimension = 0;
    std::size_t nontrivial_flex_dimension = 0;
};

/// d² + d - 1, the dimension of the volume-preserving affine group.
constexpr long trivial_motion_dimension(long d) { return d * d + d - 1; }

/// dn - (d² + d - 1), clamped at zero.
std::size_t max_rigidity_rank(int d, int n);

RigidityMatrix rigidity_matrix(const Hypergraph& hypergraph, const Configuration& p);

bool is_infinitesimally_rigid(const Hypergraph& hypergraph, const Configuration& p);

/// Largest rank seen over `trials` random configurations. Rank can only drop
/// on special configurations, so the maximum is the generic rank with
/// overwhelming probability.
std::size_t generic_rank(const Hypergraph& hypergraph, int trials, std::uint64_t seed);

bool is_generically_rigid(const Hypergraph& hypergraph, int trials = 3, std::uint64_t seed = 1);
bool is_minimally_rigid(const Hypergraph& hypergraph, int trials = 3, std::uint64_t seed = 1);

/// Kernel of R(Θ,p) together with the dimension of the trivial part, read off
/// R(K_n^{d+1}, p). Throws FlatConfiguration for flat p.
FlexSpace flex_space(const Hypergraph& hypergraph, const Configuration& p);

/// Rank bookkeeping for reports; unlike flex_space it accepts flat inputs.
RankReport rank_report(const Hypergraph& hypergraph, const Configuration& p);

}  // namespace volrig

#endif
