/**
 * Floating-point multi-start Newton solver for the pinned equivalence
 * system. It counts congruence classes independently of the symbolic
 * machinery and is a cross-check and lower-bound witness only: a basin that
 * no start reaches is simply missed.
 */
#ifndef VOLRIG_ORACLE_HPP
#define VOLRIG_ORACLE_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "volrig/framework.hpp"

namespace volrig {

struct OracleSettings {
    int starts = 200;
    /// Bound on max_h |vol_h(q) - vol_h(p)| / max(1, max_h |vol_h(p)|).
    double newton_tolerance = 1e-12;
    int max_iterations = 100;
    /// Single-linkage radius in the max norm of pinned coordinates.
    double dedup_distance = 1e-6;
    std::uint64_t seed = 1;
    /// Starts are drawn from the bounding box of p inflated by this factor.
    double inflation = 3.0;
    /// Worker threads; results do not depend on this value.
    unsigned threads = 1;

    void validate() const;
};

struct OracleReport {
    /// Coordinates of the free vertices d+2..n, vertex-major, sorted
    /// lexicographically. The pinned base is implied.
    std::vector<std::vector<double>> solutions;
    std::vector<double> residuals;
    std::size_t count = 0;
    std::size_t converged = 0;
    std::size_t starts = 0;
    double convergence_rate = 0.0;
    double residual_max = 0.0;
};

/**
 * Solves f(q) = f(p) over pinned q. `hypergraph` uses the labels of the
 * original framework and is relabelled with `pinned.labels`. The base
 * hyperedge holds by construction; for triangulations of the sphere the
 * lexicographically largest remaining hyperedge is dropped too, since its
 * volume is fixed by the others. Residuals are always measured on every
 * hyperedge.
 *
 * Throws FlexibleInput if the hypergraph is not generically rigid,
 * InvalidParameters if the pinned system is underdetermined and
 * NoConvergence if not even the start at p converges.
 */
OracleReport solve_equivalence_system(const Hypergraph& hypergraph, const PinnedConfiguration& pinned,
                                      const OracleSettings& settings = {});

struct CrossValidation {
    bool agree = false;
    std::size_t symbolic_count = 0;
    std::size_t oracle_count = 0;
    /// Largest max-norm distance from an oracle solution to its nearest
    /// symbolic recovery.
    double max_distance = 0.0;
};

/// Compares the oracle with the bipyramid class count on bipyramid(n).
CrossValidation cross_validate(const PinnedConfiguration& pinned, const OracleSettings& settings = {});

}  // namespace volrig

#endif
