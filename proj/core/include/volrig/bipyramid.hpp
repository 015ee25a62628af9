/**
 * Congruence classes of planar bipyramid frameworks.
 *
 * Work in the standard pinning with base 123. Sliding vertex 4 along its
 * admissible line by t fixes every other free vertex in turn: vertex n moves
 * by r(t) along the line 23n allows, and each equatorial vertex i = 5..n-1 is
 * the intersection of the lines forced by hyperedges 1(i-1)i and (i-1)in.
 * The framework closes up exactly when vertex n-1 lands back on the line
 * forced by 12(n-1); clearing denominators in that condition gives the class
 * polynomial f(t) of degree n-4 with f(0) = 0. The last hyperedge 2(n-1)n
 * then holds automatically because the signed areas of a sphere
 * triangulation sum to zero with the homology signs.
 */
#ifndef VOLRIG_BIPYRAMID_HPP
#define VOLRIG_BIPYRAMID_HPP

#include <array>
#include <optional>
#include <vector>

#include "volrig/framework.hpp"
#include "volrig/polynomial.hpp"

namespace volrig {

using PlanarCurve = std::array<RationalFunction, 2>;

struct BipyramidSystem {
    int n = 0;
    PinnedConfiguration pinned;
    /// Displacement of vertex n along (1, -1).
    RationalFunction r;
    /// Displacement of vertex n-1 along (1, 0), used only as a check.
    RationalFunction s;
    /// coordinates[v] for every vertex v = 1..n (index 0 unused).
    std::vector<PlanarCurve> coordinates;
    /// Polynomials in t whose zeros make some step of the construction
    /// undefined: the denominator of r and every recurrence denominator.
    std::vector<Polynomial> poles;
    /// Monic class polynomial.
    Polynomial f;
};

BipyramidSystem build_system(const PinnedConfiguration& pinned);

/// Exact recovery at a rational root of f. Throws InvalidParameters if t0 is
/// not a root and ExcludedRoot if a construction denominator vanishes there.
PinnedConfiguration recover_configuration(const BipyramidSystem& system, const Rational& t0);

struct Recovery {
    RootInterval root;
    /// Exact when the root is rational; otherwise evaluated at a rational
    /// point inside an interval of width < 1e-45 around the root.
    PinnedConfiguration configuration;
    /// max_h |vol_h(q) - vol_h(p)|; zero for exact recoveries.
    Rational defect;

    bool exact() const { return root.is_exact(); }
};

/// Recovery at an isolated (possibly irrational) root. Exclusion is decided
/// exactly through gcds with the pole polynomials.
Recovery recover_configuration(const BipyramidSystem& system, const RootInterval& root);

/// True if some pole polynomial vanishes at the isolated root.
bool is_excluded_root(const BipyramidSystem& system, const RootInterval& root);

struct BipyramidAnalysis {
    BipyramidSystem system;
    std::vector<RootInterval> real_roots;
    std::vector<Recovery> classes;
    std::vector<RootInterval> excluded;
    /// Only for n = 7.
    std::optional<int> discriminant_sign;
};

BipyramidAnalysis analyze_bipyramid(const PinnedConfiguration& pinned);

/// Number of recovered pinned classes; between 1 and n-4.
std::size_t count_congruence_classes(const PinnedConfiguration& pinned);

/// Sign of b² - 4ac for f = at³ + bt² + ct (n = 7 only).
int cubic_discriminant_sign(const PinnedConfiguration& pinned);
int cubic_discriminant_sign(const BipyramidSystem& system);

/// Upper bound on |vol_h(q) - vol_h(p)| accepted for interval recoveries.
Rational interval_recovery_tolerance();

}  // namespace volrig

#endif
