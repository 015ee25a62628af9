/**
 * Closed-form bounds on the number of congruence classes of a generic
 * framework, and the product rule for frameworks glued along hyperedges.
 */
#ifndef VOLRIG_BOUNDS_HPP
#define VOLRIG_BOUNDS_HPP

#include <optional>
#include <string>
#include <vector>

#include "volrig/linalg.hpp"

namespace volrig {

struct BoundRule {
    /// One of "Eq1", "Catalan", "Bipyramid", "Parity", "Gluing".
    std::string name;
    std::vector<long> parameters;

    bool operator==(const BoundRule& other) const = default;
};

struct ClassBounds {
    Integer lower = 1;
    /// Empty when no upper bound is known.
    std::optional<Integer> upper;
    std::vector<BoundRule> provenance;

    ClassBounds() = default;
    ClassBounds(Integer lower_bound, std::optional<Integer> upper_bound,
                std::vector<BoundRule> rules = {});
};

/// (d(n-d-1))! · prod_{i=0}^{d-1} i! / (n-d-1+i)!, the mixed-volume bound
/// for minimally rigid frameworks.
Rational borcea_streinu_bound(int d, int n);

/// Catalan(n-3) = C(2n-6, n-3) / (n-2), for triangulations of the sphere.
Integer catalan_bound(int n);

/// n - 4 for the bipyramid on n vertices.
Integer bipyramid_bound(int n);

/// 2 for even n, 1 for odd n (bipyramids).
Integer parity_lower_bound(int n);

/// Componentwise products; an unbounded part makes the product unbounded.
ClassBounds gluing_bounds(const std::vector<ClassBounds>& parts);

/// Every bound that applies to a framework of the given shape: Eq1 for
/// minimally rigid hypergraphs (hyperedge count m = dn - d² - d + 1), Catalan
/// for triangulations of the sphere and the bipyramid rules for bipyramids.
/// The tightest lower and upper values are kept and every contributing rule
/// is listed.
ClassBounds combined_bounds(int d, int n, bool minimally_rigid, bool triangulation,
                            bool is_bipyramid);

}  // namespace volrig

#endif
