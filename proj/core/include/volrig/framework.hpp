/**
 * Exact frameworks: configurations of rational points, the signed-volume
 * measurement map and the equivalence/congruence relations built on it.
 */
#ifndef VOLRIG_FRAMEWORK_HPP
#define VOLRIG_FRAMEWORK_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "volrig/hypergraph.hpp"
#include "volrig/linalg.hpp"

namespace volrig {

using Point = RationalVector;

/// n points of Q^d; point(v) uses the 1-based vertex label.
class Configuration {
public:
    Configuration() = default;
    Configuration(int d, std::vector<Point> points);

    int dimension() const noexcept { return d_; }
    int size() const noexcept { return static_cast<int>(points_.size()); }
    const Point& point(Vertex v) const { return points_.at(v - 1); }
    const std::vector<Point>& points() const noexcept { return points_; }

    bool operator==(const Configuration& other) const = default;

private:
    int d_ = 0;
    std::vector<Point> points_;
};

struct MeasurementVector {
    RationalVector values;
    bool operator==(const MeasurementVector& other) const = default;
};

/// x -> Ax + b.
struct AffineTransform {
    RationalMatrix linear;
    RationalVector translation;

    Point apply(const Point& x) const;
    Configuration apply(const Configuration& p) const;
    Rational determinant() const { return volrig::determinant(linear); }
    bool is_volume_preserving() const { return determinant() == 1; }
};

/**
 * Standard-pinned representative of a framework's congruence data.
 *
 * `labels[v]` is the original label of pinned vertex v (index 0 unused); the
 * base hyperedge is moved to 1..d+1 and sent to the origin and the standard
 * basis vectors. The pinned framework is the image of the input under one
 * affine map of determinant 1/det C(base, p), so it is *not* congruent to the
 * input: only its congruence classes correspond one-to-one with the input's.
 */
struct PinnedConfiguration {
    Hyperedge base;
    std::vector<Vertex> labels;
    Configuration points;

    int dimension() const noexcept { return points.dimension(); }
    int size() const noexcept { return points.size(); }
};

/// (d+1) x n matrix: a row of ones over the coordinate rows.
RationalMatrix configuration_matrix(const Configuration& p);

/// The columns of C(p) belonging to h, in the order given.
RationalMatrix configuration_matrix(const Configuration& p, const Hyperedge& h);

/// det C(h, p).
Rational signed_volume(const Configuration& p, const Hyperedge& h);

MeasurementVector measure(const Hypergraph& hypergraph, const Configuration& p);

bool are_equivalent(const Hypergraph& hypergraph, const Configuration& p, const Configuration& q);

/// Equality of the signed volumes of every (d+1)-subset.
bool are_congruent(const Configuration& p, const Configuration& q);

/// Congruence decided through find_congruence_transform; p must be non-flat.
bool are_congruent_by_transform(const Configuration& p, const Configuration& q);

bool is_flat(const Configuration& p);

/// The unique volume-preserving affine map sending p to q, if there is one.
std::optional<AffineTransform> find_congruence_transform(const Configuration& p,
                                                         const Configuration& q);

/// Permutation putting `base` first (in its sorted order) and the remaining
/// vertices after it in ascending order; entry 0 unused.
std::vector<Vertex> base_first_labels(int n, const Hyperedge& base);

Configuration relabelled(const Configuration& p, std::span<const Vertex> labels);

PinnedConfiguration standard_pinning(const Hypergraph& hypergraph, const Configuration& p,
                                     const Hyperedge& base);

/// Wraps points already in standard position on 1..d+1; throws
/// InvalidParameters if they are not.
PinnedConfiguration as_pinned(Configuration points);

/// Numerators uniform in [-bound, bound], denominators uniform in [1, 997].
/// Generic with overwhelming probability for any fixed finite family of
/// polynomials, never certified.
Configuration random_generic_configuration(int d, int n, std::uint64_t seed, int bound = 1000);

/// Standard position on 1..d+1 and coordinates num/den in [-radius, radius]
/// with den uniform in [1, 97] and num nonzero for the other vertices. Keeps pinned
/// instances well scaled for floating-point work.
PinnedConfiguration random_pinned_configuration(int d, int n, std::uint64_t seed, int radius = 2);

}  // namespace volrig

#endif
