#include "volrig/framework.hpp"

#include <algorithm>
#include <random>

#include "volrig/errors.hpp"

namespace volrig {

Configuration::Configuration(int d, std::vector<Point> points) : d_(d), points_(std::move(points))
{
    require(d >= 1, ErrorKind::InvalidParameters, "dimension must be positive");
    for (const auto& x : points_)
        require(x.size() == static_cast<std::size_t>(d), ErrorKind::InvalidParameters,
                "point has the wrong number of coordinates");
}

Point AffineTransform::apply(const Point& x) const
{
    Point y = linear * x;
    for (std::size_t k = 0; k < y.size(); ++k)
        y[k] += translation[k];
    return y;
}

Configuration AffineTransform::apply(const Configuration& p) const
{
    std::vector<Point> points;
    points.reserve(p.points().size());
    for (const auto& x : p.points())
        points.push_back(apply(x));
    return Configuration(p.dimension(), std::move(points));
}

RationalMatrix configuration_matrix(const Configuration& p)
{
    const int d = p.dimension();
    RationalMatrix c(d + 1, p.size());
    for (int i = 0; i < p.size(); ++i) {
        c(0, i) = 1;
        for (int k = 0; k < d; ++k)
            c(k + 1, i) = p.points()[i][k];
    }
    return c;
}

RationalMatrix configuration_matrix(const Configuration& p, const Hyperedge& h)
{
    const int d = p.dimension();
    RationalMatrix c(d + 1, h.size());
    for (std::size_t i = 0; i < h.size(); ++i) {
        const Point& x = p.point(h[i]);
        c(0, i) = 1;
        for (int k = 0; k < d; ++k)
            c(k + 1, i) = x[k];
    }
    return c;
}

Rational signed_volume(const Configuration& p, const Hyperedge& h)
{
    require(h.size() == static_cast<std::size_t>(p.dimension() + 1), ErrorKind::InvalidParameters,
            "simplex needs d+1 vertices");
    if (p.dimension() == 2) {
        const Point& a = p.point(h[0]);
        const Point& b = p.point(h[1]);
        const Point& c = p.point(h[2]);
        return (b[0] - a[0]) * (c[1] - a[1]) - (c[0] - a[0]) * (b[1] - a[1]);
    }
    return determinant(configuration_matrix(p, h));
}

MeasurementVector measure(const Hypergraph& g, const Configuration& p)
{
    require(g.dimension() == p.dimension() && g.vertex_count() == p.size(),
            ErrorKind::InvalidParameters, "hypergraph and configuration sizes differ");
    MeasurementVector out;
    out.values.reserve(g.hyperedge_count());
    for (const auto& h : g.hyperedges())
        out.values.push_back(signed_volume(p, h));
    return out;
}

bool are_equivalent(const Hypergraph& g, const Configuration& p, const Configuration& q)
{
    require(p.dimension() == q.dimension() && p.size() == q.size(), ErrorKind::InvalidParameters,
            "configurations differ in size");
    return measure(g, p) == measure(g, q);
}

bool are_congruent(const Configuration& p, const Configuration& q)
{
    require(p.dimension() == q.dimension() && p.size() == q.size(), ErrorKind::InvalidParameters,
            "configurations differ in size");
    if (p.size() < p.dimension() + 1)
        return true;
    return are_equivalent(complete_hypergraph(p.dimension(), p.size()), p, q);
}

bool is_flat(const Configuration& p)
{
    const int d = p.dimension();
    if (p.size() < d + 1)
        return true;
    RationalMatrix centred(d, p.size() - 1);
    for (int i = 1; i < p.size(); ++i)
        for (int k = 0; k < d; ++k)
            centred(k, i - 1) = p.points()[i][k] - p.points()[0][k];
    return rank(centred) < static_cast<std::size_t>(d);
}

namespace {

// Greedy choice of d+1 affinely independent vertices of a non-flat p.
Hyperedge affine_frame(const Configuration& p)
{
    const int d = p.dimension();
    Hyperedge frame{1};
    for (Vertex v = 2; v <= p.size() && static_cast<int>(frame.size()) < d + 1; ++v) {
        RationalMatrix trial(d, frame.size());
        for (std::size_t j = 1; j < frame.size(); ++j)
            for (int k = 0; k < d; ++k)
                trial(k, j - 1) = p.point(frame[j])[k] - p.point(1)[k];
        for (int k = 0; k < d; ++k)
            trial(k, frame.size() - 1) = p.point(v)[k] - p.point(1)[k];
        if (rank(trial) == frame.size())
            frame.push_back(v);
    }
    require(static_cast<int>(frame.size()) == d + 1, ErrorKind::FlatConfiguration,
            "configuration is flat");
    return frame;
}

// A with A (p(f_j) - p(f_0)) = q(f_j) - q(f_0) for the frame vertices f.
RationalMatrix linear_part(const Configuration& p, const Configuration& q, const Hyperedge& frame)
{
    const int d = p.dimension();
    RationalMatrix from(d, d), to(d, d);
    for (int j = 0; j < d; ++j)
        for (int k = 0; k < d; ++k) {
            from(k, j) = p.point(frame[j + 1])[k] - p.point(frame[0])[k];
            to(k, j) = q.point(frame[j + 1])[k] - q.point(frame[0])[k];
        }
    // A = to * from^{-1}, row by row: from^T a_r = to_r.
    const RationalMatrix from_t = from.transposed();
    RationalMatrix a(d, d);
    for (int r = 0; r < d; ++r) {
        const RationalVector row = solve(from_t, to.row(r));
        for (int c = 0; c < d; ++c)
            a(r, c) = row[c];
    }
    return a;
}

}  // namespace

std::optional<AffineTransform> find_congruence_transform(const Configuration& p, const Configuration& q)
{
    require(p.dimension() == q.dimension() && p.size() == q.size(), ErrorKind::InvalidParameters,
            "configurations differ in size");
    const Hyperedge frame = affine_frame(p);
    AffineTransform t;
    t.linear = linear_part(p, q, frame);
    const Point image = t.linear * p.point(frame[0]);
    t.translation.resize(p.dimension());
    for (int k = 0; k < p.dimension(); ++k)
        t.translation[k] = q.point(frame[0])[k] - image[k];
    if (!t.is_volume_preserving())
        return std::nullopt;
    for (Vertex v = 1; v <= p.size(); ++v)
        if (t.apply(p.point(v)) != q.point(v))
            return std::nullopt;
    return t;
}

bool are_congruent_by_transform(const Configuration& p, const Configuration& q)
{
    return find_congruence_transform(p, q).has_value();
}

std::vector<Vertex> base_first_labels(int n, const Hyperedge& base)
{
    Hyperedge sorted = base;
    std::sort(sorted.begin(), sorted.end());
    std::vector<Vertex> labels{0};
    labels.insert(labels.end(), sorted.begin(), sorted.end());
    for (Vertex v = 1; v <= n; ++v)
        if (!std::binary_search(sorted.begin(), sorted.end(), v))
            labels.push_back(v);
    return labels;
}

Configuration relabelled(const Configuration& p, std::span<const Vertex> labels)
{
    require(labels.size() == static_cast<std::size_t>(p.size() + 1), ErrorKind::InvalidParameters,
            "relabelling has the wrong length");
    std::vector<Point> points;
    points.reserve(p.size());
    for (Vertex v = 1; v <= p.size(); ++v)
        points.push_back(p.point(labels[v]));
    return Configuration(p.dimension(), std::move(points));
}

PinnedConfiguration standard_pinning(const Hypergraph& g, const Configuration& p, const Hyperedge& base)
{
    const int d = p.dimension();
    require(g.dimension() == d && g.vertex_count() == p.size(), ErrorKind::InvalidParameters,
            "hypergraph and configuration sizes differ");
    require(g.contains(base), ErrorKind::MissingHyperedge,
            "pinning base {" + to_string(base) + "} is not a hyperedge");
    const auto labels = base_first_labels(p.size(), base);
    const Configuration moved = relabelled(p, labels);

    // Affine coordinates with respect to the base simplex: origin at vertex 1,
    // the other base vertices become the standard basis vectors.
    RationalMatrix frame(d, d);
    for (int j = 0; j < d; ++j)
        for (int k = 0; k < d; ++k)
            frame(k, j) = moved.point(j + 2)[k] - moved.point(1)[k];
    require(determinant(frame) != 0, ErrorKind::DegenerateBase, "pinning base has zero volume");

    std::vector<Point> points;
    points.reserve(p.size());
    for (Vertex v = 1; v <= p.size(); ++v) {
        Point offset(d);
        for (int k = 0; k < d; ++k)
            offset[k] = moved.point(v)[k] - moved.point(1)[k];
        points.push_back(solve(frame, offset));
    }
    Hyperedge sorted = base;
    std::sort(sorted.begin(), sorted.end());
    return PinnedConfiguration{std::move(sorted), labels, Configuration(d, std::move(points))};
}

PinnedConfiguration as_pinned(Configuration points)
{
    const int d = points.dimension();
    require(points.size() >= d + 1, ErrorKind::InvalidParameters, "too few points to pin");
    for (Vertex v = 1; v <= d + 1; ++v)
        for (int k = 0; k < d; ++k) {
            const Rational expected = (v >= 2 && k == v - 2) ? 1 : 0;
            require(points.point(v)[k] == expected, ErrorKind::InvalidParameters,
                    "points are not in standard pinned position");
        }
    Hyperedge base(d + 1);
    for (int i = 0; i <= d; ++i)
        base[i] = i + 1;
    std::vector<Vertex> labels(points.size() + 1);
    for (Vertex v = 0; v <= points.size(); ++v)
        labels[v] = v;
    return PinnedConfiguration{std::move(base), std::move(labels), std::move(points)};
}

Configuration random_generic_configuration(int d, int n, std::uint64_t seed, int bound)
{
    require(bound >= 2, ErrorKind::InvalidParameters, "bound must be at least 2");
    require(d >= 1 && n >= 0, ErrorKind::InvalidParameters, "invalid configuration shape");
    std::seed_seq sequence{seed};
    std::mt19937_64 rng(sequence);
    std::uniform_int_distribution<int> numerator(-bound, bound);
    std::uniform_int_distribution<int> denominator(1, 997);
    std::vector<Point> points(n, Point(d));
    for (auto& x : points)
        for (auto& coordinate : x) {
            const int num = numerator(rng);
            coordinate = Rational(num, denominator(rng));
        }
    return Configuration(d, std::move(points));
}

PinnedConfiguration random_pinned_configuration(int d, int n, std::uint64_t seed, int radius)
{
    require(d >= 1 && n >= d + 1, ErrorKind::InvalidParameters, "invalid configuration shape");
    require(radius >= 1, ErrorKind::InvalidParameters, "radius must be positive");
    std::seed_seq sequence{seed};
    std::mt19937_64 rng(sequence);
    std::uniform_int_distribution<int> denominator(1, 97);
    std::vector<Point> points(n, Point(d));
    for (int v = 1; v <= d; ++v)
        points[v][v - 1] = 1;
    for (int v = d + 1; v < n; ++v)
        for (auto& coordinate : points[v]) {
            const int den = denominator(rng);
            std::uniform_int_distribution<int> numerator(-radius * den, radius * den);
            int num = 0;
            while (num == 0)
                num = numerator(rng);
            coordinate = Rational(num, den);
        }
    return as_pinned(Configuration(d, std::move(points)));
}

}  // namespace volrig
