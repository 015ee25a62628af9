#include "volrig/bipyramid.hpp"

#include <algorithm>

#include "volrig/errors.hpp"

namespace volrig {

namespace {

const Polynomial t_var = Polynomial::variable();

Rational pow10_inverse(unsigned exponent)
{
    return Rational(Integer(1), boost::multiprecision::pow(Integer(10), exponent));
}

void check_pinned_bipyramid(const PinnedConfiguration& pinned)
{
    require(pinned.dimension() == 2, ErrorKind::InvalidParameters, "bipyramids live in the plane");
    require(pinned.size() >= 5, ErrorKind::InvalidParameters, "bipyramid needs n >= 5");
    require(pinned.base == Hyperedge{1, 2, 3}, ErrorKind::InvalidParameters,
            "bipyramid must be pinned on hyperedge 123");
    const auto& p = pinned.points;
    require(p.point(1) == Point{0, 0} && p.point(2) == Point{1, 0} && p.point(3) == Point{0, 1},
            ErrorKind::InvalidParameters, "points 1, 2, 3 are not in standard position");
}

Rational max_abs_difference(const MeasurementVector& a, const MeasurementVector& b)
{
    Rational worst = 0;
    for (std::size_t i = 0; i < a.values.size(); ++i)
        worst = std::max(worst, Rational(abs(a.values[i] - b.values[i])));
    return worst;
}

Configuration evaluate_at(const BipyramidSystem& system, const Rational& t)
{
    std::vector<Point> points;
    points.reserve(system.n);
    for (Vertex v = 1; v <= system.n; ++v)
        points.push_back({system.coordinates[v][0](t), system.coordinates[v][1](t)});
    return Configuration(2, std::move(points));
}

}  // namespace

Rational interval_recovery_tolerance() { return pow10_inverse(30); }

BipyramidSystem build_system(const PinnedConfiguration& pinned)
{
    check_pinned_bipyramid(pinned);
    const int n = pinned.size();
    const auto& p = pinned.points;
    auto x = [&](Vertex v) -> const Rational& { return p.point(v)[0]; };
    auto y = [&](Vertex v) -> const Rational& { return p.point(v)[1]; };
    auto cross_with_apex = [&](Vertex v) { return cross(x(v), y(v), x(n), y(n)); };

    require(x(4) + y(4) != 1, ErrorKind::DegenerateInput, "p(4)_1 + p(4)_2 = 1");
    require(x(n - 1) + y(n - 1) != 1, ErrorKind::DegenerateInput, "p(n-1)_1 + p(n-1)_2 = 1");
    require(x(n) != 0, ErrorKind::DegenerateInput, "p(n)_1 = 0");
    require(y(n) != 0, ErrorKind::DegenerateInput, "p(n)_2 = 0");

    BipyramidSystem sys;
    sys.n = n;
    sys.pinned = pinned;
    sys.coordinates.resize(n + 1);
    for (Vertex v : {1, 2, 3})
        sys.coordinates[v] = {RationalFunction(x(v)), RationalFunction(y(v))};

    // Hyperedge 134 keeps vertex 4 on a vertical line; t is its slide.
    sys.coordinates[4] = {RationalFunction(x(4)), RationalFunction(Polynomial(y(4)) + t_var)};

    // 23n keeps vertex n on a line of slope -1; 34n then gives
    // r (1 - p(4)_1 - p(4)_2 - t) = p(n)_1 t.
    const Polynomial r_den = Polynomial(1 - x(4) - y(4)) - t_var;
    sys.r = RationalFunction(Polynomial(x(n)) * t_var, r_den);
    sys.poles.push_back(r_den);
    const PlanarCurve apex{RationalFunction(x(n)) + sys.r, RationalFunction(y(n)) - sys.r};
    sys.coordinates[n] = apex;

    // 2(n-1)n with vertex n-1 displaced horizontally by s.
    sys.s = sys.r * RationalFunction(x(n - 1) + y(n - 1) - 1) / (RationalFunction(y(n)) - sys.r);

    // Equatorial recurrence: 1(i-1)i and (i-1)in pin q(i) given q(i-1) and
    // q(n). The system determinant is [q(i-1), q(n)], which telescopes to
    // [p(i-1), p(n)] - r.
    for (Vertex i = 5; i <= n - 1; ++i) {
        const RationalFunction denominator = RationalFunction(cross_with_apex(i - 1)) - sys.r;
        require(!denominator.numerator().is_zero(), ErrorKind::DegenerateInput,
                "recurrence denominator vanishes identically at vertex " + std::to_string(i));
        require(cross_with_apex(i - 1) != 0, ErrorKind::DegenerateInput,
                "recurrence denominator vanishes at t = 0 for vertex " + std::to_string(i) +
                    " (points 1, " + std::to_string(i - 1) + ", n collinear)");
        sys.poles.push_back(denominator.numerator());

        const RationalFunction weight_previous = RationalFunction(cross_with_apex(i)) - sys.r;
        const Rational weight_apex = cross(x(i - 1), y(i - 1), x(i), y(i));
        const PlanarCurve& previous = sys.coordinates[i - 1];
        for (int j = 0; j < 2; ++j)
            sys.coordinates[i][j] =
                (weight_previous * previous[j] + RationalFunction(weight_apex) * apex[j]) / denominator;
    }

    // Closing condition: vertex n-1 back on the line y = p(n-1)_2 (hyperedge 12(n-1)).
    const RationalFunction closing = sys.coordinates[n - 1][1] - RationalFunction(y(n - 1));
    sys.f = closing.numerator().monic();

    require(sys.f.degree() == n - 4, ErrorKind::DegenerateInput,
            "class polynomial has degree " + std::to_string(sys.f.degree()) + ", expected " +
                std::to_string(n - 4));
    require(sys.f.coefficient(0) == 0, ErrorKind::InternalConsistency, "class polynomial has f(0) != 0");
    return sys;
}

PinnedConfiguration recover_configuration(const BipyramidSystem& sys, const Rational& t0)
{
    require(sys.f(t0) == 0, ErrorKind::InvalidParameters, "t0 is not a root of the class polynomial");
    for (const auto& pole : sys.poles)
        require(pole(t0) != 0, ErrorKind::ExcludedRoot,
                "a construction denominator vanishes at t = " + to_string(t0));

    Configuration q = evaluate_at(sys, t0);
    const Hypergraph b = bipyramid(sys.n);
    require(are_equivalent(b, sys.pinned.points, q), ErrorKind::InternalConsistency,
            "recovered framework is not equivalent to the input");
    // The first-coordinate closing condition holds as a consequence.
    const Rational s_den = sys.s.denominator()(t0);
    if (s_den != 0) {
        const Rational expected = sys.pinned.points.point(sys.n - 1)[0] + sys.s(t0);
        require(q.point(sys.n - 1)[0] == expected, ErrorKind::InternalConsistency,
                "first-coordinate closing condition fails");
    }
    return PinnedConfiguration{sys.pinned.base, sys.pinned.labels, std::move(q)};
}

bool is_excluded_root(const BipyramidSystem& sys, const RootInterval& root)
{
    if (root.is_exact()) {
        return std::any_of(sys.poles.begin(), sys.poles.end(),
                           [&](const Polynomial& pole) { return pole(root.lower) == 0; });
    }
    const Polynomial g = square_free_part(sys.f);
    for (const auto& pole : sys.poles) {
        const Polynomial common = gcd(g, pole);
        // Roots of `common` are roots of f, and the interval isolates exactly
        // one root of f, so any root of `common` inside it is ours.
        if (common.degree() >= 1 && count_real_roots_in(common, root.lower, root.upper) > 0)
            return true;
    }
    return false;
}

Recovery recover_configuration(const BipyramidSystem& sys, const RootInterval& root)
{
    if (root.is_exact())
        return Recovery{root, recover_configuration(sys, root.lower), 0};

    require(!is_excluded_root(sys, root), ErrorKind::ExcludedRoot,
            "a construction denominator vanishes at the isolated root");
    const RootInterval narrow = refine_root(sys.f, root, pow10_inverse(45));
    if (narrow.is_exact())
        return Recovery{narrow, recover_configuration(sys, narrow.lower), 0};

    Configuration q = evaluate_at(sys, narrow.midpoint());
    const Hypergraph b = bipyramid(sys.n);
    const Rational defect = max_abs_difference(measure(b, q), measure(b, sys.pinned.points));
    require(defect < interval_recovery_tolerance(), ErrorKind::InternalConsistency,
            "interval recovery misses equivalence by more than 1e-30");
    return Recovery{narrow, PinnedConfiguration{sys.pinned.base, sys.pinned.labels, std::move(q)}, defect};
}

int cubic_discriminant_sign(const BipyramidSystem& sys)
{
    require(sys.n == 7, ErrorKind::InvalidParameters, "the cubic discriminant applies to n = 7");
    const Rational& a = sys.f.coefficient(3);
    require(a != 0, ErrorKind::DegenerateInput, "cubic degenerates (a = 0)");
    const Rational b = sys.f.coefficient(2);
    const Rational c = sys.f.coefficient(1);
    return (b * b - 4 * a * c).sign();
}

int cubic_discriminant_sign(const PinnedConfiguration& pinned)
{
    return cubic_discriminant_sign(build_system(pinned));
}

BipyramidAnalysis analyze_bipyramid(const PinnedConfiguration& pinned)
{
    BipyramidAnalysis out;
    out.system = build_system(pinned);
    out.real_roots = isolate_real_roots(out.system.f, Rational(1, 1024));
    for (const auto& root : out.real_roots) {
        if (is_excluded_root(out.system, root)) {
            out.excluded.push_back(root);
            continue;
        }
        out.classes.push_back(recover_configuration(out.system, root));
    }
    const std::size_t classes = out.classes.size();
    require(classes >= 1 && classes <= static_cast<std::size_t>(out.system.n - 4),
            ErrorKind::InternalConsistency, "class count outside [1, n-4]");
    if (out.system.n == 7)
        out.discriminant_sign = cubic_discriminant_sign(out.system);
    return out;
}

std::size_t count_congruence_classes(const PinnedConfiguration& pinned)
{
    return analyze_bipyramid(pinned).classes.size();
}

}  // namespace volrig
