#include "volrig/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <thread>

#include <Eigen/Dense>

#include "volrig/bipyramid.hpp"
#include "volrig/errors.hpp"
#include "volrig/rigidity.hpp"

namespace volrig {

namespace {

struct PinnedSystem {
    int d = 0;
    int n = 0;
    /// Hyperedges in pinned labels; the first `solved` of them enter Newton.
    std::vector<Hyperedge> hyperedges;
    std::size_t solved = 0;
    Eigen::VectorXd targets;
    Eigen::MatrixXd base;  // d x (d+1), columns are the fixed base points
    double scale = 1.0;

    int unknowns() const { return d * (n - d - 1); }

    Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic> simplex(const Hyperedge& h,
                                                                   const Eigen::VectorXd& x) const
    {
        Eigen::MatrixXd m(d + 1, d + 1);
        for (int c = 0; c <= d; ++c) {
            m(0, c) = 1.0;
            const Vertex v = h[c];
            for (int k = 0; k < d; ++k)
                m(k + 1, c) = v <= d + 1 ? base(k, v - 1) : x((v - d - 2) * d + k);
        }
        return m;
    }

    /// Residuals of hyperedges [0, count).
    Eigen::VectorXd residual(const Eigen::VectorXd& x, std::size_t count) const
    {
        Eigen::VectorXd out(count);
        for (std::size_t i = 0; i < count; ++i)
            out(i) = simplex(hyperedges[i], x).determinant() - targets(i);
        return out;
    }

    Eigen::MatrixXd jacobian(const Eigen::VectorXd& x) const
    {
        Eigen::MatrixXd jac = Eigen::MatrixXd::Zero(solved, unknowns());
        for (std::size_t i = 0; i < solved; ++i) {
            const Hyperedge& h = hyperedges[i];
            const Eigen::MatrixXd m = simplex(h, x);
            for (int c = 0; c <= d; ++c) {
                if (h[c] <= d + 1)
                    continue;
                for (int k = 0; k < d; ++k) {
                    Eigen::MatrixXd minor(d, d);
                    for (int r = 0, rr = 0; r <= d; ++r) {
                        if (r == k + 1)
                            continue;
                        for (int cc = 0, mc = 0; cc <= d; ++cc) {
                            if (cc == c)
                                continue;
                            minor(rr, mc++) = m(r, cc);
                        }
                        ++rr;
                    }
                    const double sign = (k + 1 + c) % 2 == 0 ? 1.0 : -1.0;
                    jac(i, (h[c] - d - 2) * d + k) = sign * minor.determinant();
                }
            }
        }
        return jac;
    }

    double scaled_residual(const Eigen::VectorXd& x) const
    {
        return residual(x, hyperedges.size()).lpNorm<Eigen::Infinity>() / scale;
    }
};

struct NewtonResult {
    bool converged = false;
    Eigen::VectorXd x;
    double residual = std::numeric_limits<double>::infinity();
};

NewtonResult newton(const PinnedSystem& sys, Eigen::VectorXd x, const OracleSettings& settings)
{
    const double blowup = 1e8 * (1.0 + x.lpNorm<Eigen::Infinity>());
    Eigen::VectorXd f = sys.residual(x, sys.solved);
    double merit = f.squaredNorm();
    for (int iteration = 0; iteration < settings.max_iterations; ++iteration) {
        if (f.lpNorm<Eigen::Infinity>() / sys.scale < settings.newton_tolerance)
            break;
        const Eigen::VectorXd step = sys.jacobian(x).colPivHouseholderQr().solve(-f);
        if (!step.allFinite())
            return {};
        double alpha = 1.0;
        bool improved = false;
        for (int halving = 0; halving < 40; ++halving, alpha *= 0.5) {
            Eigen::VectorXd trial = x + alpha * step;
            Eigen::VectorXd trial_f = sys.residual(trial, sys.solved);
            const double trial_merit = trial_f.squaredNorm();
            if (std::isfinite(trial_merit) && trial_merit < merit) {
                x = std::move(trial);
                f = std::move(trial_f);
                merit = trial_merit;
                improved = true;
                break;
            }
        }
        if (!improved || x.lpNorm<Eigen::Infinity>() > blowup)
            break;
    }
    NewtonResult out;
    out.residual = sys.scaled_residual(x);
    out.converged = std::isfinite(out.residual) && out.residual < settings.newton_tolerance;
    out.x = std::move(x);
    return out;
}

PinnedSystem pinned_system(const Hypergraph& hypergraph, const PinnedConfiguration& pinned)
{
    const int d = pinned.dimension();
    const int n = pinned.size();
    require(hypergraph.dimension() == d && hypergraph.vertex_count() == n,
            ErrorKind::InvalidParameters, "hypergraph and configuration sizes differ");
    const Hypergraph h = relabelled(hypergraph, pinned.labels);
    Hyperedge base(d + 1);
    std::iota(base.begin(), base.end(), 1);
    require(h.contains(base), ErrorKind::MissingHyperedge, "pinning base is not a hyperedge");

    PinnedSystem sys;
    sys.d = d;
    sys.n = n;
    std::vector<Hyperedge> rest;
    for (const auto& e : h.hyperedges())
        if (e != base)
            rest.push_back(e);
    std::optional<Hyperedge> dropped;
    if (d == 2 && is_triangulation_of_s2(h)) {
        dropped = rest.back();
        rest.pop_back();
    }
    sys.solved = rest.size();
    sys.hyperedges = rest;
    if (dropped)
        sys.hyperedges.push_back(*dropped);
    sys.hyperedges.push_back(base);
    require(static_cast<int>(sys.solved) >= sys.unknowns(), ErrorKind::InvalidParameters,
            "pinned system is underdetermined: " + std::to_string(sys.solved) + " equations, " +
                std::to_string(sys.unknowns()) + " unknowns");

    sys.base.resize(d, d + 1);
    for (int v = 1; v <= d + 1; ++v)
        for (int k = 0; k < d; ++k)
            sys.base(k, v - 1) = static_cast<double>(pinned.points.point(v)[k]);
    sys.targets.resize(sys.hyperedges.size());
    double largest = 0.0;
    for (std::size_t i = 0; i < sys.hyperedges.size(); ++i) {
        sys.targets(i) = static_cast<double>(signed_volume(pinned.points, sys.hyperedges[i]));
        largest = std::max(largest, std::abs(sys.targets(i)));
    }
    sys.scale = std::max(1.0, largest);
    return sys;
}

std::vector<Eigen::VectorXd> starting_points(const PinnedSystem& sys, const Eigen::VectorXd& seed_point,
                                             const OracleSettings& settings)
{
    Eigen::VectorXd lo = Eigen::VectorXd::Constant(sys.d, std::numeric_limits<double>::infinity());
    Eigen::VectorXd hi = -lo;
    auto include = [&](int k, double value) {
        lo(k) = std::min(lo(k), value);
        hi(k) = std::max(hi(k), value);
    };
    for (int v = 0; v <= sys.d; ++v)
        for (int k = 0; k < sys.d; ++k)
            include(k, sys.base(k, v));
    for (Eigen::Index i = 0; i < seed_point.size(); ++i)
        include(static_cast<int>(i % sys.d), seed_point(i));

    std::vector<std::uniform_real_distribution<double>> coordinate;
    for (int k = 0; k < sys.d; ++k) {
        const double centre = 0.5 * (lo(k) + hi(k));
        const double half = 0.5 * settings.inflation * std::max(hi(k) - lo(k), 1e-3);
        coordinate.emplace_back(centre - half, centre + half);
    }
    std::mt19937_64 rng(settings.seed);
    std::vector<Eigen::VectorXd> out;
    out.reserve(settings.starts);
    out.push_back(seed_point);
    for (int s = 1; s < settings.starts; ++s) {
        Eigen::VectorXd x(seed_point.size());
        for (Eigen::Index i = 0; i < x.size(); ++i)
            x(i) = coordinate[i % sys.d](rng);
        out.push_back(std::move(x));
    }
    return out;
}

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t i)
{
    while (parent[i] != i)
        i = parent[i] = parent[parent[i]];
    return i;
}

}  // namespace

void OracleSettings::validate() const
{
    require(starts >= 1, ErrorKind::InvalidParameters, "starts must be at least 1");
    require(newton_tolerance > 0 && dedup_distance > 0 && inflation > 0,
            ErrorKind::InvalidParameters, "oracle thresholds must be positive");
    require(max_iterations >= 1, ErrorKind::InvalidParameters, "max_iterations must be at least 1");
}

OracleReport solve_equivalence_system(const Hypergraph& hypergraph, const PinnedConfiguration& pinned,
                                      const OracleSettings& settings)
{
    settings.validate();
    require(is_generically_rigid(hypergraph), ErrorKind::FlexibleInput,
            "hypergraph is not generically rigid");
    const PinnedSystem sys = pinned_system(hypergraph, pinned);

    Eigen::VectorXd seed_point(sys.unknowns());
    for (Vertex v = sys.d + 2; v <= sys.n; ++v)
        for (int k = 0; k < sys.d; ++k)
            seed_point((v - sys.d - 2) * sys.d + k) = static_cast<double>(pinned.points.point(v)[k]);
    const auto starts = starting_points(sys, seed_point, settings);

    std::vector<NewtonResult> results(starts.size());
    const unsigned workers = std::clamp<unsigned>(settings.threads, 1, static_cast<unsigned>(starts.size()));
    auto work = [&](unsigned worker) {
        for (std::size_t i = worker; i < starts.size(); i += workers)
            results[i] = newton(sys, starts[i], settings);
    };
    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w)
            pool.emplace_back(work, w);
    }
    require(results.front().converged, ErrorKind::NoConvergence,
            "Newton did not converge even from the input configuration");

    std::vector<std::size_t> order;
    for (std::size_t i = 0; i < results.size(); ++i)
        if (results[i].converged)
            order.push_back(i);
    auto as_vector = [&](std::size_t i) {
        const auto& x = results[i].x;
        return std::vector<double>(x.data(), x.data() + x.size());
    };
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return as_vector(a) < as_vector(b); });

    std::vector<std::size_t> parent(order.size());
    std::iota(parent.begin(), parent.end(), 0);
    for (std::size_t a = 0; a < order.size(); ++a)
        for (std::size_t b = a + 1; b < order.size(); ++b) {
            const double gap = (results[order[a]].x - results[order[b]].x).lpNorm<Eigen::Infinity>();
            if (gap < settings.dedup_distance)
                parent[find_root(parent, a)] = find_root(parent, b);
        }

    // One representative per cluster: the member with the smallest residual.
    std::vector<std::size_t> best(order.size(), order.size());
    for (std::size_t a = 0; a < order.size(); ++a) {
        const std::size_t root = find_root(parent, a);
        if (best[root] == order.size() || results[order[a]].residual < results[order[best[root]]].residual)
            best[root] = a;
    }
    std::vector<std::size_t> representatives;
    for (std::size_t a = 0; a < order.size(); ++a)
        if (find_root(parent, a) == a)
            representatives.push_back(order[best[a]]);
    std::sort(representatives.begin(), representatives.end(),
              [&](std::size_t a, std::size_t b) { return as_vector(a) < as_vector(b); });

    OracleReport report;
    report.starts = starts.size();
    report.converged = order.size();
    report.convergence_rate = static_cast<double>(order.size()) / static_cast<double>(starts.size());
    for (std::size_t i : representatives) {
        report.solutions.push_back(as_vector(i));
        report.residuals.push_back(results[i].residual);
        report.residual_max = std::max(report.residual_max, results[i].residual);
    }
    report.count = representatives.size();
    return report;
}

CrossValidation cross_validate(const PinnedConfiguration& pinned, const OracleSettings& settings)
{
    const BipyramidAnalysis analysis = analyze_bipyramid(pinned);
    const OracleReport report = solve_equivalence_system(bipyramid(pinned.size()), pinned, settings);

    CrossValidation out;
    out.symbolic_count = analysis.classes.size();
    out.oracle_count = report.count;
    bool all_close = true;
    for (const auto& solution : report.solutions) {
        double nearest = std::numeric_limits<double>::infinity();
        for (const auto& recovery : analysis.classes) {
            double gap = 0.0;
            for (std::size_t i = 0; i < solution.size(); ++i) {
                const Vertex v = 4 + static_cast<Vertex>(i / 2);
                const double exact = static_cast<double>(recovery.configuration.points.point(v)[i % 2]);
                gap = std::max(gap, std::abs(solution[i] - exact));
            }
            nearest = std::min(nearest, gap);
        }
        out.max_distance = std::max(out.max_distance, nearest);
        all_close = all_close && nearest < settings.dedup_distance;
    }
    out.agree = all_close && out.symbolic_count == out.oracle_count;
    return out;
}

}  // namespace volrig
