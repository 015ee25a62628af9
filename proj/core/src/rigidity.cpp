#include "volrig/rigidity.hpp"

#include <algorithm>

#include "volrig/errors.hpp"

namespace volrig {

std::size_t max_rigidity_rank(int d, int n)
{
    const long value = static_cast<long>(d) * n - trivial_motion_dimension(d);
    return value > 0 ? static_cast<std::size_t>(value) : 0;
}

RigidityMatrix rigidity_matrix(const Hypergraph& g, const Configuration& p)
{
    const int d = p.dimension();
    require(g.dimension() == d && g.vertex_count() == p.size(), ErrorKind::InvalidParameters,
            "hypergraph and configuration sizes differ");
    RigidityMatrix r(g.hyperedge_count(), static_cast<std::size_t>(d) * p.size());
    for (std::size_t row = 0; row < g.hyperedge_count(); ++row) {
        const auto& h = g.hyperedge(row);
        const RationalMatrix c = configuration_matrix(p, h);
        // d/dp(i)_k det C(h,p) is the cofactor of the entry in row k+1 and
        // the column of vertex i.
        for (std::size_t col = 0; col < h.size(); ++col) {
            for (int k = 0; k < d; ++k) {
                const int parity = (k + 1 + static_cast<int>(col)) % 2 == 0 ? 1 : -1;
                r(row, static_cast<std::size_t>(h[col] - 1) * d + k) =
                    parity * determinant(c.without(k + 1, col));
            }
        }
    }
    return r;
}

bool is_infinitesimally_rigid(const Hypergraph& g, const Configuration& p)
{
    return rank(rigidity_matrix(g, p)) == max_rigidity_rank(p.dimension(), p.size());
}

std::size_t generic_rank(const Hypergraph& g, int trials, std::uint64_t seed)
{
    require(trials >= 1, ErrorKind::InvalidParameters, "at least one trial is required");
    const std::size_t ceiling = std::min<std::size_t>(
        g.hyperedge_count(), max_rigidity_rank(g.dimension(), g.vertex_count()));
    std::size_t best = 0;
    for (int t = 0; t < trials && best < ceiling; ++t) {
        const Configuration p =
            random_generic_configuration(g.dimension(), g.vertex_count(), seed + 7919ULL * t);
        best = std::max(best, rank(rigidity_matrix(g, p)));
    }
    return best;
}

bool is_generically_rigid(const Hypergraph& g, int trials, std::uint64_t seed)
{
    if (g.hyperedge_count() < max_rigidity_rank(g.dimension(), g.vertex_count()))
        return false;
    return generic_rank(g, trials, seed) == max_rigidity_rank(g.dimension(), g.vertex_count());
}

bool is_minimally_rigid(const Hypergraph& g, int trials, std::uint64_t seed)
{
    return g.hyperedge_count() == max_rigidity_rank(g.dimension(), g.vertex_count()) &&
           is_generically_rigid(g, trials, seed);
}

FlexSpace flex_space(const Hypergraph& g, const Configuration& p)
{
    require(!is_flat(p), ErrorKind::FlatConfiguration, "flex space needs a non-flat configuration");
    FlexSpace out;
    out.basis = nullspace(rigidity_matrix(g, p));
    const Hypergraph complete = complete_hypergraph(p.dimension(), p.size());
    const RigidityMatrix full = rigidity_matrix(complete, p);
    out.trivial_dimension = full.cols() - rank(full);
    return out;
}

RankReport rank_report(const Hypergraph& g, const Configuration& p)
{
    RankReport out;
    const RigidityMatrix r = rigidity_matrix(g, p);
    out.rank = rank(r);
    out.max_rank = max_rigidity_rank(p.dimension(), p.size());
    out.nullity = r.cols() - out.rank;
    if (p.size() >= p.dimension() + 1) {
        const RigidityMatrix full = rigidity_matrix(complete_hypergraph(p.dimension(), p.size()), p);
        out.trivial_dimension = full.cols() - rank(full);
    } else {
        out.trivial_dimension = r.cols();
    }
    out.nontrivial_flex_dimension =
        out.nullity > out.trivial_dimension ? out.nullity - out.trivial_dimension : 0;
    return out;
}

}  // namespace volrig
