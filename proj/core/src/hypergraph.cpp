#include "volrig/hypergraph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>

#include "volrig/errors.hpp"

namespace volrig {

std::string to_string(const Hyperedge& hyperedge)
{
    std::string out;
    for (std::size_t i = 0; i < hyperedge.size(); ++i) {
        if (i)
            out += ',';
        out += std::to_string(hyperedge[i]);
    }
    return out;
}

Hypergraph::Hypergraph(int d, int n, std::vector<Hyperedge> hyperedges)
    : d_(d), n_(n), hyperedges_(std::move(hyperedges))
{
    require(d >= 1, ErrorKind::InvalidParameters, "dimension must be positive");
    require(n >= 0, ErrorKind::InvalidParameters, "vertex count must be non-negative");
    for (auto& h : hyperedges_) {
        require(h.size() == static_cast<std::size_t>(d + 1), ErrorKind::InvalidParameters,
                "hyperedge {" + to_string(h) + "} does not have d+1 members");
        std::sort(h.begin(), h.end());
        require(std::adjacent_find(h.begin(), h.end()) == h.end(), ErrorKind::InvalidParameters,
                "hyperedge {" + to_string(h) + "} repeats a vertex");
        require(h.front() >= 1 && h.back() <= n, ErrorKind::InvalidParameters,
                "hyperedge {" + to_string(h) + "} has a label outside 1..n");
    }
    std::sort(hyperedges_.begin(), hyperedges_.end());
    const auto dup = std::adjacent_find(hyperedges_.begin(), hyperedges_.end());
    require(dup == hyperedges_.end(), ErrorKind::InvalidParameters,
            dup == hyperedges_.end() ? std::string{} : "duplicate hyperedge {" + to_string(*dup) + "}");
}

std::optional<std::size_t> Hypergraph::index_of(Hyperedge hyperedge) const
{
    std::sort(hyperedge.begin(), hyperedge.end());
    const auto it = std::lower_bound(hyperedges_.begin(), hyperedges_.end(), hyperedge);
    if (it == hyperedges_.end() || *it != hyperedge)
        return std::nullopt;
    return static_cast<std::size_t>(it - hyperedges_.begin());
}

std::vector<std::array<Vertex, 2>> Hypergraph::edges() const
{
    std::set<std::array<Vertex, 2>> edges;
    for (const auto& h : hyperedges_)
        for (std::size_t a = 0; a < h.size(); ++a)
            for (std::size_t b = a + 1; b < h.size(); ++b)
                edges.insert({h[a], h[b]});
    return {edges.begin(), edges.end()};
}

std::vector<std::size_t> Hypergraph::star(Vertex v) const
{
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < hyperedges_.size(); ++i)
        if (std::binary_search(hyperedges_[i].begin(), hyperedges_[i].end(), v))
            out.push_back(i);
    return out;
}

Hypergraph complete_hypergraph(int d, int n)
{
    require(d >= 1 && n >= d + 1, ErrorKind::InvalidParameters,
            "complete hypergraph needs n >= d+1");
    std::vector<Hyperedge> hyperedges;
    Hyperedge current(d + 1);
    std::iota(current.begin(), current.end(), 1);
    while (true) {
        hyperedges.push_back(current);
        int pos = d;
        while (pos >= 0 && current[pos] == n - d + pos)
            --pos;
        if (pos < 0)
            break;
        ++current[pos];
        for (int k = pos + 1; k <= d; ++k)
            current[k] = current[k - 1] + 1;
    }
    return Hypergraph(d, n, std::move(hyperedges));
}

Hypergraph bipyramid(int n)
{
    require(n >= 5, ErrorKind::InvalidParameters, "bipyramid needs n >= 5");
    std::vector<Hyperedge> hyperedges;
    for (int i = 2; i <= n - 2; ++i) {
        hyperedges.push_back({1, i, i + 1});
        hyperedges.push_back({i, i + 1, n});
    }
    hyperedges.push_back({1, 2, n - 1});
    hyperedges.push_back({2, n - 1, n});
    return Hypergraph(2, n, std::move(hyperedges));
}

namespace {

using Edge = std::array<Vertex, 2>;

// Incidence of each edge with the hyperedges containing it.
std::map<Edge, std::vector<std::size_t>> edge_incidence(const Hypergraph& g)
{
    std::map<Edge, std::vector<std::size_t>> incidence;
    for (std::size_t i = 0; i < g.hyperedge_count(); ++i) {
        const auto& h = g.hyperedge(i);
        incidence[{h[0], h[1]}].push_back(i);
        incidence[{h[0], h[2]}].push_back(i);
        incidence[{h[1], h[2]}].push_back(i);
    }
    return incidence;
}

// Sign of the edge obtained by deleting position `omitted` from a sorted triangle.
int boundary_sign(std::size_t omitted) { return omitted % 2 == 0 ? 1 : -1; }

int boundary_sign(const Hyperedge& h, const Edge& e)
{
    for (std::size_t k = 0; k < 3; ++k)
        if (h[k] != e[0] && h[k] != e[1])
            return boundary_sign(k);
    fail(ErrorKind::InternalConsistency, "edge is not a face of the triangle");
}

bool link_is_single_cycle(const Hypergraph& g, Vertex v)
{
    const auto star = g.star(v);
    if (star.size() < 3)
        return false;
    std::map<Vertex, std::vector<Vertex>> link;
    for (std::size_t i : star) {
        Edge e{};
        std::size_t k = 0;
        for (Vertex u : g.hyperedge(i))
            if (u != v)
                e[k++] = u;
        link[e[0]].push_back(e[1]);
        link[e[1]].push_back(e[0]);
    }
    for (const auto& [u, neighbours] : link)
        if (neighbours.size() != 2)
            return false;
    // Walk the cycle from any vertex and check it covers the whole link.
    const Vertex start = link.begin()->first;
    Vertex previous = start;
    Vertex current = link.begin()->second[0];
    std::size_t length = 1;
    while (current != start) {
        const auto& next = link[current];
        const Vertex following = next[0] == previous ? next[1] : next[0];
        previous = current;
        current = following;
        ++length;
        if (length > link.size())
            return false;
    }
    return length == link.size();
}

bool hyperedges_connected(const Hypergraph& g, const std::map<Edge, std::vector<std::size_t>>& incidence)
{
    const std::size_t m = g.hyperedge_count();
    if (m == 0)
        return false;
    std::vector<std::vector<std::size_t>> adjacent(m);
    for (const auto& [edge, members] : incidence)
        for (std::size_t a : members)
            for (std::size_t b : members)
                if (a != b)
                    adjacent[a].push_back(b);
    std::vector<bool> seen(m, false);
    std::queue<std::size_t> queue;
    queue.push(0);
    seen[0] = true;
    std::size_t visited = 0;
    while (!queue.empty()) {
        const std::size_t i = queue.front();
        queue.pop();
        ++visited;
        for (std::size_t j : adjacent[i])
            if (!seen[j]) {
                seen[j] = true;
                queue.push(j);
            }
    }
    return visited == m;
}

}  // namespace

bool is_triangulation_of_s2(const Hypergraph& g)
{
    require(g.dimension() == 2, ErrorKind::UnsupportedDimension,
            "sphere triangulations are 3-uniform (d = 2)");
    const long n = g.vertex_count();
    const long m = static_cast<long>(g.hyperedge_count());
    if (n < 4 || m != 2 * n - 4)
        return false;
    const auto incidence = edge_incidence(g);
    if (static_cast<long>(incidence.size()) != 3 * n - 6)
        return false;
    for (const auto& [edge, members] : incidence)
        if (members.size() != 2)
            return false;
    if (!hyperedges_connected(g, incidence))
        return false;
    for (Vertex v = 1; v <= n; ++v)
        if (!link_is_single_cycle(g, v))
            return false;
    return true;
}

std::vector<int> boundary_of(const Hypergraph& g, const OrientationVector& orientation)
{
    require(orientation.coefficients.size() == g.hyperedge_count(), ErrorKind::InvalidParameters,
            "orientation length differs from hyperedge count");
    const auto edges = g.edges();
    std::vector<int> chain(edges.size(), 0);
    for (std::size_t i = 0; i < g.hyperedge_count(); ++i) {
        const auto& h = g.hyperedge(i);
        for (std::size_t omitted = 0; omitted < h.size(); ++omitted) {
            Edge e{};
            std::size_t k = 0;
            for (std::size_t j = 0; j < h.size(); ++j)
                if (j != omitted)
                    e[k++] = h[j];
            const auto pos = std::lower_bound(edges.begin(), edges.end(), e) - edges.begin();
            chain[pos] += orientation.coefficients[i] * boundary_sign(omitted);
        }
    }
    return chain;
}

OrientationVector homology_coefficients(const Hypergraph& g)
{
    require(is_triangulation_of_s2(g), ErrorKind::Topology,
            "hypergraph is not a triangulation of the sphere");
    const auto incidence = edge_incidence(g);
    const std::size_t m = g.hyperedge_count();
    std::vector<int> c(m, 0);
    c[0] = 1;
    std::queue<std::size_t> queue;
    queue.push(0);
    while (!queue.empty()) {
        const std::size_t i = queue.front();
        queue.pop();
        const auto& h = g.hyperedge(i);
        for (const Edge e : {Edge{h[0], h[1]}, Edge{h[0], h[2]}, Edge{h[1], h[2]}}) {
            for (std::size_t j : incidence.at(e)) {
                if (j == i)
                    continue;
                // The two contributions to edge e must cancel.
                const int wanted = -c[i] * boundary_sign(h, e) * boundary_sign(g.hyperedge(j), e);
                if (c[j] == 0) {
                    c[j] = wanted;
                    queue.push(j);
                } else {
                    require(c[j] == wanted, ErrorKind::Topology, "surface is not orientable");
                }
            }
        }
    }
    OrientationVector out{std::move(c)};
    const auto chain = boundary_of(g, out);
    require(std::all_of(chain.begin(), chain.end(), [](int x) { return x == 0; }),
            ErrorKind::InternalConsistency, "orientation has non-zero boundary");
    return out;
}

Hypergraph simplex_subdivision_split(const Hypergraph& g, const Hyperedge& h)
{
    const auto index = g.index_of(h);
    require(index.has_value(), ErrorKind::MissingHyperedge,
            "{" + to_string(h) + "} is not a hyperedge");
    const Vertex apex = g.vertex_count() + 1;
    const Hyperedge& removed = g.hyperedge(*index);
    std::vector<Hyperedge> hyperedges;
    for (std::size_t i = 0; i < g.hyperedge_count(); ++i)
        if (i != *index)
            hyperedges.push_back(g.hyperedge(i));
    for (std::size_t skip = 0; skip < removed.size(); ++skip) {
        Hyperedge facet;
        for (std::size_t k = 0; k < removed.size(); ++k)
            if (k != skip)
                facet.push_back(removed[k]);
        facet.push_back(apex);
        hyperedges.push_back(std::move(facet));
    }
    return Hypergraph(g.dimension(), apex, std::move(hyperedges));
}

namespace {

std::vector<Vertex> others(const Hyperedge& h, Vertex v)
{
    std::vector<Vertex> out;
    for (Vertex u : h)
        if (u != v)
            out.push_back(u);
    return out;
}

bool holds(const std::vector<Vertex>& xs, Vertex v)
{
    return std::find(xs.begin(), xs.end(), v) != xs.end();
}

}  // namespace

Hypergraph vertex_split_2d(const Hypergraph& g, Vertex v, const std::vector<Hyperedge>& fan)
{
    require(g.dimension() == 2, ErrorKind::UnsupportedDimension, "vertex splits are planar (d = 2)");
    require(v >= 1 && v <= g.vertex_count(), ErrorKind::InvalidParameters, "split vertex out of range");
    require(!fan.empty(), ErrorKind::InvalidFan, "fan is empty");

    std::vector<std::size_t> removed;
    std::vector<std::vector<Vertex>> opposite;
    for (const auto& h : fan) {
        const auto index = g.index_of(h);
        require(index.has_value(), ErrorKind::MissingHyperedge,
                "{" + to_string(h) + "} is not a hyperedge");
        require(std::find(removed.begin(), removed.end(), *index) == removed.end(),
                ErrorKind::InvalidFan, "fan repeats a hyperedge");
        const auto& sorted = g.hyperedge(*index);
        require(std::binary_search(sorted.begin(), sorted.end(), v), ErrorKind::InvalidFan,
                "fan member {" + to_string(h) + "} does not contain the split vertex");
        removed.push_back(*index);
        opposite.push_back(others(sorted, v));
    }

    // Boundary path u_1, ..., u_{k-1} of the fan, read off the opposite edges.
    std::vector<Vertex> path;
    if (opposite.size() == 1) {
        path = opposite[0];
    } else {
        for (std::size_t j = 0; j + 1 < opposite.size(); ++j) {
            const auto& a = opposite[j];
            const auto& b = opposite[j + 1];
            std::vector<Vertex> shared;
            for (Vertex u : a)
                if (holds(b, u))
                    shared.push_back(u);
            require(shared.size() == 1, ErrorKind::InvalidFan,
                    "consecutive fan members do not share an edge through the split vertex");
            if (j == 0)
                path.push_back(a[0] == shared[0] ? a[1] : a[0]);
            else
                require(path.back() != shared[0] && holds(a, path.back()), ErrorKind::InvalidFan,
                        "fan does not walk around the split vertex");
            path.push_back(shared[0]);
        }
        const auto& last = opposite.back();
        path.push_back(last[0] == path.back() ? last[1] : last[0]);
    }
    std::vector<Vertex> sorted_path = path;
    std::sort(sorted_path.begin(), sorted_path.end());
    require(std::adjacent_find(sorted_path.begin(), sorted_path.end()) == sorted_path.end(),
            ErrorKind::InvalidFan, "fan closes up around the split vertex");

    const Vertex fresh = g.vertex_count() + 1;
    std::vector<Hyperedge> hyperedges;
    for (std::size_t i = 0; i < g.hyperedge_count(); ++i)
        if (std::find(removed.begin(), removed.end(), i) == removed.end())
            hyperedges.push_back(g.hyperedge(i));
    for (std::size_t j = 0; j + 1 < path.size(); ++j)
        hyperedges.push_back({path[j], path[j + 1], fresh});
    hyperedges.push_back({path.front(), v, fresh});
    hyperedges.push_back({path.back(), v, fresh});
    return Hypergraph(2, fresh, std::move(hyperedges));
}

std::vector<Vertex> glued_labels(int n1, const Hyperedge& h1, int n2, const Hyperedge& h2)
{
    require(h1.size() == h2.size(), ErrorKind::InvalidParameters, "glued hyperedges differ in size");
    std::vector<Vertex> labels(n2 + 1, 0);
    for (std::size_t k = 0; k < h2.size(); ++k)
        labels.at(h2[k]) = h1[k];
    Vertex next = n1;
    for (Vertex v = 1; v <= n2; ++v)
        if (labels[v] == 0)
            labels[v] = ++next;
    return labels;
}

Hypergraph glue_at_hyperedge(const Hypergraph& first, const Hyperedge& h1, const Hypergraph& second,
                             const Hyperedge& h2, bool keep_common)
{
    require(first.dimension() == second.dimension(), ErrorKind::InvalidParameters,
            "glued hypergraphs differ in dimension");
    require(first.contains(h1), ErrorKind::MissingHyperedge,
            "{" + to_string(h1) + "} is not a hyperedge of the first hypergraph");
    require(second.contains(h2), ErrorKind::MissingHyperedge,
            "{" + to_string(h2) + "} is not a hyperedge of the second hypergraph");

    const auto labels = glued_labels(first.vertex_count(), h1, second.vertex_count(), h2);
    std::set<Hyperedge> hyperedges(first.hyperedges().begin(), first.hyperedges().end());
    for (const auto& h : second.hyperedges()) {
        Hyperedge mapped;
        for (Vertex v : h)
            mapped.push_back(labels[v]);
        std::sort(mapped.begin(), mapped.end());
        hyperedges.insert(std::move(mapped));
    }
    if (!keep_common) {
        Hyperedge common = h1;
        std::sort(common.begin(), common.end());
        hyperedges.erase(common);
    }
    const int n = first.vertex_count() + second.vertex_count() - static_cast<int>(h1.size());
    return Hypergraph(first.dimension(), n, {hyperedges.begin(), hyperedges.end()});
}

Hypergraph relabelled(const Hypergraph& g, std::span<const Vertex> labels)
{
    const int n = g.vertex_count();
    require(labels.size() == static_cast<std::size_t>(n + 1), ErrorKind::InvalidParameters,
            "relabelling has the wrong length");
    std::vector<Vertex> to_new(n + 1, 0);
    for (Vertex v = 1; v <= n; ++v) {
        const Vertex old = labels[v];
        require(old >= 1 && old <= n && to_new[old] == 0, ErrorKind::InvalidParameters,
                "relabelling is not a permutation");
        to_new[old] = v;
    }
    std::vector<Hyperedge> hyperedges;
    for (const auto& h : g.hyperedges()) {
        Hyperedge mapped;
        for (Vertex v : h)
            mapped.push_back(to_new[v]);
        hyperedges.push_back(std::move(mapped));
    }
    return Hypergraph(g.dimension(), n, std::move(hyperedges));
}

Hypergraph without_hyperedges(const Hypergraph& g, const std::vector<Hyperedge>& removed)
{
    std::vector<bool> drop(g.hyperedge_count(), false);
    for (const auto& h : removed) {
        const auto index = g.index_of(h);
        require(index.has_value(), ErrorKind::MissingHyperedge,
                "{" + to_string(h) + "} is not a hyperedge");
        drop[*index] = true;
    }
    std::vector<Hyperedge> kept;
    for (std::size_t i = 0; i < g.hyperedge_count(); ++i)
        if (!drop[i])
            kept.push_back(g.hyperedge(i));
    return Hypergraph(g.dimension(), g.vertex_count(), std::move(kept));
}

}  // namespace volrig
