#include "volrig/io.hpp"

#include <fstream>
#include <limits>

#include "volrig/errors.hpp"

namespace volrig {

namespace {

template <typename F>
auto guarded(const char* what, F&& body) -> decltype(body())
{
    try {
        return body();
    } catch (const nlohmann::json::exception& e) {
        fail(ErrorKind::InvalidParameters, std::string("malformed ") + what + ": " + e.what());
    }
}

Json points_to_json(const Configuration& p)
{
    Json points = Json::array();
    for (const auto& x : p.points()) {
        Json row = Json::array();
        for (const auto& c : x)
            row.push_back(to_json(c));
        points.push_back(std::move(row));
    }
    return points;
}

}  // namespace

Json to_json(const Rational& value) { return to_string(value); }

Rational rational_from_json(const Json& value)
{
    if (value.is_number_integer())
        return Rational(value.get<long long>());
    require(value.is_string(), ErrorKind::InvalidParameters,
            "rationals must be \"num/den\" strings or integers");
    return parse_rational(value.get<std::string>());
}

Json to_json(const Integer& value)
{
    if (value >= std::numeric_limits<long long>::min() && value <= std::numeric_limits<long long>::max())
        return value.convert_to<long long>();
    return value.str();
}

Json to_json(const Hypergraph& hypergraph)
{
    Json edges = Json::array();
    for (const auto& h : hypergraph.hyperedges())
        edges.push_back(h);
    return Json{{"d", hypergraph.dimension()}, {"n", hypergraph.vertex_count()}, {"hyperedges", edges}};
}

Hypergraph hypergraph_from_json(const Json& json)
{
    return guarded("hypergraph", [&] {
        return Hypergraph(json.at("d").get<int>(), json.at("n").get<int>(),
                          json.at("hyperedges").get<std::vector<Hyperedge>>());
    });
}

Json to_json(const Configuration& configuration)
{
    return Json{{"d", configuration.dimension()}, {"points", points_to_json(configuration)}};
}

Configuration configuration_from_json(const Json& json)
{
    return guarded("configuration", [&] {
        const Json& rows = json.at("points");
        require(rows.is_array() && !rows.empty(), ErrorKind::InvalidParameters, "no points given");
        const int d = json.contains("d") ? json.at("d").get<int>() : static_cast<int>(rows.front().size());
        std::vector<Point> points;
        for (const auto& row : rows) {
            require(row.is_array() && static_cast<int>(row.size()) == d, ErrorKind::InvalidParameters,
                    "every point needs exactly d coordinates");
            Point x;
            for (const auto& c : row)
                x.push_back(rational_from_json(c));
            points.push_back(std::move(x));
        }
        return Configuration(d, std::move(points));
    });
}

Json to_json(const Framework& framework)
{
    Json out = to_json(framework.hypergraph);
    out["points"] = points_to_json(framework.configuration);
    return out;
}

Framework framework_from_json(const Json& json)
{
    Framework out{hypergraph_from_json(json), configuration_from_json(json)};
    require(out.configuration.dimension() == out.hypergraph.dimension() &&
                out.configuration.size() == out.hypergraph.vertex_count(),
            ErrorKind::InvalidParameters, "points do not match the hypergraph");
    return out;
}

Json to_json(const PinnedConfiguration& pinned)
{
    return Json{{"base", pinned.base},
                {"labels", std::vector<Vertex>(pinned.labels.begin() + 1, pinned.labels.end())},
                {"points", points_to_json(pinned.points)}};
}

Json to_json(const Polynomial& polynomial)
{
    Json out = Json::array();
    for (const auto& c : polynomial.coefficients())
        out.push_back(to_json(c));
    return out;
}

Json to_json(const RankReport& report)
{
    return Json{{"rank", report.rank},
                {"max_rank", report.max_rank},
                {"nullity", report.nullity},
                {"trivial_dim", report.trivial_dimension},
                {"nontrivial_flex_dim", report.nontrivial_flex_dimension},
                {"infinitesimally_rigid", report.rank == report.max_rank}};
}

Json to_json(const BipyramidAnalysis& analysis)
{
    Json out{{"n", analysis.system.n},
             {"degree", analysis.system.f.degree()},
             {"coefficients", to_json(analysis.system.f)},
             {"real_roots", analysis.real_roots.size()},
             {"classes", analysis.classes.size()},
             {"excluded_roots", analysis.excluded.size()}};
    out["discriminant_sign"] = analysis.discriminant_sign ? Json(*analysis.discriminant_sign) : Json(nullptr);
    return out;
}

Json to_json(const ClassBounds& bounds)
{
    Json rules = Json::array();
    for (const auto& rule : bounds.provenance)
        rules.push_back(rule.name);
    Json out{{"lower", to_json(bounds.lower)}};
    out["upper"] = bounds.upper ? to_json(*bounds.upper) : Json(nullptr);
    out["rules"] = rules;
    return out;
}

Json to_json(const OracleReport& report)
{
    return Json{{"count", report.count},
                {"converged", report.converged},
                {"starts", report.starts},
                {"residual_max", report.residual_max},
                {"solutions", report.solutions}};
}

Json to_json(const CrossValidation& result)
{
    return Json{{"agree", result.agree},
                {"symbolic_count", result.symbolic_count},
                {"oracle_count", result.oracle_count},
                {"max_distance", result.max_distance}};
}

Json read_json_file(const std::filesystem::path& path)
{
    std::ifstream in(path);
    require(in.good(), ErrorKind::InvalidParameters, "cannot read " + path.string());
    return guarded("JSON file", [&] { return Json::parse(in); });
}

void write_json_file(const std::filesystem::path& path, const Json& json)
{
    std::ofstream out(path);
    require(out.good(), ErrorKind::InvalidParameters, "cannot write " + path.string());
    out << json.dump(2) << '\n';
}

}  // namespace volrig
