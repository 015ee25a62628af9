#include "cli.hpp"

#include <cstdlib>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "volrig/bipyramid.hpp"
#include "volrig/bounds.hpp"
#include "volrig/rigidity.hpp"

namespace volrig::cli {

namespace {

Json error_document(std::string_view kind, const std::string& message)
{
    return Json{{"error", kind}, {"message", message}};
}

void write_text(std::ostream& out, const Json& json, const std::string& prefix = "")
{
    for (auto it = json.begin(); it != json.end(); ++it) {
        const std::string key = prefix + it.key();
        if (it->is_object())
            write_text(out, *it, key + ".");
        else
            out << key << ": " << it->dump() << '\n';
    }
}

void write(std::ostream& out, const Json& json, Format format)
{
    if (format == Format::Json)
        out << json.dump(2) << '\n';
    else
        write_text(out, json);
}

const std::string& single_input(const CommandRequest& request)
{
    require(request.inputs.size() == 1, ErrorKind::InvalidParameters,
            request.subcommand + " expects exactly one input file");
    return request.inputs.front();
}

bool is_labelled_bipyramid(const Hypergraph& h)
{
    return h.dimension() == 2 && h.vertex_count() >= 5 && h == bipyramid(h.vertex_count());
}

ClassBounds bounds_of(const Hypergraph& h, const CommandRequest& request)
{
    const int d = h.dimension();
    const int n = h.vertex_count();
    const bool triangulation = d == 2 && is_triangulation_of_s2(h);
    // A sphere triangulation minus one hyperedge is minimally rigid and keeps
    // the same classes, so the mixed-volume bound applies to it as well.
    const bool eq1 = triangulation || is_minimally_rigid(h, request.trials, request.seed);
    return combined_bounds(d, n, eq1, triangulation, is_labelled_bipyramid(h));
}

Json run_rank(const CommandRequest& request)
{
    const Framework f = framework_from_json(read_json_file(single_input(request)));
    return to_json(rank_report(f.hypergraph, f.configuration));
}

Json run_rigid(const CommandRequest& request)
{
    const Hypergraph h = hypergraph_from_json(read_json_file(single_input(request)));
    const std::size_t rank = generic_rank(h, request.trials, request.seed);
    const std::size_t max_rank = max_rigidity_rank(h.dimension(), h.vertex_count());
    return Json{{"rigid", rank == max_rank},
                {"minimally_rigid", rank == max_rank && h.hyperedge_count() == max_rank},
                {"generic_rank", rank},
                {"max_rank", max_rank},
                {"hyperedges", h.hyperedge_count()}};
}

Json run_check_s2(const CommandRequest& request)
{
    const Hypergraph h = hypergraph_from_json(read_json_file(single_input(request)));
    Json out{{"triangulation", h.dimension() == 2 && is_triangulation_of_s2(h)}};
    if (out["triangulation"].get<bool>()) {
        const OrientationVector c = homology_coefficients(h);
        const auto boundary = boundary_of(h, c);
        out["coefficients"] = c.coefficients;
        out["boundary_zero"] =
            std::all_of(boundary.begin(), boundary.end(), [](int x) { return x == 0; });
    } else {
        out["coefficients"] = nullptr;
    }
    return out;
}

Json run_bound(const CommandRequest& request)
{
    ClassBounds bounds;
    if (!request.parts.empty()) {
        std::vector<ClassBounds> parts;
        for (const auto& path : request.parts)
            parts.push_back(bounds_of(hypergraph_from_json(read_json_file(path)), request));
        bounds = gluing_bounds(parts);
    } else if (!request.inputs.empty()) {
        bounds = bounds_of(hypergraph_from_json(read_json_file(single_input(request))), request);
    } else {
        require(request.d && request.n, ErrorKind::InvalidParameters,
                "bound needs a hypergraph file, --part files or both --d and --n");
        const int d = *request.d;
        const int n = *request.n;
        require(n >= d + 1, ErrorKind::InvalidParameters, "need n >= d + 1");
        bounds = combined_bounds(d, n, true, d == 2 && n >= 4, false);
    }
    return to_json(bounds);
}

PinnedConfiguration bipyramid_instance(const CommandRequest& request)
{
    require(request.n.has_value(), ErrorKind::InvalidParameters, "bipyramid needs --n");
    const int n = *request.n;
    require(n >= 5, ErrorKind::InvalidParameters, "bipyramid needs n >= 5");
    if (!request.points)
        return random_pinned_configuration(2, n, request.seed);
    const Configuration p = configuration_from_json(read_json_file(*request.points));
    require(p.dimension() == 2 && p.size() == n, ErrorKind::InvalidParameters,
            "points file must hold n planar points");
    return standard_pinning(bipyramid(n), p, {1, 2, 3});
}

Json run_bipyramid(const CommandRequest& request)
{
    return to_json(analyze_bipyramid(bipyramid_instance(request)));
}

Json run_glue(const CommandRequest& request)
{
    require(request.inputs.size() == 2, ErrorKind::InvalidParameters, "glue expects two hypergraph files");
    require(request.at.size() == 2, ErrorKind::InvalidParameters, "glue needs --at h1 h2");
    const Hypergraph first = hypergraph_from_json(read_json_file(request.inputs[0]));
    const Hypergraph second = hypergraph_from_json(read_json_file(request.inputs[1]));
    return to_json(glue_at_hyperedge(first, request.at[0], second, request.at[1], request.keep_common));
}

Json run_split(const CommandRequest& request)
{
    const Hypergraph h = hypergraph_from_json(read_json_file(single_input(request)));
    require(request.subdivide.has_value() != request.vertex.has_value(), ErrorKind::InvalidParameters,
            "split needs exactly one of --subdivide or --vertex");
    if (request.subdivide)
        return to_json(simplex_subdivision_split(h, *request.subdivide));
    return to_json(vertex_split_2d(h, *request.vertex, request.fan));
}

Json run_oracle(const CommandRequest& request)
{
    const Framework f = framework_from_json(read_json_file(single_input(request)));
    require(f.hypergraph.hyperedge_count() > 0, ErrorKind::InvalidParameters, "hypergraph has no hyperedges");
    const Hyperedge base = request.base.value_or(f.hypergraph.hyperedge(0));
    const PinnedConfiguration pinned = standard_pinning(f.hypergraph, f.configuration, base);
    Json out = to_json(solve_equivalence_system(f.hypergraph, pinned, request.oracle));
    out["base"] = pinned.base;
    return out;
}

Json run_cross_validate(const CommandRequest& request)
{
    require(request.n.has_value(), ErrorKind::InvalidParameters, "cross-validate needs --n");
    require(request.instances >= 1, ErrorKind::InvalidParameters, "--instances must be positive");
    std::size_t agreed = 0;
    std::map<std::size_t, std::size_t> histogram;
    Json failures = Json::array();
    for (int i = 0; i < request.instances; ++i) {
        const std::uint64_t seed = request.seed + static_cast<std::uint64_t>(i);
        const CrossValidation result =
            cross_validate(random_pinned_configuration(2, *request.n, seed), request.oracle);
        ++histogram[result.symbolic_count];
        if (result.agree)
            ++agreed;
        else
            failures.push_back(Json{{"seed", seed}, {"result", to_json(result)}});
    }
    Json counts = Json::object();
    for (const auto& [count, instances] : histogram)
        counts[std::to_string(count)] = instances;
    return Json{{"n", *request.n},
                {"instances", request.instances},
                {"agreed", agreed},
                {"all_agree", agreed == static_cast<std::size_t>(request.instances)},
                {"class_counts", counts},
                {"failures", failures}};
}

}  // namespace

ExitCode exit_code_for(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::FlatConfiguration:
    case ErrorKind::DegenerateBase:
    case ErrorKind::DegenerateInput:
    case ErrorKind::ExcludedRoot:
        return DegeneracyError;
    case ErrorKind::NoConvergence:
    case ErrorKind::InternalConsistency:
        return InternalError;
    default:
        return InputError;
    }
}

std::uint64_t default_seed()
{
    if (const char* text = std::getenv("VOLRIG_SEED")) {
        try {
            return std::stoull(text);
        } catch (const std::exception&) {
            fail(ErrorKind::InvalidParameters, "VOLRIG_SEED is not an unsigned integer");
        }
    }
    return 1;
}

Hyperedge parse_hyperedge(const std::string& text)
{
    Hyperedge out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoi(item, &used));
            require(used == item.size(), ErrorKind::InvalidParameters, "");
        } catch (const std::exception&) {
            fail(ErrorKind::InvalidParameters, "cannot read hyperedge \"" + text + "\"");
        }
    }
    require(!out.empty(), ErrorKind::InvalidParameters, "empty hyperedge");
    return out;
}

std::variant<CommandRequest, int> parse_arguments(int argc, const char* const* argv, std::ostream& out,
                                                  std::ostream& err)
{
    CommandRequest request;
    CLI::App app{"Volume rigidity of hypergraph frameworks", "volrig"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format = "json";
    std::optional<std::uint64_t> seed;
    unsigned threads = 1;
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));
    app.add_option("--seed", seed, "RNG seed (overrides VOLRIG_SEED)");
    app.add_option("--threads", threads, "Worker threads for the oracle")->check(CLI::PositiveNumber);

    std::string subdivide;
    std::vector<std::string> at;
    std::vector<std::string> fan;
    std::string base;
    auto add_oracle_options = [&](CLI::App* sub) {
        sub->add_option("--starts", request.oracle.starts, "Random starts");
        sub->add_option("--tolerance", request.oracle.newton_tolerance, "Scaled residual threshold");
        sub->add_option("--max-iterations", request.oracle.max_iterations, "Newton iterations per start");
        sub->add_option("--dedup", request.oracle.dedup_distance, "Clustering radius");
        sub->add_option("--inflation", request.oracle.inflation, "Start box inflation factor");
    };

    auto* rank = app.add_subcommand("rank", "Rigidity matrix rank report for a framework");
    rank->add_option("framework", request.inputs, "Framework JSON")->required()->check(CLI::ExistingFile);

    auto* rigid = app.add_subcommand("rigid", "Generic rigidity verdict");
    rigid->add_option("hypergraph", request.inputs, "Hypergraph JSON")->required()->check(CLI::ExistingFile);
    rigid->add_option("--trials", request.trials, "Random configurations tried")->check(CLI::PositiveNumber);

    auto* s2 = app.add_subcommand("check-s2", "Sphere triangulation test and homology coefficients");
    s2->add_option("hypergraph", request.inputs, "Hypergraph JSON")->required()->check(CLI::ExistingFile);

    auto* bound = app.add_subcommand("bound", "Congruence class bounds");
    bound->add_option("hypergraph", request.inputs, "Hypergraph JSON")->check(CLI::ExistingFile);
    bound->add_option("--d", request.d, "Dimension");
    bound->add_option("--n", request.n, "Vertex count");
    bound->add_option("--part", request.parts, "Hypergraph of one glued piece (repeatable)")
        ->check(CLI::ExistingFile);
    bound->add_option("--trials", request.trials, "Random configurations tried")->check(CLI::PositiveNumber);

    auto* bip = app.add_subcommand("bipyramid", "Class polynomial and class count of a bipyramid");
    bip->add_option("--n", request.n, "Vertex count")->required();
    bip->add_option("--points", request.points, "Configuration JSON")->check(CLI::ExistingFile);

    auto* glue = app.add_subcommand("glue", "Glue two hypergraphs at a hyperedge");
    glue->add_option("hypergraphs", request.inputs, "Two hypergraph JSON files")
        ->expected(2)
        ->required()
        ->check(CLI::ExistingFile);
    glue->add_option("--at", at, "Identified hyperedges, e.g. 1,2,4 1,2,3")->expected(2)->required();
    glue->add_flag("--keep-common", request.keep_common, "Keep the common hyperedge");

    auto* split = app.add_subcommand("split", "Subdivision or planar vertex split");
    split->add_option("hypergraph", request.inputs, "Hypergraph JSON")->required()->check(CLI::ExistingFile);
    auto* subdivide_option = split->add_option("--subdivide", subdivide, "Hyperedge to subdivide");
    auto* vertex_option = split->add_option("--vertex", request.vertex, "Vertex to split");
    split->add_option("--fan", fan, "Fan hyperedges around the vertex")->needs(vertex_option);
    subdivide_option->excludes(vertex_option);

    auto* oracle = app.add_subcommand("oracle", "Multi-start Newton class count");
    oracle->add_option("framework", request.inputs, "Framework JSON")->required()->check(CLI::ExistingFile);
    oracle->add_option("--base", base, "Pinning base hyperedge");
    add_oracle_options(oracle);

    auto* cross = app.add_subcommand("cross-validate", "Symbolic versus oracle counts on random bipyramids");
    cross->add_option("--n", request.n, "Vertex count")->required();
    cross->add_option("--instances", request.instances, "Random instances")->check(CLI::PositiveNumber);
    add_oracle_options(cross);

    try {
        app.parse(argc, argv);
        request.subcommand = app.get_subcommands().front()->get_name();
        request.format = format == "text" ? Format::Text : Format::Json;
        request.seed = seed ? *seed : default_seed();
        request.oracle.seed = request.seed;
        request.oracle.threads = threads;
        for (const auto& h : at)
            request.at.push_back(parse_hyperedge(h));
        for (const auto& h : fan)
            request.fan.push_back(parse_hyperedge(h));
        if (!subdivide.empty())
            request.subdivide = parse_hyperedge(subdivide);
        if (!base.empty())
            request.base = parse_hyperedge(base);
        request.oracle.validate();
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? Success : InputError;
    } catch (const Error& e) {
        out << error_document(to_string(e.kind()), e.what()).dump(2) << '\n';
        return exit_code_for(e.kind());
    }
    return request;
}

Json execute(const CommandRequest& request)
{
    static const std::map<std::string, Json (*)(const CommandRequest&)> commands{
        {"rank", run_rank},           {"rigid", run_rigid},   {"check-s2", run_check_s2},
        {"bound", run_bound},         {"bipyramid", run_bipyramid},
        {"glue", run_glue},           {"split", run_split},   {"oracle", run_oracle},
        {"cross-validate", run_cross_validate},
    };
    const auto it = commands.find(request.subcommand);
    require(it != commands.end(), ErrorKind::InvalidParameters, "unknown subcommand " + request.subcommand);
    return it->second(request);
}

int run(const CommandRequest& request, std::ostream& out)
{
    try {
        write(out, execute(request), request.format);
        return Success;
    } catch (const Error& e) {
        write(out, error_document(to_string(e.kind()), e.what()), request.format);
        return exit_code_for(e.kind());
    } catch (const std::exception& e) {
        write(out, error_document("internal", e.what()), request.format);
        return InternalError;
    }
}

}  // namespace volrig::cli
