/**
 * The volrig command line: argument parsing into a CommandRequest and its
 * execution. Reports go to the given stream as JSON (the contract) or as a
 * short text summary.
 */
#ifndef VOLRIG_CLI_HPP
#define VOLRIG_CLI_HPP

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include "volrig/errors.hpp"
#include "volrig/io.hpp"
#include "volrig/oracle.hpp"

namespace volrig::cli {

enum class Format { Json, Text };

struct CommandRequest {
    std::string subcommand;
    std::vector<std::string> inputs;
    std::uint64_t seed = 1;
    int trials = 3;
    Format format = Format::Json;
    OracleSettings oracle;

    std::optional<int> d;
    std::optional<int> n;
    std::optional<std::string> points;
    /// bound: hypergraphs of a gluing decomposition.
    std::vector<std::string> parts;
    /// glue: the hyperedge of each input that is identified.
    std::vector<Hyperedge> at;
    bool keep_common = false;
    std::optional<Hyperedge> subdivide;
    std::optional<Vertex> vertex;
    std::vector<Hyperedge> fan;
    /// oracle: pinning base; defaults to the first hyperedge.
    std::optional<Hyperedge> base;
    int instances = 10;
};

enum ExitCode : int {
    Success = 0,
    InputError = 2,
    DegeneracyError = 3,
    InternalError = 4,
};

ExitCode exit_code_for(ErrorKind kind);

/// Seed used when --seed is absent: VOLRIG_SEED if set, else 1.
std::uint64_t default_seed();

/// Parses argv. On --help or a usage error the alternative holds the exit
/// status and the message has already been written to `out`/`err`.
std::variant<CommandRequest, int> parse_arguments(int argc, const char* const* argv, std::ostream& out,
                                                  std::ostream& err);

/// Runs one command; throws volrig::Error on module failures.
Json execute(const CommandRequest& request);

/// execute() plus error mapping: writes the report or an error document and
/// returns the exit status.
int run(const CommandRequest& request, std::ostream& out);

/// "1,2,4" -> {1, 2, 4}.
Hyperedge parse_hyperedge(const std::string& text);

}  // namespace volrig::cli

#endif
