/**
 * JSON interchange. Rationals travel as "num/den" strings so that values
 * survive a round trip exactly; integers are also accepted on input.
 *
 *   hypergraph:    {"d": 2, "n": 6, "hyperedges": [[1,2,3], ...]}
 *   configuration: {"d": 2, "points": [["0/1","1/2"], ...]}
 *   framework:     hypergraph keys plus "points"
 */
#ifndef VOLRIG_IO_HPP
#define VOLRIG_IO_HPP

#include <filesystem>

#include <nlohmann/json.hpp>

#include "volrig/bipyramid.hpp"
#include "volrig/bounds.hpp"
#include "volrig/framework.hpp"
#include "volrig/oracle.hpp"
#include "volrig/rigidity.hpp"

namespace volrig {

using Json = nlohmann::ordered_json;

struct Framework {
    Hypergraph hypergraph;
    Configuration configuration;
};

Json to_json(const Rational& value);
Rational rational_from_json(const Json& value);
/// A JSON number when it fits in 64 bits, otherwise a decimal string.
Json to_json(const Integer& value);

Json to_json(const Hypergraph& hypergraph);
Hypergraph hypergraph_from_json(const Json& json);

Json to_json(const Configuration& configuration);
/// Accepts a configuration or a framework document; "d" defaults to the
/// length of the first point.
Configuration configuration_from_json(const Json& json);

Json to_json(const Framework& framework);
Framework framework_from_json(const Json& json);

Json to_json(const PinnedConfiguration& pinned);
Json to_json(const Polynomial& polynomial);
Json to_json(const RankReport& report);
Json to_json(const BipyramidAnalysis& analysis);
Json to_json(const ClassBounds& bounds);
Json to_json(const OracleReport& report);
Json to_json(const CrossValidation& result);

/// Throws InvalidParameters when the file is missing or not JSON.
Json read_json_file(const std::filesystem::path& path);
void write_json_file(const std::filesystem::path& path, const Json& json);

}  // namespace volrig

#endif
