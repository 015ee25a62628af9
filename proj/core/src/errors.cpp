#include "volrig/errors.hpp"

namespace volrig {

std::string_view to_string(ErrorKind kind) noexcept
{
    switch (kind) {
    case ErrorKind::InvalidParameters: return "invalid-parameters";
    case ErrorKind::UnsupportedDimension: return "unsupported-dimension";
    case ErrorKind::Topology: return "topology";
    case ErrorKind::MissingHyperedge: return "missing-hyperedge";
    case ErrorKind::InvalidFan: return "invalid-fan";
    case ErrorKind::FlatConfiguration: return "flat-configuration";
    case ErrorKind::DegenerateBase: return "degenerate-base";
    case ErrorKind::DegenerateInput: return "degenerate-input";
    case ErrorKind::ExcludedRoot: return "excluded-root";
    case ErrorKind::FlexibleInput: return "flexible-input";
    case ErrorKind::NoConvergence: return "no-convergence";
    case ErrorKind::InternalConsistency: return "internal-consistency";
    }
    return "unknown";
}

}  // namespace volrig
