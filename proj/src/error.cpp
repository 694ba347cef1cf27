#include "zhuk/error.hpp"

namespace zhuk {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::parameter: return "parameter";
    case ErrorKind::not_axisymmetric: return "not-axisymmetric";
    case ErrorKind::degenerate_hypersurface: return "degenerate-hypersurface";
    case ErrorKind::degenerate_family: return "degenerate-family";
    case ErrorKind::pole: return "pole";
    case ErrorKind::no_cusp: return "no-cusp-found";
    case ErrorKind::outside_regime: return "outside-degenerate-regime";
    case ErrorKind::off_surface: return "off-surface";
    case ErrorKind::singular_chart: return "singular-chart";
    case ErrorKind::inconsistent_base: return "inconsistent-base";
    case ErrorKind::jet_domain: return "jet-domain";
    case ErrorKind::rank_zero: return "rank-0-point";
    case ErrorKind::not_rank_one: return "not-rank-1";
    case ErrorKind::empty_level: return "empty-level";
    case ErrorKind::integration: return "integration";
    case ErrorKind::internal_inconsistency: return "internal-inconsistency";
    case ErrorKind::cross_check: return "cross-check-failure";
    case ErrorKind::config: return "config";
  }
  return "unknown";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

}  // namespace zhuk
