#pragma once

#include <stdexcept>
#include <string>

namespace zhuk {

enum class ErrorKind {
  parameter,
  not_axisymmetric,
  degenerate_hypersurface,
  degenerate_family,
  pole,
  no_cusp,
  outside_regime,
  off_surface,
  singular_chart,
  inconsistent_base,
  jet_domain,
  rank_zero,
  not_rank_one,
  empty_level,
  integration,
  internal_inconsistency,
  cross_check,
  config,
};

const char* to_string(ErrorKind kind) noexcept;

// Every failure in the library is reported through this type; the kind lets
// callers (the CLI in particular) map failures to exit codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace zhuk
