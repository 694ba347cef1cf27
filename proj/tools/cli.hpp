#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "zhuk/sweep.hpp"
#include "zhuk/zhukovsky.hpp"

namespace zhuk::cli {

enum ExitCode : int { kSuccess = 0, kRuntimeError = 1, kCheckFailed = 2 };

struct Tolerances {
  double rank = kRankTolerance;
  double cubic = kCubicTolerance;
};

struct Config {
  Vec3 A{};
  Vec3 lambda{};
  double b = 0.0;
  Tolerances tolerances;
};

// Strict parsing: exactly {A, lambda, b, tolerances?}; tolerances may hold
// {rank, cubic}. Throws Error(config) naming the offending field.
Config parse_config(const std::string& text);
Config load_config(const std::string& path);

// Grid spec: {A1: [..], A23: x, lambda1: [..], lambda2: [..], b_fractions: [..]}.
SweepGrid parse_grid_spec(const std::string& text);

// args excludes the program name.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace zhuk::cli
