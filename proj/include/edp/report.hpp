#pragma once

#include <chrono>
#include <optional>
#include <string>

#include "edp/realization.hpp"

namespace edp {

enum class Outcome { Realized, ConditionUnmet, MethodFailure, Infeasible, ScaleExceeded, InvalidInput };

inline const char* to_string(Outcome o) {
  switch (o) {
    case Outcome::Realized: return "Realized";
    case Outcome::ConditionUnmet: return "ConditionUnmet";
    case Outcome::MethodFailure: return "MethodFailure";
    case Outcome::Infeasible: return "Infeasible";
    case Outcome::ScaleExceeded: return "ScaleExceeded";
    case Outcome::InvalidInput: return "InvalidInput";
  }
  return "?";
}

/// Which sufficient degree condition a realizer checks.
enum class DegreeVariant { Deg1, Deg2 };

/// Threshold check for the deterministic degree realizers, with the edge counts
/// of the input it was evaluated on.
struct DegreeConditions {
  DegreeVariant variant = DegreeVariant::Deg1;
  double threshold = 0.0;
  bool satisfied = false;
  int max_degree = 0;
  int e_cross = 0;
  int e_A = 0;
  int e_B = 0;
};

struct SolveReport {
  std::string method;
  Outcome outcome = Outcome::MethodFailure;
  std::optional<DegreeConditions> conditions;
  int n = 0;
  int max_degree = 0;
  int num_edges = 0;
  long long liftings = 0;
  int max_path_length = 0;
  double millis = 0.0;
  std::string detail;
  // Degree pipeline: whether every greedy list met the 2*Delta-1 size bound.
  std::optional<bool> list_bound_held;
  // Degree pipeline: false when padding could not reach exact regularity.
  std::optional<bool> regular;
  // Edge realizer: induction steps, and how many needed the alternative search.
  int induction_steps = 0;
  int fallback_steps = 0;
};

/// A realizer's answer: the realization when outcome == Realized.
struct RealizeResult {
  std::optional<Realization> realization;
  SolveReport report;

  bool ok() const noexcept { return report.outcome == Outcome::Realized && realization.has_value(); }
};

namespace detail {

inline double millis_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace detail

}  // namespace edp
