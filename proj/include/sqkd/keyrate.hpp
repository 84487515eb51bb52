// This code is licensed under the Apache License, Version 2.0. You may
// obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.

#ifndef SQKD_KEYRATE_HPP
#define SQKD_KEYRATE_HPP

#include <array>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "sqkd/statistics.hpp"

namespace sqkd {

/// The eight free variables of the S(A|E) bound. The four norms split each
/// observable pf entry per unitarity:
///   n01 = <r001|r001>  in [0, pf(0->0)]     n13 = <r131|r131>  in [0, pf(1->1)]
///   n02 = <r021|r021>  in [0, pf(1->0)]     n11 = <r111|r111>  in [0, pf(0->1)]
/// lambda[i] are the real cross products, each Cauchy-Schwarz-bounded by the
/// geometric mean of its pair of norms.
struct KeyRateVariables {
  double n01 = 0.0;
  double n13 = 0.0;
  double n02 = 0.0;
  double n11 = 0.0;
  std::array<double, 4> lambda{};
};

enum class ConstraintMode { Full, ErrorEventsOnly };

ConstraintMode constraint_mode_from_string(const std::string& tag);
std::string to_string(ConstraintMode mode);

/// The constraint set the minimizer runs under. Full mode carries the four
/// box constraints, the four Cauchy-Schwarz constraints and the equality
///   sum lambda = 2(1 - Q_X) - (pr(0->+) + pr(1->+)) - eta1 - eta2.
/// Error-events-only mode drops the equality (eta and pr treated as
/// unobserved), leaving 8 constraints.
struct ConstraintSet {
  ConstraintMode mode = ConstraintMode::Full;
  // box upper bounds for (n01, n13, n02, n11); lower bounds are 0
  std::array<double, 4> n_upper{};
  bool has_equality = false;
  double lambda_sum_target = 0.0;

  std::size_t size() const { return has_equality ? 9 : 8; }

  // a-side and b-side norms of bound term i, derived from the variables
  std::array<double, 4> term_a(const KeyRateVariables& v) const;
  std::array<double, 4> term_b(const KeyRateVariables& v) const;
  // Cauchy-Schwarz radius for lambda[i] at the given norms
  std::array<double, 4> cs_radius(const KeyRateVariables& v) const;

  // Largest violation of every constraint in the set at v (0 if satisfied).
  double max_violation(const KeyRateVariables& v) const;
  // Per-constraint signed residuals, for reporting: box (4), CS (4),
  // equality (1, full mode only).
  std::vector<double> residuals(const KeyRateVariables& v) const;
};

ConstraintSet build_constraints(const ChannelStatistics& s, ConstraintMode mode);

class InfeasibleStatisticsError : public std::runtime_error {
 public:
  explicit InfeasibleStatisticsError(const std::string& what) : std::runtime_error(what) {}
};

// The entropic lower bound on S(A|E): sum over four terms of
//   (a+b)/2 * [ h(a/(a+b)) - h(lambda_term) ]
// with lambda_term = 1/2 + sqrt((a-b)^2 + 4 lambda^2) / (2(a+b)).
// Terms with a+b = 0 contribute 0. Requires v inside the box constraints of
// s (within kFeasibilitySlack); throws std::invalid_argument otherwise.
double s_ae_lower_bound(const KeyRateVariables& v, const ChannelStatistics& s);

struct MinimizeOptions {
  int restarts = 200;
  double objective_tol = 1e-6;   // simplex convergence tolerance
  std::uint64_t seed = 1;
  int max_iterations = 2000;     // per restart
  int threads = 0;               // 0 = process default
};

struct KeyRateResult {
  double s_ae_bound = 0.0;
  double h_a_b = 0.0;
  double key_rate = 0.0;
  KeyRateVariables minimizer;
  int restarts_agreeing = 0;     // restarts within 1e-4 of the reported minimum
  bool feasible = false;
  std::vector<double> restart_values;
  std::vector<double> residuals;  // constraint residuals at the minimizer
};

// Minimizes s_ae_lower_bound over the constraint set by Nelder-Mead from
// random feasible starts. The equality is eliminated by solving for
// lambda[3]; candidate points whose eliminated value leaves its
// Cauchy-Schwarz interval are rejected. Start points are drawn exactly
// feasible (see keyrate.cpp); a quadratic-penalty polish handles degenerate
// boxes. Throws InfeasibleStatisticsError when the constraint set is empty.
KeyRateResult minimize_bound(const ChannelStatistics& s, ConstraintMode mode,
                             const MinimizeOptions& opts = {});

// H(A|B) of the raw-key joint P(a,b) = pf(a->b)/2 (uniform Z priors).
double h_a_given_b(const ChannelStatistics& s);

// r = minimize_bound(...).s_ae_bound - h_a_given_b(s)
KeyRateResult key_rate(const ChannelStatistics& s, ConstraintMode mode,
                       const MinimizeOptions& opts = {});

struct ThresholdOptions {
  double q_min = 0.0;
  double q_max = 0.25;
  double q_tol = 1e-4;
  MinimizeOptions minimize;
};

struct ThresholdProbe {
  double q = 0.0;
  double rate = 0.0;
};

struct ThresholdResult {
  double q_star = 0.0;
  double bracket_lo = 0.0;
  double bracket_hi = 0.0;
  std::vector<ThresholdProbe> probes;
};

// Bisection for the zero crossing of key_rate(scenario_statistics(Q, kind))
// over [q_min, q_max]. Requires a sign change across the bracket; throws
// std::runtime_error otherwise.
ThresholdResult find_threshold(ScenarioKind kind, const ThresholdOptions& opts = {});

// Independent cross-check of the minimizer: evaluate the bound on a coarse
// feasible grid (steps_per_dim points per free dimension, Cauchy-Schwarz
// directions scaled to [-1, 1]) and return the smallest feasible value seen.
double grid_scan_minimum(const ChannelStatistics& s, ConstraintMode mode,
                         int steps_per_dim = 11, int threads = 0);

}  // namespace sqkd

#endif
