// This code is licensed under the Apache License, Version 2.0. You may
// obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.

#ifndef SQKD_STATISTICS_HPP
#define SQKD_STATISTICS_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "sqkd/attack_model.hpp"

namespace sqkd {

// A's three preparation choices. Used as the first index of every statistic.
enum class SendState : int { Zero = 0, One = 1, Plus = 2 };
inline constexpr int kSendZero = 0;
inline constexpr int kSendOne = 1;
inline constexpr int kSendPlus = 2;

// X-basis outcome indices for A's measurement.
inline constexpr int kOutcomePlus = 0;
inline constexpr int kOutcomeMinus = 1;

/// Raw tallies behind a sampled ChannelStatistics. Numerators per outcome;
/// denominators are the row sums.
struct StatCounts {
  std::array<std::array<std::uint64_t, 2>, 3> forward{};                 // [send][B outcome]
  std::array<std::array<std::array<std::uint64_t, 2>, 2>, 3> resend{};   // [send][B outcome][A outcome]
  std::array<std::array<std::uint64_t, 2>, 3> reflect{};                 // [send][A outcome]
};

/// The 14 observable channel probabilities.
///   pf[i][j]      p(i -> j): B measures |j> given A sent i
///   pm[i][j]      (p_plus, p_minus): A's X outcome given A sent i and B
///                 measured-and-resent |j>; absent when pf[i][j] = 0
///   pr[i]         (p_plus, p_minus): A's X outcome given A sent i and B
///                 reflected
/// qx() = pr[+][minus] is the round-trip X disturbance.
struct ChannelStatistics {
  std::array<std::array<double, 2>, 3> pf{};
  std::array<std::array<std::optional<std::array<double, 2>>, 2>, 3> pm{};
  std::array<std::array<double, 2>, 3> pr{};
  std::optional<StatCounts> counts;

  double qx() const { return pr[kSendPlus][kOutcomeMinus]; }
};

/// Protocol knobs for the Monte Carlo simulator.
///   p     probability A sends a Z-basis state (split evenly |0> / |1>)
///   q     probability B measures-and-resends (else reflects)
/// test_fraction > 0 discloses that fraction of key-eligible iterations for
/// statistics and drops them from the raw key; at the default 0 the simulator
/// tallies every iteration and keeps the full raw key.
struct ProtocolConfig {
  double p = 0.5;
  double q = 0.5;
  std::uint64_t iterations = 1;
  std::uint64_t seed = 0;
  double test_fraction = 0.0;

  void validate() const;  // throws std::invalid_argument
};

enum class ScenarioKind { IndependentDepolarizing, Dependent };

ScenarioKind scenario_kind_from_string(const std::string& tag);
std::string to_string(ScenarioKind kind);

/// Output of simulate_protocol: sampled statistics with counts attached plus
/// the two raw keys (bits from Z-send & measure-resend iterations).
struct SimulationResult {
  ChannelStatistics statistics;
  std::vector<std::uint8_t> key_a;
  std::vector<std::uint8_t> key_b;

  double raw_key_error_rate() const;
};

// All 14 probabilities computed analytically from the attack unitaries:
// pf from squared projections of U_F(send (x) |0>), pm by collapsing B's
// outcome, renormalizing, applying U_R and projecting onto |+->, pr from
// V = U_R U_F directly.
ChannelStatistics exact_statistics(const CollectiveAttack& attack);

// Samples cfg.iterations independent protocol iterations. Iteration n draws
// from substream_seed(cfg.seed, n) in a fixed order (send choice, B's
// operation, B's outcome, A's outcome, disclosure), so any partition of the
// iteration range across threads reproduces the serial run. threads = 0 uses
// the process default (SQKD_THREADS or hardware concurrency).
SimulationResult simulate_protocol(const CollectiveAttack& attack, const ProtocolConfig& cfg,
                                   int threads = 0);

// The two modeled noise families: Z error rate Q per pass with
// Q_X = 2Q(1-Q) (independent depolarizing passes) or Q_X = Q (dependent).
// Every mismatched statistic sits at the symmetric value 1/2.
// Requires 0 <= Q <= 1/2.
ChannelStatistics scenario_statistics(double q_error, ScenarioKind kind);

// The two observable combinations (eta1, eta2) built from pf and pm that,
// together with pr, pin the sum of the optimizer's cross products.
// Conditionals with zero-probability conditioning events enter with zero
// coefficient; an absent conditional with nonzero coefficient throws.
std::pair<double, double> eta_from_statistics(const ChannelStatistics& s);

struct ValidationIssue {
  std::string check;
  double residual = 0.0;
  bool fatal = false;
};

struct ValidationReport {
  std::vector<ValidationIssue> issues;

  bool ok() const;
  std::string summary() const;
};

// Checks row sums, entry ranges and the nonnegativity needed to split each
// pf entry per unitarity. Entries in [-1e-6, 0) are clamped to 0 (logged);
// anything below -1e-6 is fatal. `tol` applies to the row-sum checks.
ValidationReport validate_statistics(ChannelStatistics& s, double tol = kStructuralTol);

// validate_statistics + throw ValidationError if any fatal issue.
void ensure_valid_statistics(ChannelStatistics& s, double tol = kStructuralTol);

class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace sqkd

#endif
