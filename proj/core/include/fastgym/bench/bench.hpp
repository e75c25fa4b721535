#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "fastgym/registry.hpp"

namespace fastgym {

enum class BenchMode { kConsole, kRender };

std::string_view to_string(BenchMode mode) noexcept;
// "console" or "render"; throws std::invalid_argument otherwise.
BenchMode parse_bench_mode(std::string_view text);

struct BenchConfig {
  std::string env_id = "CartPole-v1";
  BenchMode mode = BenchMode::kConsole;
  std::int64_t steps_per_trial = 100000;
  std::int64_t trials = 100;
  std::uint64_t seed = 0;
  double power_watts = 65.0;        // average system draw attributed to the run
  double carbon_intensity = 0.4;    // kg CO2 per kWh

  // Throws std::invalid_argument when a value is out of range.
  void validate() const;

  friend bool operator==(const BenchConfig&, const BenchConfig&) = default;
};

struct TrialResult {
  double seconds = 0.0;
  // Starting from 0xCBF29CE484222325, every step folds in, with
  // h = (h ^ word) * 0x100000001B3: the action (int64, or the bit pattern of
  // each continuous component), the bit pattern of each observation value,
  // of the reward, then terminal as 0/1. Frames are not hashed, so both modes
  // give the same checksum for the same seed.
  std::uint64_t checksum = 0;
  std::int64_t episodes = 0;
};

// One timed trial: a fresh environment is reset with config.seed and stepped
// steps_per_trial times with actions sampled from its action space by
// Rng(config.seed), calling the unseeded reset() after each terminal
// transition. Render mode draws a frame every step. Throws UnknownEnvError
// for an unregistered id.
TrialResult run_trial(const BenchConfig& config, const Registry& registry = default_registry());

struct BenchReport {
  BenchConfig config;
  std::vector<double> trial_seconds;
  double mean_seconds = 0.0;
  double std_seconds = 0.0;  // sample standard deviation; 0 for a single trial
  double steps_per_second = 0.0;
  double energy_kwh = 0.0;
  double co2_kg = 0.0;
  std::string host;
  std::string timestamp_iso8601;

  friend bool operator==(const BenchReport&, const BenchReport&) = default;
};

// watts * seconds / 3.6e6.
double estimate_energy_kwh(double power_watts, double seconds) noexcept;
double estimate_co2_kg(double energy_kwh, double intensity_kg_per_kwh) noexcept;

// Aggregates per-trial timings into a report. Energy and CO2 are per trial:
// power_watts over mean_seconds, i.e. the cost of one steps_per_trial run.
BenchReport make_report(const BenchConfig& config, std::vector<double> trial_seconds,
                        std::string host, std::string timestamp_iso8601);

// Runs config.trials trials back to back on the calling thread.
BenchReport run_bench(const BenchConfig& config, const Registry& registry = default_registry());

struct Comparison {
  std::string env_id;
  BenchMode mode = BenchMode::kConsole;
  double speedup = 0.0;          // b.mean_seconds / a.mean_seconds
  double inverse_speedup = 0.0;  // a.mean_seconds / b.mean_seconds
  double energy_ratio = 0.0;     // b.energy_kwh / a.energy_kwh
  double co2_ratio = 0.0;        // b.co2_kg / a.co2_kg
};

// How much faster/cheaper `a` is than `b`. Throws std::invalid_argument when
// env_id or mode differ.
Comparison compare_reports(const BenchReport& a, const BenchReport& b);

// JSON with the field names
// env_id, mode, steps_per_trial, trials, seed, trial_seconds, mean_seconds,
// std_seconds, steps_per_second, power_watts, carbon_intensity_kg_per_kwh,
// energy_kwh, co2_kg, host, timestamp_iso8601.
std::string serialize_report(const BenchReport& report);
// Throws std::invalid_argument on malformed input.
BenchReport parse_report(std::string_view json);

std::string serialize_comparison(const Comparison& comparison);

std::string host_descriptor();
std::string utc_timestamp_iso8601();

}  // namespace fastgym
