#include "fastgym/bench/bench.hpp"

#include <unistd.h>

#include <bit>
#include <chrono>
#include <cmath>
#include <cstring>
#include <ctime>
#include <numeric>
#include <stdexcept>
#include <thread>

#include <json.hpp>

namespace fastgym {
namespace {

constexpr std::uint64_t kChecksumSeed = 0xCBF29CE484222325ULL;

inline std::uint64_t fold(std::uint64_t h, std::uint64_t word) noexcept {
  return (h ^ word) * 0x100000001B3ULL;
}

std::uint64_t fold_step(std::uint64_t h, const Action& action, const StepResult& r) noexcept {
  if (const auto* a = std::get_if<std::int64_t>(&action)) {
    h = fold(h, static_cast<std::uint64_t>(*a));
  } else {
    for (double v : std::get<std::vector<double>>(action)) h = fold(h, std::bit_cast<std::uint64_t>(v));
  }
  for (double v : r.observation.data) h = fold(h, std::bit_cast<std::uint64_t>(v));
  h = fold(h, std::bit_cast<std::uint64_t>(r.reward));
  return fold(h, r.terminal ? 1 : 0);
}

using nlohmann::json;

json report_to_json(const BenchReport& r) {
  return json{
      {"env_id", r.config.env_id},
      {"mode", std::string(to_string(r.config.mode))},
      {"steps_per_trial", r.config.steps_per_trial},
      {"trials", r.config.trials},
      {"seed", r.config.seed},
      {"trial_seconds", r.trial_seconds},
      {"mean_seconds", r.mean_seconds},
      {"std_seconds", r.std_seconds},
      {"steps_per_second", r.steps_per_second},
      {"power_watts", r.config.power_watts},
      {"carbon_intensity_kg_per_kwh", r.config.carbon_intensity},
      {"energy_kwh", r.energy_kwh},
      {"co2_kg", r.co2_kg},
      {"host", r.host},
      {"timestamp_iso8601", r.timestamp_iso8601},
  };
}

}  // namespace

std::string_view to_string(BenchMode mode) noexcept {
  return mode == BenchMode::kRender ? "render" : "console";
}

BenchMode parse_bench_mode(std::string_view text) {
  if (text == "console") return BenchMode::kConsole;
  if (text == "render") return BenchMode::kRender;
  throw std::invalid_argument("unknown bench mode '" + std::string(text) +
                              "' (expected console or render)");
}

void BenchConfig::validate() const {
  if (steps_per_trial < 1) throw std::invalid_argument("BenchConfig: steps_per_trial must be >= 1");
  if (trials < 1) throw std::invalid_argument("BenchConfig: trials must be >= 1");
  if (!(power_watts > 0.0) || !std::isfinite(power_watts)) {
    throw std::invalid_argument("BenchConfig: power_watts must be > 0");
  }
  if (!(carbon_intensity >= 0.0) || !std::isfinite(carbon_intensity)) {
    throw std::invalid_argument("BenchConfig: carbon_intensity must be >= 0");
  }
}

TrialResult run_trial(const BenchConfig& config, const Registry& registry) {
  config.validate();
  const EnvSpec& spec = registry.spec(config.env_id);
  std::unique_ptr<Env> env = registry.make(config.env_id);
  const bool render = config.mode == BenchMode::kRender;
  FrameBuffer frame(spec.render_size.first, spec.render_size.second);
  Rng action_rng(config.seed);
  const Space& space = env->action_space();

  TrialResult result;
  std::uint64_t h = kChecksumSeed;
  const auto start = std::chrono::steady_clock::now();
  env->reset(config.seed);
  for (std::int64_t i = 0; i < config.steps_per_trial; ++i) {
    const Action action = sample(space, action_rng);
    const StepResult r = env->step(action);
    h = fold_step(h, action, r);
    if (render) env->render(frame);
    if (r.terminal) {
      ++result.episodes;
      env->reset();
    }
  }
  const auto stop = std::chrono::steady_clock::now();
  result.seconds = std::chrono::duration<double>(stop - start).count();
  result.checksum = h;
  return result;
}

double estimate_energy_kwh(double power_watts, double seconds) noexcept {
  return power_watts * seconds / 3'600'000.0;
}

double estimate_co2_kg(double energy_kwh, double intensity_kg_per_kwh) noexcept {
  return energy_kwh * intensity_kg_per_kwh;
}

BenchReport make_report(const BenchConfig& config, std::vector<double> trial_seconds,
                        std::string host, std::string timestamp_iso8601) {
  if (trial_seconds.empty()) throw std::invalid_argument("make_report: no trials");
  BenchReport r;
  r.config = config;
  r.trial_seconds = std::move(trial_seconds);
  const auto n = static_cast<double>(r.trial_seconds.size());
  r.mean_seconds = std::accumulate(r.trial_seconds.begin(), r.trial_seconds.end(), 0.0) / n;
  if (r.trial_seconds.size() > 1) {
    double ss = 0.0;
    for (double s : r.trial_seconds) ss += (s - r.mean_seconds) * (s - r.mean_seconds);
    r.std_seconds = std::sqrt(ss / (n - 1.0));
  }
  r.steps_per_second = static_cast<double>(config.steps_per_trial) / r.mean_seconds;
  r.energy_kwh = estimate_energy_kwh(config.power_watts, r.mean_seconds);
  r.co2_kg = estimate_co2_kg(r.energy_kwh, config.carbon_intensity);
  r.host = std::move(host);
  r.timestamp_iso8601 = std::move(timestamp_iso8601);
  return r;
}

BenchReport run_bench(const BenchConfig& config, const Registry& registry) {
  config.validate();
  std::vector<double> seconds;
  seconds.reserve(static_cast<std::size_t>(config.trials));
  for (std::int64_t t = 0; t < config.trials; ++t) {
    seconds.push_back(run_trial(config, registry).seconds);
  }
  return make_report(config, std::move(seconds), host_descriptor(), utc_timestamp_iso8601());
}

Comparison compare_reports(const BenchReport& a, const BenchReport& b) {
  if (a.config.env_id != b.config.env_id || a.config.mode != b.config.mode) {
    throw std::invalid_argument("compare_reports: reports differ in environment or mode (" +
                                a.config.env_id + "/" + std::string(to_string(a.config.mode)) +
                                " vs " + b.config.env_id + "/" +
                                std::string(to_string(b.config.mode)) + ")");
  }
  Comparison c;
  c.env_id = a.config.env_id;
  c.mode = a.config.mode;
  c.speedup = b.mean_seconds / a.mean_seconds;
  c.inverse_speedup = a.mean_seconds / b.mean_seconds;
  c.energy_ratio = b.energy_kwh / a.energy_kwh;
  c.co2_ratio = b.co2_kg / a.co2_kg;
  return c;
}

std::string serialize_report(const BenchReport& report) { return report_to_json(report).dump(2); }

BenchReport parse_report(std::string_view text) {
  try {
    const json j = json::parse(text);
    BenchReport r;
    r.config.env_id = j.at("env_id").get<std::string>();
    r.config.mode = parse_bench_mode(j.at("mode").get<std::string>());
    r.config.steps_per_trial = j.at("steps_per_trial").get<std::int64_t>();
    r.config.trials = j.at("trials").get<std::int64_t>();
    r.config.seed = j.at("seed").get<std::uint64_t>();
    r.config.power_watts = j.at("power_watts").get<double>();
    r.config.carbon_intensity = j.at("carbon_intensity_kg_per_kwh").get<double>();
    r.trial_seconds = j.at("trial_seconds").get<std::vector<double>>();
    r.mean_seconds = j.at("mean_seconds").get<double>();
    r.std_seconds = j.at("std_seconds").get<double>();
    r.steps_per_second = j.at("steps_per_second").get<double>();
    r.energy_kwh = j.at("energy_kwh").get<double>();
    r.co2_kg = j.at("co2_kg").get<double>();
    r.host = j.at("host").get<std::string>();
    r.timestamp_iso8601 = j.at("timestamp_iso8601").get<std::string>();
    return r;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("parse_report: ") + e.what());
  }
}

std::string serialize_comparison(const Comparison& c) {
  return json{
      {"env_id", c.env_id},
      {"mode", std::string(to_string(c.mode))},
      {"speedup", c.speedup},
      {"inverse_speedup", c.inverse_speedup},
      {"energy_ratio", c.energy_ratio},
      {"co2_ratio", c.co2_ratio},
  }
      .dump(2);
}

std::string host_descriptor() {
  char name[256] = {};
  if (gethostname(name, sizeof(name) - 1) != 0) std::strcpy(name, "unknown");
  std::string out = name;
  out += "; ";
  out += std::to_string(std::thread::hardware_concurrency());
  out += " hw threads; ";
#if defined(__clang__)
  out += "clang " __clang_version__;
#elif defined(__GNUC__)
  out += "gcc " __VERSION__;
#else
  out += "unknown compiler";
#endif
  return out;
}

std::string utc_timestamp_iso8601() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm utc{};
  gmtime_r(&now, &utc);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &utc);
  return buf;
}

}  // namespace fastgym
