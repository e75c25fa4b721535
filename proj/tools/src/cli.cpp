#include "fastgym_cli/cli.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "fastgym/agent/dqn.hpp"
#include "fastgym/bench/bench.hpp"
#include "fastgym/bench/transcript.hpp"
#include "fastgym/registry.hpp"
#include "fastgym/render/framebuffer.hpp"

namespace fastgym {
namespace {

constexpr int kExitRuntime = 1;
constexpr int kExitUsage = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  return out;
}

// Resolves the id up front so a typo fails before any work is done.
void require_env(const std::string& id) { (void)default_registry().spec(id); }

struct BenchArgs {
  BenchConfig config;
  std::string mode = "console";
  std::string out;
};

int run_bench_command(BenchArgs& args, std::ostream& out) {
  args.config.mode = parse_bench_mode(args.mode);
  require_env(args.config.env_id);
  const BenchReport report = run_bench(args.config);
  const std::string json = serialize_report(report);
  if (args.out.empty()) {
    out << json << '\n';
  } else {
    open_output(args.out) << json << '\n';
    char line[160];
    std::snprintf(line, sizeof(line), "%s %s: %.0f steps/s (mean %.6f s, std %.6f s)\n",
                  args.config.env_id.c_str(), args.mode.c_str(), report.steps_per_second,
                  report.mean_seconds, report.std_seconds);
    out << line;
  }
  return 0;
}

int run_compare_command(const std::string& a, const std::string& b, std::ostream& out) {
  const Comparison c = compare_reports(parse_report(read_file(a)), parse_report(read_file(b)));
  out << serialize_comparison(c) << '\n';
  return 0;
}

struct FramesArgs {
  std::string env_id;
  std::int64_t steps = 0;
  std::string out_dir;
  std::uint64_t seed = 0;
};

// Same action script as dump-trajectory. frame_00000.ppm is the state after
// reset, frame_<i+1> the state after step i. checksums.txt lists the pixel
// payload checksum of every frame.
int run_dump_frames_command(const FramesArgs& args, std::ostream& out) {
  require_env(args.env_id);
  std::filesystem::create_directories(args.out_dir);
  const std::filesystem::path dir(args.out_dir);
  std::unique_ptr<Env> env = make(args.env_id);
  const EnvSpec& spec = default_registry().spec(args.env_id);
  FrameBuffer frame(spec.render_size.first, spec.render_size.second);
  std::ofstream sums = open_output((dir / "checksums.txt").string());

  auto emit = [&](std::int64_t index) {
    char name[32];
    std::snprintf(name, sizeof(name), "frame_%05lld.ppm", static_cast<long long>(index));
    env->render(frame);
    write_ppm(frame, dir / name);
    char hex[24];
    std::snprintf(hex, sizeof(hex), "%016llx", static_cast<unsigned long long>(checksum(frame)));
    sums << name << ' ' << hex << '\n';
  };

  Rng action_rng = Rng(args.seed).jumped();
  const Space& space = env->action_space();
  env->reset(args.seed);
  emit(0);
  for (std::int64_t i = 0; i < args.steps; ++i) {
    const StepResult r = env->step(sample(space, action_rng));
    emit(i + 1);
    if (r.terminal) env->reset();
  }
  out << "wrote " << args.steps + 1 << " frames to " << args.out_dir << '\n';
  return 0;
}

struct TrajectoryArgs {
  std::string env_id;
  std::uint64_t seed = 0;
  std::int64_t steps = 0;
  std::string out;
};

int run_dump_trajectory_command(const TrajectoryArgs& args, std::ostream& out) {
  require_env(args.env_id);
  if (args.out.empty() || args.out == "-") {
    write_transcript(args.env_id, args.seed, args.steps, out);
  } else {
    std::ofstream file = open_output(args.out);
    write_transcript(args.env_id, args.seed, args.steps, file);
  }
  return 0;
}

struct TrainArgs {
  std::string env_id = "CartPole-v0";
  std::int64_t steps = 150000;
  std::uint64_t seed = 0;
  std::string out;
  bool pixels = false;
};

int run_train_command(const TrainArgs& args, std::ostream& out) {
  require_env(args.env_id);
  std::unique_ptr<Env> env = make(args.env_id);
  TrainConfig config;
  if (args.pixels) config.observation = ObservationMode::kPixels;

  std::ofstream csv;
  if (!args.out.empty()) {
    csv = open_output(args.out);
    write_training_csv_header(csv);
  }
  Rng rng(args.seed);
  const TrainResult result = train_dqn(config, *env, args.steps, rng, [&](const EpisodeRecord& r) {
    if (csv.is_open()) write_training_csv_row(csv, r);
  });
  char line[200];
  std::snprintf(line, sizeof(line),
                "%s: %zu episodes, last-100 mean return %.2f, best 100-episode mean %.2f\n",
                args.env_id.c_str(), result.history.size(),
                trailing_mean_return(result.history, 100),
                best_trailing_mean_return(result.history, 100));
  out << line;
  return 0;
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"fastgym: classic-control environments, renderer, DQN and benchmark harness",
               "fastgym"};
  app.require_subcommand(1);

  BenchArgs bench;
  auto* bench_cmd = app.add_subcommand("bench", "Time repeated trials and report throughput");
  bench_cmd->add_option("--env", bench.config.env_id, "Environment id")->capture_default_str();
  bench_cmd->add_option("--mode", bench.mode, "console or render")
      ->check(CLI::IsMember({"console", "render"}))
      ->capture_default_str();
  bench_cmd->add_option("--steps", bench.config.steps_per_trial, "Steps per trial")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  bench_cmd->add_option("--trials", bench.config.trials, "Number of trials")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  bench_cmd->add_option("--seed", bench.config.seed, "Seed")->capture_default_str();
  bench_cmd->add_option("--power-watts", bench.config.power_watts, "Assumed power draw")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  bench_cmd->add_option("--carbon-intensity", bench.config.carbon_intensity, "kg CO2 per kWh")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  bench_cmd->add_option("--out", bench.out, "Write the JSON report here instead of stdout");

  std::string report_a;
  std::string report_b;
  auto* compare_cmd = app.add_subcommand("compare", "Speedup and energy ratios of two reports");
  compare_cmd->add_option("A", report_a, "Report of the system under test")
      ->required()
      ->check(CLI::ExistingFile);
  compare_cmd->add_option("B", report_b, "Baseline report")->required()->check(CLI::ExistingFile);

  auto* list_cmd = app.add_subcommand("list-envs", "Print registered environment ids");

  FramesArgs frames;
  auto* frames_cmd = app.add_subcommand("dump-frames", "Write rendered frames as PPM files");
  frames_cmd->add_option("--env", frames.env_id, "Environment id")->required();
  frames_cmd->add_option("--steps", frames.steps, "Steps to take")
      ->required()
      ->check(CLI::NonNegativeNumber);
  frames_cmd->add_option("--out-dir", frames.out_dir, "Output directory")->required();
  frames_cmd->add_option("--seed", frames.seed, "Seed")->capture_default_str();

  TrajectoryArgs traj;
  auto* traj_cmd = app.add_subcommand("dump-trajectory", "Write a seeded step transcript");
  traj_cmd->add_option("--env", traj.env_id, "Environment id")->required();
  traj_cmd->add_option("--seed", traj.seed, "Seed")->capture_default_str();
  traj_cmd->add_option("--steps", traj.steps, "Steps to take")
      ->required()
      ->check(CLI::NonNegativeNumber);
  traj_cmd->add_option("--out", traj.out, "Output file (default stdout)");

  TrainArgs train;
  auto* train_cmd = app.add_subcommand("train", "Train DQN and log episodes as CSV");
  train_cmd->add_option("--env", train.env_id, "Environment id")->capture_default_str();
  train_cmd->add_option("--steps", train.steps, "Environment steps")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  train_cmd->add_option("--seed", train.seed, "Seed")->capture_default_str();
  train_cmd->add_option("--out", train.out, "CSV output file");
  train_cmd->add_flag("--pixels", train.pixels, "Learn from 84x84 grayscale frames");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (*bench_cmd) return run_bench_command(bench, out);
    if (*compare_cmd) return run_compare_command(report_a, report_b, out);
    if (*list_cmd) {
      for (const std::string& id : default_registry().list()) out << id << '\n';
      return 0;
    }
    if (*frames_cmd) return run_dump_frames_command(frames, out);
    if (*traj_cmd) return run_dump_trajectory_command(traj, out);
    if (*train_cmd) return run_train_command(train, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitRuntime;
  }
  return kExitUsage;
}

}  // namespace fastgym
