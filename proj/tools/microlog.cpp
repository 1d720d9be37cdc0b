#include <pthread.h>

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <string>

#include "microlog/cli.hpp"

namespace {

// Formulas up to the measure limit can be ~10^5 levels deep, and printing
// and tracing recurse on depth, so commands run on a thread with a large stack.
constexpr std::size_t kWorkerStackBytes = std::size_t{1} << 30;

struct Job {
  const microlog::cli::Config* config;
  int exit_code;
};

void* run_job(void* arg) {
  auto* job = static_cast<Job*>(arg);
  job->exit_code = microlog::cli::run(*job->config, std::cin, std::cout, std::cerr);
  return nullptr;
}

int run_with_large_stack(const microlog::cli::Config& config) {
  Job job{&config, microlog::cli::exit_code::usage};
  pthread_attr_t attr;
  pthread_attr_init(&attr);
  pthread_attr_setstacksize(&attr, kWorkerStackBytes);
  pthread_t thread;
  if (pthread_create(&thread, &attr, run_job, &job) != 0) {
    pthread_attr_destroy(&attr);
    return microlog::cli::run(config, std::cin, std::cout, std::cerr);
  }
  pthread_attr_destroy(&attr);
  pthread_join(thread, nullptr);
  return job.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  namespace cli = microlog::cli;

  cli::Config config;
  std::size_t default_limit = cli::kDefaultMeasureLimit;
  if (const char* env = std::getenv(cli::kMeasureLimitEnv)) {
    auto parsed = cli::parse_limit(env);
    if (!parsed) {
      std::cerr << cli::kMeasureLimitEnv << " must be a positive integer, got '" << env << "'\n";
      return cli::exit_code::usage;
    }
    default_limit = *parsed;
  }
  config.measure_limit = default_limit;

  CLI::App app{"Decide validity of propositional formulas with a sequent-calculus prover."};
  app.name("microlog");
  std::string command;
  app.add_option("command", command, "prove | countermodel | trace | table | parse")
      ->required()
      ->check(CLI::IsMember({"prove", "countermodel", "trace", "table", "parse"}));
  auto* formula_opt =
      app.add_option("formula", config.formula_text, "Formula text; omit to read one formula per line from stdin");
  app.add_flag("--json", config.json, "Emit JSON instead of text");
  app.add_flag("--batch", config.batch, "Read formulas from stdin, one per line");
  app.add_option("--measure-limit", config.measure_limit,
                 "Reject formulas whose initial measure exceeds N (default 100000, env MICROLOG_MEASURE_LIMIT)")
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return cli::exit_code::usage;
  }

  if (config.batch && formula_opt->count() > 0) {
    std::cerr << "--batch reads formulas from stdin and takes no formula argument\n";
    return cli::exit_code::usage;
  }
  if (formula_opt->count() == 0) config.batch = true;
  config.command = *cli::command_from_string(command);

  return run_with_large_stack(config);
}
