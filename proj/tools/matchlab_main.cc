// matchlab: generate instance families, run matching experiments, reproduce
// the pinned acceptance experiments, and compute maximum matchings.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "matchlab/experiment.h"
#include "matchlab/families.h"
#include "matchlab/graph.h"
#include "matchlab/max_matching.h"
#include "matchlab/reproduce.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitReproduceFailed = 2;

std::vector<std::pair<std::string, std::int64_t>> ParseParams(
    const std::vector<std::string>& tokens) {
  std::vector<std::pair<std::string, std::int64_t>> params;
  for (const std::string& tok : tokens) {
    const auto eq = tok.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw std::invalid_argument("expected key=value, got '" + tok + "'");
    }
    std::size_t used = 0;
    const std::string value = tok.substr(eq + 1);
    std::int64_t v = 0;
    try {
      v = std::stoll(value, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != value.size()) {
      throw std::invalid_argument("parameter '" + tok + "' is not an integer");
    }
    params.emplace_back(tok.substr(0, eq), v);
  }
  return params;
}

// Writes to `path`, or stdout when it is empty or "-".
template <typename Fn>
void WriteOutput(const std::string& path, Fn&& write) {
  if (path.empty() || path == "-") {
    write(std::cout);
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot open '" + path + "' for writing");
  write(out);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"matchlab: online bipartite matching experiments"};
  app.require_subcommand(1);

  std::uint64_t seed = 1;
  std::uint64_t rep_seed = matchlab::CheckOptions{}.seed;
  std::size_t workers = 1;
  std::string out_path;

  auto* gen = app.add_subcommand("generate", "Write a family instance as JSON");
  std::string gen_family;
  std::vector<std::string> gen_params;
  gen->add_option("family", gen_family, "Family name")->required();
  gen->add_option("params", gen_params, "Parameters as key=value");
  gen->add_option("-o,--out", out_path, "Output file (default stdout)");

  auto* run = app.add_subcommand("run", "Run an algorithm on a family");
  matchlab::ExperimentSpec spec;
  std::vector<std::string> run_params;
  std::string format = "csv";
  run->add_option("family", spec.family, "Family name")->required();
  run->add_option("params", run_params, "Parameters as key=value");
  run->add_option("-a,--algorithm", spec.algorithm, "Algorithm name")
      ->required()
      ->check(CLI::IsMember(matchlab::algorithm_names()));
  run->add_option("-k,--passes", spec.passes, "Category-Advice passes")
      ->check(CLI::PositiveNumber);
  run->add_option("--tie", spec.tie,
                  "Tie rule: lowest-index, max-index or random");
  run->add_option("-t,--trials", spec.trials, "Trials")->check(CLI::PositiveNumber);
  run->add_option("-s,--seed", seed, "Base seed")->envname("MATCHLAB_SEED");
  run->add_option("-w,--workers", workers, "Worker threads")
      ->check(CLI::PositiveNumber);
  run->add_flag("--per-trial", spec.per_trial, "One row per trial");
  run->add_option("-f,--format", format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  run->add_option("-o,--out", out_path, "Output file (default stdout)");

  auto* rep = app.add_subcommand("reproduce", "Run a pinned experiment");
  std::string rep_name;
  rep->add_option("name", rep_name, "Experiment name")
      ->required()
      ->check(CLI::IsMember(matchlab::reproduce_names()));
  rep->add_option("-s,--seed", rep_seed, "Base seed")->envname("MATCHLAB_SEED");
  rep->add_option("-w,--workers", workers, "Worker threads")
      ->check(CLI::PositiveNumber);

  auto* oracle = app.add_subcommand("oracle", "Maximum matching of a graph file");
  std::string graph_path;
  oracle->add_option("graph", graph_path, "Graph JSON file")
      ->required()
      ->check(CLI::ExistingFile);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*gen) {
      const matchlab::Family f =
          matchlab::generate_family(gen_family, ParseParams(gen_params));
      nlohmann::json j = matchlab::to_json(f.graph);
      j["families"] = matchlab::to_json(f.descriptor);
      WriteOutput(out_path, [&](std::ostream& os) { os << j.dump(1) << '\n'; });
      return kExitOk;
    }
    if (*run) {
      spec.params = ParseParams(run_params);
      spec.seed = seed;
      spec.workers = workers;
      spec.format = format == "json" ? matchlab::OutputFormat::kJson
                                     : matchlab::OutputFormat::kCsv;
      const matchlab::ExperimentResult r = matchlab::run_experiment(spec);
      WriteOutput(out_path, [&](std::ostream& os) {
        if (spec.format == matchlab::OutputFormat::kJson) {
          os << matchlab::to_json(r).dump(1) << '\n';
        } else {
          matchlab::write_csv(os, r);
        }
      });
      return kExitOk;
    }
    if (*rep) {
      const auto results = matchlab::reproduce(rep_name, {rep_seed, workers});
      bool all = true;
      for (const auto& c : results) {
        std::printf("%s %s (%.2fs): %s\n", c.pass() ? "PASS" : "FAIL",
                    c.name.c_str(), c.seconds, c.detail.c_str());
        all = all && c.pass();
      }
      std::printf("seed %llu\n", static_cast<unsigned long long>(rep_seed));
      return all ? kExitOk : kExitReproduceFailed;
    }
    if (*oracle) {
      std::ifstream in(graph_path);
      const matchlab::BipartiteGraph g =
          matchlab::graph_from_json(nlohmann::json::parse(in));
      const matchlab::Matching m = matchlab::maximum_matching(g);
      nlohmann::json edges = nlohmann::json::array();
      for (const auto& [u, v] : m.edges()) edges.push_back({u, v});
      std::cout << nlohmann::json{{"size", m.size()}, {"edges", edges}}.dump()
                << '\n';
      return kExitOk;
    }
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  }
  return kExitUsage;
}
