#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "lowcond/commands.hpp"

namespace {

struct OutputSettings {
  std::string format = "json";
  std::string path;
};

void add_output_flags(CLI::App* cmd, OutputSettings& settings) {
  cmd->add_option("--format", settings.format, "json or text")->check(CLI::IsMember({"json", "text"}));
  cmd->add_option("-o,--output", settings.path, "write to this file instead of stdout");
}

int emit(const lowcond::cli::CommandOutput& result, const OutputSettings& settings) {
  const std::string body = settings.format == "text" ? result.text : result.document.dump(2) + "\n";
  if (settings.path.empty()) {
    std::cout << body;
  } else {
    std::ofstream out(settings.path);
    if (!out) {
      std::cerr << "error: cannot write '" << settings.path << "'\n";
      return lowcond::cli::kInputError;
    }
    out << body;
  }
  return result.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"lowcond: concentration graphs by low-order conditioning"};
  app.require_subcommand(1);
  OutputSettings output;

  std::string graph_path;
  auto* analyze = app.add_subcommand("analyze", "separability order, degree and degree two of a graph");
  analyze->add_option("graph", graph_path, "edge-list file")->required();
  add_output_flags(analyze, output);

  std::optional<std::size_t> max_k;
  auto* ksequence = app.add_subcommand("ksequence", "exact-oracle k-graph sequence for a ground-truth graph");
  ksequence->add_option("graph", graph_path, "edge-list file")->required();
  ksequence->add_option("--max-k", max_k, "largest conditioning order (default |V|-2)");
  add_output_flags(ksequence, output);

  lowcond::cli::SimulateConfig sim;
  std::optional<std::size_t> samples;
  auto* simulate = app.add_subcommand("simulate", "random graph -> Gaussian model -> learn");
  simulate->add_option("--vertices", sim.vertices)->required();
  simulate->add_option("--edge-prob", sim.edge_prob)->required();
  simulate->add_option("--seed", sim.seed)->required();
  simulate->add_option("--samples", samples, "also learn from this many samples (Fisher-z)");
  simulate->add_option("--significance", sim.test.significance);
  simulate->add_option("--epsilon", sim.test.epsilon, "population zero threshold");
  add_output_flags(simulate, output);

  std::string csv_path;
  lowcond::cli::LearnConfig learn_config;
  auto* learn = app.add_subcommand("learn", "learn a concentration graph from CSV data");
  learn->add_option("csv", csv_path, "CSV file, header row = vertex labels")->required();
  learn->add_option("--significance", learn_config.test.significance);
  learn->add_option("--max-k", learn_config.max_k);
  learn->add_flag("--neighbors-only", learn_config.neighbors_only,
                  "condition only on neighbours in the previous k-graph");
  learn->add_option("--max-queries", learn_config.max_queries);
  add_output_flags(learn, output);

  lowcond::VerifyOptions verify_options;
  auto* verify = app.add_subcommand("verify", "run the graph-theoretic property suites");
  verify->add_option("--vertices", verify_options.vertices);
  verify->add_option("--trials", verify_options.trials);
  verify->add_option("--seed", verify_options.seed)->required();
  verify->add_option("--exhaustive-max", verify_options.exhaustive_max);
  verify->add_flag("--inject-mutant", verify_options.inject_mutant, "corrupt one oracle answer (harness self-test)");
  add_output_flags(verify, output);

  std::size_t sample_size = 1000;
  std::uint64_t sample_seed = 0;
  auto* sample = app.add_subcommand("sample", "draw CSV data from a faithful Gaussian model of a graph");
  sample->add_option("graph", graph_path, "edge-list file")->required();
  sample->add_option("--samples", sample_size)->required();
  sample->add_option("--seed", sample_seed)->required();
  sample->add_option("-o,--output", output.path, "CSV destination (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : lowcond::cli::kInputError;
  }

  try {
    namespace cli = lowcond::cli;
    if (*analyze) return emit(cli::analyze(lowcond::read_graph_file(graph_path)), output);
    if (*ksequence) return emit(cli::ksequence(lowcond::read_graph_file(graph_path), max_k), output);
    if (*simulate) {
      sim.samples = samples;
      return emit(cli::simulate(sim), output);
    }
    if (*learn) return emit(cli::learn(lowcond::read_csv_file(csv_path), learn_config), output);
    if (*verify) return emit(cli::verify(verify_options), output);
    if (*sample) {
      const auto g = lowcond::read_graph_file(graph_path);
      lowcond::GenerationOptions generation;
      generation.seed = sample_seed;
      const auto model = lowcond::generate_faithful_model(g, generation);
      const lowcond::DataSet data{g.labels(), lowcond::sample(model, sample_size, sample_seed + 1)};
      if (output.path.empty()) {
        lowcond::write_csv(std::cout, data);
      } else {
        std::ofstream out(output.path);
        lowcond::write_csv(out, data);
      }
      return cli::kSuccess;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return lowcond::cli::exit_code_for(e);
  }
  return lowcond::cli::kInputError;
}
