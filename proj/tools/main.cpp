#include <iostream>
#include <map>

#include <CLI11.hpp>
#include <json.hpp>

#include "pircon/error.hpp"
#include "pircon/run.hpp"

int main(int argc, char** argv) {
  pircon::RunConfig config;
  std::string family, order, format;
  std::optional<int> n_max;

  CLI::App app{"Special partial matchings, signed involutions and Bruhat order verification"};
  app.require_subcommand(1);
  const std::map<std::string, std::string> about{
      {"gen", "write a family and its Bruhat poset"},
      {"check-spm", "check a matching on a poset file, or run the small-poset suite"},
      {"pircon", "classify principal ideals by SPM search"},
      {"fixed-spm", "fixed-subposet construction on C(w0) under conjugation by w0"},
      {"el-verify", "EL check, gradedness and closure of decreasing chains"},
      {"homology", "Z/2 homology of the proper part of F^B_n"},
      {"stats", "inv, neg, length, dna and rank of each element"},
  };
  for (const auto& name : pircon::command_names()) {
    CLI::App* sub = app.add_subcommand(name, about.at(name));
    sub->add_option("--n", config.n, "rank parameter (or max poset size for the check-spm suite)");
    sub->add_option("--n-max", n_max, "run every n from --n to --n-max");
    sub->add_option("--family", family, "inv, fpf-inv, signed-inv or fpf-signed-inv");
    sub->add_option("--order", order, "bruhat or dual");
    sub->add_option("--labeling", config.labeling, "ci-candidate, cv-candidate, searched or from-file");
    sub->add_option("--labels-file", config.labels_file, "labels JSON for --labeling from-file");
    sub->add_option("--format", format, "json, dot or csv");
    sub->add_option("--jobs", config.jobs, "worker threads");
    sub->add_option("--seed", config.seed, "seed for random fixtures");
    sub->add_flag("--strict-claims", config.strict_claims, "assert the intermediate claims of the fixed-point construction");
    sub->add_option("--random", config.random_posets, "random posets added to the check-spm suite");
    sub->add_option("--out", config.out_dir, "output directory");
    sub->add_option("--poset", config.poset_file, "poset JSON (check-spm, pircon)");
    sub->add_option("--matching", config.matching_file, "matching JSON (check-spm)");
  }
  CLI11_PARSE(app, argc, argv);

  config.command = app.get_subcommands().front()->get_name();
  config.n_max = n_max;
  try {
    if (!family.empty()) config.family = pircon::parse_family(family);
    if (!order.empty()) config.order = pircon::parse_order(order);
    if (!format.empty()) config.format = pircon::parse_format(format);
  } catch (const pircon::Error& e) {
    const nlohmann::json err{{"error", {{"code", std::string(pircon::to_string(e.code()))}, {"message", e.what()}}}};
    std::cerr << err.dump() << "\n";
    return pircon::kExitError;
  }
  return pircon::run(config, std::cout);
}
