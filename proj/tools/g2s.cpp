// Copyright 2026 The g2s Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <CLI11.hpp>

#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) {
  using g2s::cli::Command;
  using g2s::cli::RunConfig;

  CLI::App app{"Encode graphs into multipartite quantum states"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::string subset;
  std::string conditions;

  auto add_tolerance = [&](CLI::App* sub) {
    sub->add_option("--tolerance", cfg.tolerance, "Residual tolerance")
        ->check(CLI::PositiveNumber);
  };

  auto* encode = app.add_subcommand("encode", "Write the state dump of a graph");
  encode->add_option("--graph", cfg.graph_path, "Graph file")->required();
  encode->add_option("--spec", cfg.spec_path, "Operator spec JSON")->required();
  encode->add_flag("--normalize", cfg.normalize, "Normalize the state");
  encode->add_option("--out", cfg.out_path, "Write the dump here");
  add_tolerance(encode);

  auto* check = app.add_subcommand("check-operator", "Check consistency conditions");
  check->add_option("--spec", cfg.spec_path, "Operator spec JSON")->required();
  check->add_option("--conditions", conditions, "e.g. C2,C3 or D2,D3A,D3B,D3C");
  add_tolerance(check);

  auto* verify = app.add_subcommand("verify-axioms", "Random A1/A2/A3 instances");
  verify->add_option("--spec", cfg.spec_path, "Operator spec JSON")->required();
  verify->add_option("--trials", cfg.trials, "Instances per axiom")
      ->check(CLI::PositiveNumber);
  verify->add_option("--seed", cfg.seed, "64-bit seed");
  add_tolerance(verify);

  auto* entropy = app.add_subcommand("entropy", "Area-law report for a bipartition");
  entropy->add_option("--graph", cfg.graph_path, "Graph file")->required();
  entropy->add_option("--spec", cfg.spec_path, "Operator spec JSON")->required();
  entropy->add_option("--subset", subset, "Vertices, e.g. \"0,1\"")->required();
  add_tolerance(entropy);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return g2s::cli::kExitUsage;
  }

  if (*encode) cfg.command = Command::encode;
  if (*check) cfg.command = Command::check_operator;
  if (*verify) cfg.command = Command::verify_axioms;
  if (*entropy) cfg.command = Command::entropy;
  try {
    if (!conditions.empty()) cfg.conditions = g2s::cli::split_list(conditions);
    if (!subset.empty()) cfg.subset = g2s::cli::parse_subset(subset);
  } catch (const g2s::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return g2s::cli::kExitUsage;
  }
  return g2s::cli::run(cfg, std::cout, std::cerr);
}
