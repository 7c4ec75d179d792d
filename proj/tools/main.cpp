// Copyright 2026 The sensedefs authors.
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

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "sensedefs/corpus_io.hpp"
#include "sensedefs/error.hpp"
#include "sensedefs/evalstats.hpp"
#include "sensedefs/pipeline.hpp"
#include "sensedefs/refine.hpp"

namespace {

// Everything a subcommand might need. Values stay unset until a flag or
// a config file provides them; defaults are applied last, so the
// precedence is flags, then config file, then builtin defaults.
struct Options {
  std::optional<std::string> inventory;
  std::optional<std::string> vectors;
  std::optional<std::string> out;
  std::optional<std::string> stopwords;
  std::optional<std::string> gold;
  std::optional<std::string> pairs;
  std::optional<double> bf_threshold;
  std::optional<double> coh_threshold;
  std::optional<double> nasari_threshold;
  std::optional<std::size_t> radius;
  std::optional<std::size_t> workers;
  std::string config_path;
};

std::string trim(const std::string& text) {
  const std::size_t begin = text.find_first_not_of(" \t");
  if (begin == std::string::npos) {
    return "";
  }
  const std::size_t end = text.find_last_not_of(" \t");
  return text.substr(begin, end - begin + 1);
}

std::map<std::string, std::string> read_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw sensedefs::ParseError("cannot open config file '" + path + "'");
  }
  std::map<std::string, std::string> values;
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') {
      line.pop_back();
    }
    const std::string stripped = trim(line);
    if (stripped.empty() || stripped[0] == '#') {
      continue;
    }
    const std::size_t eq = stripped.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw sensedefs::ParseError(path + ":" + std::to_string(line_number) +
                                  ": expected key=value");
    }
    values[trim(stripped.substr(0, eq))] = trim(stripped.substr(eq + 1));
  }
  return values;
}

double parse_real(const std::string& value, const std::string& key) {
  char* end = nullptr;
  const double parsed = std::strtod(value.c_str(), &end);
  if (value.empty() || end != value.c_str() + value.size()) {
    throw sensedefs::ParseError("config key '" + key +
                                "' is not a number: '" + value + "'");
  }
  return parsed;
}

std::size_t parse_count(const std::string& value, const std::string& key) {
  if (value.empty() ||
      value.find_first_not_of("0123456789") != std::string::npos) {
    throw sensedefs::ParseError("config key '" + key +
                                "' is not a non-negative integer: '" + value +
                                "'");
  }
  return static_cast<std::size_t>(std::stoull(value));
}

// Fills unset options from the config file; unknown keys are an error
// so typos do not silently fall back to defaults.
void merge_config(Options& options) {
  if (options.config_path.empty()) {
    return;
  }
  for (const auto& [key, value] : read_config_file(options.config_path)) {
    if (key == "inventory") {
      if (!options.inventory) options.inventory = value;
    } else if (key == "vectors") {
      if (!options.vectors) options.vectors = value;
    } else if (key == "out") {
      if (!options.out) options.out = value;
    } else if (key == "stopwords") {
      if (!options.stopwords) options.stopwords = value;
    } else if (key == "gold") {
      if (!options.gold) options.gold = value;
    } else if (key == "pairs") {
      if (!options.pairs) options.pairs = value;
    } else if (key == "bf-threshold") {
      if (!options.bf_threshold) options.bf_threshold = parse_real(value, key);
    } else if (key == "coh-threshold") {
      if (!options.coh_threshold) {
        options.coh_threshold = parse_real(value, key);
      }
    } else if (key == "nasari-threshold") {
      if (!options.nasari_threshold) {
        options.nasari_threshold = parse_real(value, key);
      }
    } else if (key == "radius") {
      if (!options.radius) options.radius = parse_count(value, key);
    } else if (key == "workers") {
      if (!options.workers) options.workers = parse_count(value, key);
    } else {
      throw sensedefs::ParseError("unknown config key '" + key + "' in " +
                                  options.config_path);
    }
  }
}

std::string require(const std::optional<std::string>& value,
                    const char* flag) {
  if (!value.has_value() || value->empty()) {
    throw sensedefs::Error(std::string("missing required option ") + flag);
  }
  return *value;
}

int cmd_run(Options& options) {
  merge_config(options);
  sensedefs::PipelineConfig config;
  config.inventory_dir = require(options.inventory, "--inventory");
  config.vectors_path = require(options.vectors, "--vectors");
  config.out_dir = require(options.out, "--out");
  if (options.stopwords.has_value()) {
    config.stopwords_dir = *options.stopwords;
  }
  config.bf_threshold = options.bf_threshold.value_or(config.bf_threshold);
  config.coh_threshold = options.coh_threshold.value_or(config.coh_threshold);
  config.nasari_threshold =
      options.nasari_threshold.value_or(config.nasari_threshold);
  config.radius = options.radius.value_or(config.radius);
  config.workers = options.workers.value_or(config.workers);

  const sensedefs::PipelineResult result = sensedefs::run_pipeline(config);
  std::cout << "definienda: " << result.documents << "\n"
            << "glosses: " << result.stats.gloss_total << "\n"
            << "annotations (complete): " << result.stats.total_before << "\n"
            << "annotations (high precision): " << result.stats.total_after
            << "\n"
            << "wrote " << (config.out_dir / "complete").string() << ", "
            << (config.out_dir / "high_precision").string() << ", "
            << (config.out_dir / "stats.tsv").string() << "\n";
  return 0;
}

int cmd_eval(Options& options) {
  merge_config(options);
  const std::filesystem::path out = require(options.out, "--out");
  if (options.gold.has_value() == options.pairs.has_value()) {
    throw sensedefs::Error("eval needs exactly one of --gold or --pairs");
  }
  if (options.gold.has_value()) {
    const sensedefs::SenseInventory inventory =
        sensedefs::SenseInventory::load(require(options.inventory,
                                                "--inventory"));
    const auto gold = sensedefs::load_gold(*options.gold, inventory);
    const auto complete = sensedefs::read_corpus_xml(out / "complete");
    const auto high_precision =
        sensedefs::read_corpus_xml(out / "high_precision");
    std::cout << sensedefs::render_intrinsic_text(
        sensedefs::intrinsic_eval(complete, gold),
        sensedefs::intrinsic_eval(high_precision, gold));
    return 0;
  }
  const sensedefs::VectorStore vectors =
      sensedefs::VectorStore::load(require(options.vectors, "--vectors"));
  const auto pairs = sensedefs::load_cluster_pairs(*options.pairs);
  std::cout << sensedefs::render_clustering_text(
      sensedefs::sense_clustering_eval(pairs, vectors));
  return 0;
}

int cmd_stats(Options& options) {
  merge_config(options);
  const std::filesystem::path out = require(options.out, "--out");
  const sensedefs::SenseInventory inventory =
      sensedefs::SenseInventory::load(require(options.inventory,
                                              "--inventory"));
  const auto complete = sensedefs::read_corpus_xml(out / "complete");
  const auto high_precision =
      sensedefs::read_corpus_xml(out / "high_precision");
  std::cout << sensedefs::render_stats_text(
      sensedefs::compute_stats(complete, high_precision, inventory));
  return 0;
}

void add_common_flags(CLI::App* cmd, Options& options) {
  cmd->add_option("--inventory", options.inventory,
                  "Directory with synsets.tsv, glosses.tsv, rankings.tsv, "
                  "edges.tsv and stopwords.<lang>.txt");
  cmd->add_option("--vectors", options.vectors, "Sense vector TSV file");
  cmd->add_option("--out", options.out, "Release root directory");
  cmd->add_option("--config", options.config_path,
                  "key=value file; explicit flags take precedence");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Joint disambiguation of multilingual definition corpora"};
  app.require_subcommand(1);

  Options run_options;
  CLI::App* run = app.add_subcommand(
      "run", "Disambiguate a gloss corpus and write both release tiers");
  add_common_flags(run, run_options);
  run->add_option("--stopwords", run_options.stopwords,
                  "Stopword directory (defaults to the inventory directory)");
  run->add_option("--bf-threshold", run_options.bf_threshold,
                  "Babelfy score threshold (default 0.7)");
  run->add_option("--coh-threshold", run_options.coh_threshold,
                  "Coherence score threshold (default 0.125)");
  run->add_option("--nasari-threshold", run_options.nasari_threshold,
                  "Refinement similarity threshold (default 0.75)");
  run->add_option("--radius", run_options.radius,
                  "Semantic signature radius (default 2)");
  run->add_option("--workers", run_options.workers,
                  "Worker threads (default 1; output is identical for any "
                  "count)");

  Options eval_options;
  CLI::App* eval = app.add_subcommand(
      "eval", "Score a previous run against gold spans or cluster pairs");
  add_common_flags(eval, eval_options);
  eval->add_option("--gold", eval_options.gold,
                   "Gold TSV: glossId, start, end, synsetId");
  eval->add_option("--pairs", eval_options.pairs,
                   "Cluster pair TSV: idA, idB, merge|split");

  Options stats_options;
  CLI::App* stats = app.add_subcommand(
      "stats", "Render the statistics report for a previous run");
  add_common_flags(stats, stats_options);

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed()) {
      return cmd_run(run_options);
    }
    if (eval->parsed()) {
      return cmd_eval(eval_options);
    }
    return cmd_stats(stats_options);
  } catch (const std::exception& error) {
    std::cerr << "sensedefs: " << error.what() << "\n";
    return 1;
  }
}
