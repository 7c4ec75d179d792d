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

#ifndef SENSEDEFS_PIPELINE_HPP
#define SENSEDEFS_PIPELINE_HPP

#include <cstddef>
#include <filesystem>

#include "sensedefs/corpus_io.hpp"
#include "sensedefs/evalstats.hpp"

namespace sensedefs {

// Everything one run needs. Thresholds default to the values the whole
// scoring scheme was tuned around; stopwords_dir falls back to
// inventory_dir when left empty.
struct PipelineConfig {
  std::filesystem::path inventory_dir;
  std::filesystem::path vectors_path;
  std::filesystem::path stopwords_dir;
  std::filesystem::path out_dir;
  double bf_threshold = 0.7;
  double coh_threshold = 0.125;
  double nasari_threshold = 0.75;
  std::size_t radius = 2;
  std::size_t workers = 1;
};

// Thresholds must lie in [0,1]; radius and workers must be positive.
void validate(const PipelineConfig& config);

struct PipelineResult {
  CorpusRelease complete;
  CorpusRelease high_precision;
  StatsReport stats;
  std::size_t documents = 0;
};

// Runs the full pipeline: load inventory, vectors and stopwords; pool
// glosses per definiendum; disambiguate, score and refine each pooled
// document; write both release tiers and stats.tsv under out_dir.
// Documents are processed by a worker pool but merged in definiendum
// order, so output bytes do not depend on the worker count.
PipelineResult run_pipeline(const PipelineConfig& config);

}  // namespace sensedefs

#endif  // SENSEDEFS_PIPELINE_HPP
