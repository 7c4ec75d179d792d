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

#ifndef SENSEDEFS_EVALSTATS_HPP
#define SENSEDEFS_EVALSTATS_HPP

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sensedefs/corpus_io.hpp"
#include "sensedefs/inventory.hpp"
#include "sensedefs/refine.hpp"
#include "sensedefs/types.hpp"

namespace sensedefs {

struct SourceCounts {
  std::size_t babelfy = 0;
  std::size_t mcs = 0;
  std::size_t nasari = 0;

  std::size_t total() const { return babelfy + mcs + nasari; }
  void add(AnnotationSource source);
};

// Corpus statistics over one run: gloss counts by resource and
// language, annotation counts by language and by part of speech for
// both release tiers, and the derived coverage ratios. Ratios are
// absent when their denominator is zero.
struct StatsReport {
  std::map<Resource, std::map<LangCode, std::size_t>> gloss_counts;
  std::size_t gloss_total = 0;

  std::map<LangCode, SourceCounts> language_before;
  std::map<LangCode, SourceCounts> language_after;
  std::map<Pos, SourceCounts> pos_before;
  std::map<Pos, SourceCounts> pos_after;
  std::size_t total_before = 0;
  std::size_t total_after = 0;

  double annotations_per_gloss = 0.0;
  std::optional<double> coverage;
  std::map<Pos, std::optional<double>> pos_coverage;
};

// Aggregates both release tiers. The releases must describe the same
// gloss set (ids and texts); the inventory supplies the part of speech
// of each annotated sense. Violations are integrity errors, as is a
// high-precision tier with more annotations than the complete one.
StatsReport compute_stats(const CorpusRelease& complete,
                          const CorpusRelease& high_precision,
                          const SenseInventory& inventory);

std::string render_stats_tsv(const StatsReport& report);
std::string render_stats_text(const StatsReport& report);

// One manually validated span: the annotation at [char_begin, char_end)
// of gloss_id should denote `sense`.
struct GoldAnnotation {
  std::string gloss_id;
  std::size_t char_begin = 0;
  std::size_t char_end = 0;
  SynsetId sense;
};

// TSV columns: glossId, startOffset, endOffset, goldSynsetId. Gold
// senses must exist in the inventory.
std::vector<GoldAnnotation> load_gold(const std::filesystem::path& path,
                                      const SenseInventory& inventory);

struct IntrinsicResult {
  std::size_t judged = 0;
  std::size_t correct = 0;
  std::size_t matched_gold = 0;
  std::size_t gold_total = 0;
  double precision = 0.0;
  double coverage = 0.0;
};

// Span-overlap evaluation of a release against gold annotations. A
// prediction is judged when it overlaps at least one gold span of the
// same gloss and correct when an overlapped gold span agrees on the
// sense. Precision is correct/judged; coverage is the fraction of gold
// spans overlapped by at least one prediction, which keeps it within
// [0,1] even when overlapping mentions hit the same gold span.
IntrinsicResult intrinsic_eval(const CorpusRelease& release,
                               const std::vector<GoldAnnotation>& gold);

std::string render_intrinsic_text(const IntrinsicResult& complete,
                                  const IntrinsicResult& high_precision);

// Square-rooted Weighted Overlap between two vectors read as ranked
// feature lists (rank 1 = largest weight, ties to the lower index).
// Zero when the nonzero supports are disjoint. Rank-based, so invariant
// under positive monotone rescaling.
double weighted_overlap(const std::vector<double>& a,
                        const std::vector<double>& b);

struct ClusterPair {
  SynsetId a;
  SynsetId b;
  bool gold_merge = false;
};

// TSV columns: idA, idB, merge|split.
std::vector<ClusterPair> load_cluster_pairs(const std::filesystem::path& path);

struct ClusteringResult {
  std::size_t true_positive = 0;
  std::size_t false_positive = 0;
  std::size_t true_negative = 0;
  std::size_t false_negative = 0;
  std::size_t judgeable = 0;
  std::size_t unjudgeable = 0;
  double accuracy = 0.0;
  double f1 = 0.0;
};

// Predicts merge when weighted_overlap exceeds 0.5 (the midpoint).
// Pairs missing a vector are unjudgeable and scored as predicted-split.
// F1 treats merge as the positive class and is 0 when no positives
// exist on either side.
ClusteringResult sense_clustering_eval(const std::vector<ClusterPair>& pairs,
                                       const VectorStore& vectors);

std::string render_clustering_text(const ClusteringResult& result);

}  // namespace sensedefs

#endif  // SENSEDEFS_EVALSTATS_HPP
