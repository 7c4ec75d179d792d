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

#ifndef SENSEDEFS_REFINE_HPP
#define SENSEDEFS_REFINE_HPP

#include <cstddef>
#include <filesystem>
#include <optional>
#include <unordered_map>
#include <vector>

#include "sensedefs/disambiguate.hpp"
#include "sensedefs/inventory.hpp"
#include "sensedefs/types.hpp"

namespace sensedefs {

// Sense vectors keyed by synset, unit-normalized at load so cosine
// similarity reduces to a dot product (cosine is scale-invariant, so
// normalizing changes nothing downstream). All vectors in a store share
// one dimensionality; zero vectors are rejected.
class VectorStore {
 public:
  static VectorStore load(const std::filesystem::path& path);
  static VectorStore empty() { return VectorStore(); }

  const std::vector<double>* find(const SynsetId& id) const;
  std::size_t dimension() const { return dimension_; }
  std::size_t size() const { return vectors_.size(); }

 private:
  std::unordered_map<SynsetId, std::vector<double>> vectors_;
  std::size_t dimension_ = 0;
};

// Indices into one document's instance list, split by confidence. An
// instance is low confidence when it fails either threshold: a babelfy
// score under bf_threshold or a coherence score under coh_threshold.
struct ConfidencePartition {
  std::vector<std::size_t> confident;
  std::vector<std::size_t> low;
};

ConfidencePartition low_confidence_set(
    const std::vector<DisambiguatedInstance>& instances,
    double bf_threshold = 0.7, double coh_threshold = 0.125);

// Arithmetic mean of the available vectors for the given senses, one
// contribution per instance (duplicate senses count multiply). Senses
// without a vector are skipped; nullopt when no vector is available or
// the mean degenerates to the zero vector.
std::optional<std::vector<double>> centroid(const std::vector<SynsetId>& senses,
                                            const VectorStore& vectors);

// Cosine similarity between the centroid and the candidate's vector;
// nullopt when the candidate has no vector.
std::optional<double> nasari_score(const SynsetId& candidate,
                                   const std::vector<double>& mu,
                                   const VectorStore& vectors);

enum class RefinementDecision { KeptBabelfy, RetaggedNasari, Discarded };

struct RefinementOutcome {
  DisambiguatedInstance instance;
  RefinementDecision decision = RefinementDecision::Discarded;
  std::optional<double> nasari_score;
};

// Re-scores one low-confidence instance against the document centroid.
// Only nouns are eligible; every inventory candidate of the surface
// form is scored and the argmax (ties to the smaller id) survives when
// it reaches nasari_threshold, with the instance re-tagged accordingly.
RefinementOutcome refine_instance(const DisambiguatedInstance& low,
                                  const SenseInventory& inventory,
                                  const VectorStore& vectors,
                                  const std::vector<double>& mu,
                                  double nasari_threshold = 0.75);

struct RefinedDocument {
  std::vector<DisambiguatedInstance> complete;
  std::vector<DisambiguatedInstance> high_precision;
};

// Runs the whole refinement stage for one document: the complete list
// is the stage-1 output untouched; the high-precision list keeps the
// confident instances byte-identical and adds re-tagged low-confidence
// nouns. With no centroid available every low-confidence instance is
// dropped.
RefinedDocument refine_document(std::vector<DisambiguatedInstance> instances,
                                const SenseInventory& inventory,
                                const VectorStore& vectors,
                                double bf_threshold = 0.7,
                                double coh_threshold = 0.125,
                                double nasari_threshold = 0.75);

}  // namespace sensedefs

#endif  // SENSEDEFS_REFINE_HPP
