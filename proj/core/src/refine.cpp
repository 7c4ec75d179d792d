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

#include "sensedefs/refine.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "sensedefs/error.hpp"

namespace sensedefs {

VectorStore VectorStore::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw ParseError("cannot open '" + path.string() + "'");
  }
  VectorStore store;
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') {
      line.pop_back();
    }
    if (line.empty() || line[0] == '#') {
      continue;
    }
    std::istringstream fields(line);
    std::string id;
    fields >> id;
    std::vector<double> values;
    double value = 0.0;
    while (fields >> value) {
      values.push_back(value);
    }
    if (!fields.eof() || id.empty() || values.empty()) {
      throw ParseError(path.string() + ":" + std::to_string(line_number) +
                       ": malformed vector record");
    }
    if (store.dimension_ == 0) {
      store.dimension_ = values.size();
    } else if (values.size() != store.dimension_) {
      throw IntegrityError("vector for '" + id + "' has dimension " +
                           std::to_string(values.size()) + ", expected " +
                           std::to_string(store.dimension_));
    }
    double norm_sq = 0.0;
    for (double v : values) {
      if (!std::isfinite(v)) {
        throw ParseError(path.string() + ":" + std::to_string(line_number) +
                         ": non-finite vector component");
      }
      norm_sq += v * v;
    }
    if (norm_sq == 0.0) {
      throw IntegrityError("zero vector for synset '" + id + "'");
    }
    const double norm = std::sqrt(norm_sq);
    for (double& v : values) {
      v /= norm;
    }
    if (!store.vectors_.emplace(std::move(id), std::move(values)).second) {
      throw IntegrityError("duplicate vector at " + path.string() + ":" +
                           std::to_string(line_number));
    }
  }
  return store;
}

const std::vector<double>* VectorStore::find(const SynsetId& id) const {
  auto it = vectors_.find(id);
  return it == vectors_.end() ? nullptr : &it->second;
}

ConfidencePartition low_confidence_set(
    const std::vector<DisambiguatedInstance>& instances, double bf_threshold,
    double coh_threshold) {
  ConfidencePartition partition;
  for (std::size_t i = 0; i < instances.size(); ++i) {
    const bool low = instances[i].babelfy_score < bf_threshold ||
                     instances[i].coherence_score < coh_threshold;
    (low ? partition.low : partition.confident).push_back(i);
  }
  return partition;
}

std::optional<std::vector<double>> centroid(const std::vector<SynsetId>& senses,
                                            const VectorStore& vectors) {
  std::vector<double> sum(vectors.dimension(), 0.0);
  std::size_t contributors = 0;
  for (const SynsetId& sense : senses) {
    const std::vector<double>* vec = vectors.find(sense);
    if (vec == nullptr) {
      continue;
    }
    for (std::size_t d = 0; d < vec->size(); ++d) {
      sum[d] += (*vec)[d];
    }
    ++contributors;
  }
  if (contributors == 0) {
    return std::nullopt;
  }
  double norm_sq = 0.0;
  for (double& v : sum) {
    v /= static_cast<double>(contributors);
    norm_sq += v * v;
  }
  if (norm_sq == 0.0) {
    // Opposing unit vectors can cancel exactly; an all-zero mean carries
    // no direction to compare against.
    return std::nullopt;
  }
  return sum;
}

std::optional<double> nasari_score(const SynsetId& candidate,
                                   const std::vector<double>& mu,
                                   const VectorStore& vectors) {
  const std::vector<double>* vec = vectors.find(candidate);
  if (vec == nullptr) {
    return std::nullopt;
  }
  double dot = 0.0;
  double mu_norm_sq = 0.0;
  for (std::size_t d = 0; d < mu.size(); ++d) {
    dot += mu[d] * (*vec)[d];
    mu_norm_sq += mu[d] * mu[d];
  }
  // Stored vectors are unit length, so only the centroid needs scaling.
  return dot / std::sqrt(mu_norm_sq);
}

RefinementOutcome refine_instance(const DisambiguatedInstance& low,
                                  const SenseInventory& inventory,
                                  const VectorStore& vectors,
                                  const std::vector<double>& mu,
                                  double nasari_threshold) {
  RefinementOutcome outcome;
  outcome.instance = low;
  outcome.decision = RefinementDecision::Discarded;
  if (low.pos != Pos::Noun) {
    return outcome;
  }

  const std::vector<SynsetId>& candidates =
      inventory.candidate_senses(low.lemma, low.language, low.pos);
  const SynsetId* best = nullptr;
  double best_score = 0.0;
  for (const SynsetId& candidate : candidates) {
    const std::optional<double> score = nasari_score(candidate, mu, vectors);
    if (!score.has_value()) {
      continue;
    }
    if (best == nullptr || *score > best_score ||
        (*score == best_score && candidate < *best)) {
      best = &candidate;
      best_score = *score;
    }
  }
  if (best == nullptr) {
    return outcome;
  }
  outcome.nasari_score = best_score;
  if (best_score >= nasari_threshold) {
    outcome.decision = RefinementDecision::RetaggedNasari;
    outcome.instance.sense = *best;
    outcome.instance.source = AnnotationSource::Nasari;
    outcome.instance.nasari_score = best_score;
  }
  return outcome;
}

RefinedDocument refine_document(std::vector<DisambiguatedInstance> instances,
                                const SenseInventory& inventory,
                                const VectorStore& vectors,
                                double bf_threshold, double coh_threshold,
                                double nasari_threshold) {
  RefinedDocument result;
  const ConfidencePartition partition =
      low_confidence_set(instances, bf_threshold, coh_threshold);

  std::vector<SynsetId> confident_senses;
  confident_senses.reserve(partition.confident.size());
  std::vector<char> is_low(instances.size(), 0);
  for (std::size_t index : partition.low) {
    is_low[index] = 1;
  }
  for (std::size_t index : partition.confident) {
    confident_senses.push_back(instances[index].sense);
  }
  const std::optional<std::vector<double>> mu =
      centroid(confident_senses, vectors);

  for (std::size_t i = 0; i < instances.size(); ++i) {
    if (!is_low[i]) {
      result.high_precision.push_back(instances[i]);
      continue;
    }
    if (!mu.has_value()) {
      continue;  // nothing to compare against; drop the whole of L
    }
    RefinementOutcome outcome = refine_instance(
        instances[i], inventory, vectors, *mu, nasari_threshold);
    if (outcome.decision == RefinementDecision::RetaggedNasari) {
      result.high_precision.push_back(std::move(outcome.instance));
    }
  }
  result.complete = std::move(instances);
  return result;
}

}  // namespace sensedefs
