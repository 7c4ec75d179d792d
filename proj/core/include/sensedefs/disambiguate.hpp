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

#ifndef SENSEDEFS_DISAMBIGUATE_HPP
#define SENSEDEFS_DISAMBIGUATE_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "sensedefs/enrich.hpp"
#include "sensedefs/inventory.hpp"
#include "sensedefs/types.hpp"

namespace sensedefs {

// A semantic signature: every synset within `radius` hops of a seed,
// weighted by the best product of edge weights along a connecting walk
// (the seed itself is pinned at 1.0). Sorted by synset id.
using Signature = std::vector<std::pair<SynsetId, double>>;

Signature semantic_signature(const SynsetId& seed,
                             const SemanticNetwork& network,
                             std::size_t radius = 2);

// Overlap mass between two signatures: sum of min weights over shared
// synsets. Zero iff the signatures are disjoint.
double signature_overlap(const Signature& a, const Signature& b);

// Memoizes signatures against one (network, radius) pair. Not thread
// safe; give each worker its own cache.
class SignatureCache {
 public:
  SignatureCache(const SemanticNetwork& network, std::size_t radius)
      : network_(network), radius_(radius) {}

  const Signature& get(const SynsetId& seed);
  double overlap(const SynsetId& a, const SynsetId& b);
  std::size_t radius() const { return radius_; }

 private:
  const SemanticNetwork& network_;
  std::size_t radius_;
  std::unordered_map<SynsetId, Signature> cache_;
};

// Candidate graph for one document: one vertex per (mention, candidate)
// pair, edges only between candidates of different mentions whose
// signatures intersect, weighted by overlap mass.
struct DisambiguationGraph {
  struct Vertex {
    std::size_t mention;
    SynsetId candidate;
  };
  std::vector<Vertex> vertices;
  std::vector<std::vector<std::pair<std::size_t, double>>> adjacency;
  std::vector<std::pair<std::size_t, std::size_t>> mention_span;

  std::size_t mention_count() const { return mention_span.size(); }
};

DisambiguationGraph build_disambiguation_graph(const EnrichedDocument& doc,
                                               SignatureCache& signatures);

// Densest-subgraph peeling: repeatedly drop the lowest weighted-degree
// vertex among mentions that still have two or more live candidates,
// recomputing degrees as vertices disappear. Ties prefer the smaller
// candidate id, then the smaller mention index. Returns the surviving
// vertex index for each mention.
std::vector<std::size_t> densest_assignment(const DisambiguationGraph& graph);

// Total edge weight between chosen candidates of different mentions.
// The quantity the peeling heuristic approximates; exposed so tests can
// compare against exhaustive enumeration.
double assignment_support(const DisambiguationGraph& graph,
                          const std::vector<std::size_t>& chosen);

// One disambiguated mention. Carries enough provenance (gloss id and
// character span) to serialize without the originating document.
struct DisambiguatedInstance {
  std::size_t mention_index = 0;
  std::size_t segment = 0;
  std::string gloss_id;
  std::size_t char_begin = 0;
  std::size_t char_end = 0;
  std::string anchor;
  std::string lemma;
  LangCode language;
  Pos pos = Pos::Other;
  SynsetId sense;
  double babelfy_score = 0.0;
  double coherence_score = 0.0;
  AnnotationSource source = AnnotationSource::Babelfy;
  std::optional<double> nasari_score;
};

// Jointly disambiguates every mention of a pooled document. The sense
// with the strongest graph support wins; babelfy_score is the chosen
// candidate's share of the mention's total original-graph support (1.0
// for single-candidate mentions, 0.0 when nothing has support). Below
// `bf_threshold` the graph choice is replaced by the most common sense
// and the instance is marked MCS.
std::vector<DisambiguatedInstance> joint_disambiguate(
    const EnrichedDocument& doc, const SenseInventory& inventory,
    SignatureCache& signatures, double bf_threshold = 0.7);

std::vector<DisambiguatedInstance> joint_disambiguate(
    const EnrichedDocument& doc, const SenseInventory& inventory,
    const SemanticNetwork& network, std::size_t radius = 2,
    double bf_threshold = 0.7);

// Fills coherence scores: the fraction of the other instances whose
// chosen sense shares a signature connection with this one's. A
// singleton document scores 0.
void coherence_scores(std::vector<DisambiguatedInstance>& instances,
                      SignatureCache& signatures);

}  // namespace sensedefs

#endif  // SENSEDEFS_DISAMBIGUATE_HPP
