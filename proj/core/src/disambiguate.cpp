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

#include "sensedefs/disambiguate.hpp"

#include <algorithm>
#include <limits>

#include "sensedefs/error.hpp"
#include "sensedefs/unicode.hpp"

namespace sensedefs {

Signature semantic_signature(const SynsetId& seed,
                             const SemanticNetwork& network,
                             std::size_t radius) {
  if (!network.contains(seed)) {
    throw IntegrityError("unknown synset '" + seed + "' in signature request");
  }
  // Bellman-Ford over walk length: frontier[v] holds the best product
  // over walks of exactly `step` edges, best[] the max across lengths.
  std::unordered_map<SynsetId, double> best;
  std::unordered_map<SynsetId, double> frontier;
  best.emplace(seed, 1.0);
  frontier.emplace(seed, 1.0);
  for (std::size_t step = 0; step < radius && !frontier.empty(); ++step) {
    std::unordered_map<SynsetId, double> next;
    for (const auto& [synset, weight] : frontier) {
      for (const auto& [neighbor, edge_weight] : network.neighbors(synset)) {
        const double walk = weight * edge_weight;
        auto [slot, inserted] = next.emplace(neighbor, walk);
        if (!inserted && walk > slot->second) {
          slot->second = walk;
        }
      }
    }
    for (const auto& [synset, weight] : next) {
      auto [slot, inserted] = best.emplace(synset, weight);
      if (!inserted && weight > slot->second) {
        slot->second = weight;
      }
    }
    frontier = std::move(next);
  }
  best[seed] = 1.0;

  Signature signature(best.begin(), best.end());
  std::sort(signature.begin(), signature.end());
  return signature;
}

double signature_overlap(const Signature& a, const Signature& b) {
  double mass = 0.0;
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() && j < b.size()) {
    const int cmp = a[i].first.compare(b[j].first);
    if (cmp < 0) {
      ++i;
    } else if (cmp > 0) {
      ++j;
    } else {
      mass += std::min(a[i].second, b[j].second);
      ++i;
      ++j;
    }
  }
  return mass;
}

const Signature& SignatureCache::get(const SynsetId& seed) {
  auto it = cache_.find(seed);
  if (it == cache_.end()) {
    it = cache_.emplace(seed, semantic_signature(seed, network_, radius_))
             .first;
  }
  return it->second;
}

double SignatureCache::overlap(const SynsetId& a, const SynsetId& b) {
  // Self-overlap is always positive (the seed weighs 1.0), so identical
  // chosen senses of two mentions count as connected.
  const Signature& sig_a = get(a);
  return signature_overlap(sig_a, get(b));
}

DisambiguationGraph build_disambiguation_graph(const EnrichedDocument& doc,
                                               SignatureCache& signatures) {
  DisambiguationGraph graph;
  for (std::size_t m = 0; m < doc.mentions.size(); ++m) {
    const std::size_t first = graph.vertices.size();
    for (const SynsetId& candidate : doc.mentions[m].candidates) {
      graph.vertices.push_back({m, candidate});
    }
    graph.mention_span.emplace_back(first, graph.vertices.size());
  }
  graph.adjacency.resize(graph.vertices.size());
  for (std::size_t u = 0; u < graph.vertices.size(); ++u) {
    for (std::size_t v = u + 1; v < graph.vertices.size(); ++v) {
      if (graph.vertices[u].mention == graph.vertices[v].mention) {
        continue;
      }
      const double weight = signatures.overlap(graph.vertices[u].candidate,
                                               graph.vertices[v].candidate);
      if (weight > 0.0) {
        graph.adjacency[u].emplace_back(v, weight);
        graph.adjacency[v].emplace_back(u, weight);
      }
    }
  }
  return graph;
}

std::vector<std::size_t> densest_assignment(const DisambiguationGraph& graph) {
  const std::size_t vertex_count = graph.vertices.size();
  std::vector<char> alive(vertex_count, 1);
  std::vector<double> degree(vertex_count, 0.0);
  for (std::size_t v = 0; v < vertex_count; ++v) {
    for (const auto& [neighbor, weight] : graph.adjacency[v]) {
      degree[v] += weight;
    }
  }
  std::vector<std::size_t> live_candidates(graph.mention_count());
  for (std::size_t m = 0; m < graph.mention_count(); ++m) {
    live_candidates[m] = graph.mention_span[m].second -
                         graph.mention_span[m].first;
  }

  for (;;) {
    std::size_t victim = vertex_count;
    for (std::size_t v = 0; v < vertex_count; ++v) {
      if (!alive[v] || live_candidates[graph.vertices[v].mention] < 2) {
        continue;
      }
      if (victim == vertex_count) {
        victim = v;
        continue;
      }
      const auto& cur = graph.vertices[v];
      const auto& best = graph.vertices[victim];
      if (degree[v] < degree[victim] ||
          (degree[v] == degree[victim] &&
           (cur.candidate < best.candidate ||
            (cur.candidate == best.candidate && cur.mention < best.mention)))) {
        victim = v;
      }
    }
    if (victim == vertex_count) {
      break;
    }
    alive[victim] = 0;
    --live_candidates[graph.vertices[victim].mention];
    for (const auto& [neighbor, weight] : graph.adjacency[victim]) {
      if (alive[neighbor]) {
        degree[neighbor] -= weight;
      }
    }
  }

  std::vector<std::size_t> chosen(graph.mention_count(), vertex_count);
  for (std::size_t v = 0; v < vertex_count; ++v) {
    if (alive[v]) {
      chosen[graph.vertices[v].mention] = v;
    }
  }
  return chosen;
}

double assignment_support(const DisambiguationGraph& graph,
                          const std::vector<std::size_t>& chosen) {
  double support = 0.0;
  for (std::size_t m = 0; m < chosen.size(); ++m) {
    for (const auto& [neighbor, weight] : graph.adjacency[chosen[m]]) {
      const std::size_t other = graph.vertices[neighbor].mention;
      if (other > m && chosen[other] == neighbor) {
        support += weight;
      }
    }
  }
  return support;
}

std::vector<DisambiguatedInstance> joint_disambiguate(
    const EnrichedDocument& doc, const SenseInventory& inventory,
    SignatureCache& signatures, double bf_threshold) {
  std::vector<DisambiguatedInstance> instances;
  if (doc.mentions.empty()) {
    return instances;
  }

  const DisambiguationGraph graph = build_disambiguation_graph(doc,
                                                               signatures);
  std::vector<double> original_degree(graph.vertices.size(), 0.0);
  for (std::size_t v = 0; v < graph.vertices.size(); ++v) {
    for (const auto& [neighbor, weight] : graph.adjacency[v]) {
      original_degree[v] += weight;
    }
  }
  const std::vector<std::size_t> chosen = densest_assignment(graph);

  instances.reserve(doc.mentions.size());
  for (std::size_t m = 0; m < doc.mentions.size(); ++m) {
    const Mention& mention = doc.mentions[m];
    const auto [first, last] = graph.mention_span[m];

    DisambiguatedInstance instance;
    instance.mention_index = m;
    instance.segment = mention.segment;
    instance.gloss_id = doc.segments[mention.segment].gloss_id;
    instance.char_begin = mention.char_begin;
    instance.char_end = mention.char_end;
    instance.anchor = uni::substr(doc.segments[mention.segment].text,
                                  mention.char_begin, mention.char_end);
    instance.lemma = mention.lemma;
    instance.language = mention.language;
    instance.pos = mention.pos;
    instance.sense = graph.vertices[chosen[m]].candidate;

    if (last - first == 1) {
      instance.babelfy_score = 1.0;
    } else {
      double total = 0.0;
      for (std::size_t v = first; v < last; ++v) {
        total += original_degree[v];
      }
      instance.babelfy_score =
          total > 0.0 ? original_degree[chosen[m]] / total : 0.0;
    }

    if (instance.babelfy_score < bf_threshold) {
      std::optional<SynsetId> mcs = inventory.most_common_sense(
          mention.lemma, mention.language, mention.pos);
      if (!mcs.has_value()) {
        throw IntegrityError("no ranked sense for mention '" + mention.lemma +
                             "'");
      }
      instance.sense = std::move(*mcs);
      instance.source = AnnotationSource::Mcs;
    } else {
      instance.source = AnnotationSource::Babelfy;
    }
    instances.push_back(std::move(instance));
  }
  return instances;
}

std::vector<DisambiguatedInstance> joint_disambiguate(
    const EnrichedDocument& doc, const SenseInventory& inventory,
    const SemanticNetwork& network, std::size_t radius, double bf_threshold) {
  SignatureCache signatures(network, radius);
  return joint_disambiguate(doc, inventory, signatures, bf_threshold);
}

void coherence_scores(std::vector<DisambiguatedInstance>& instances,
                      SignatureCache& signatures) {
  const std::size_t count = instances.size();
  if (count == 0) {
    return;
  }
  if (count == 1) {
    instances[0].coherence_score = 0.0;
    return;
  }
  for (std::size_t i = 0; i < count; ++i) {
    std::size_t connected = 0;
    for (std::size_t j = 0; j < count; ++j) {
      if (i != j &&
          signatures.overlap(instances[i].sense, instances[j].sense) > 0.0) {
        ++connected;
      }
    }
    instances[i].coherence_score =
        static_cast<double>(connected) / static_cast<double>(count - 1);
  }
}

}  // namespace sensedefs
