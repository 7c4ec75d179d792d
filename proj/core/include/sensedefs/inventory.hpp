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

#ifndef SENSEDEFS_INVENTORY_HPP
#define SENSEDEFS_INVENTORY_HPP

#include <cstddef>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "sensedefs/types.hpp"

namespace sensedefs {

// Weighted undirected relations over synsets. The loader inserts every
// inventory synset as a vertex (isolated vertices are meaningful: their
// semantic signature is just themselves) and closes edges symmetrically,
// so after finalize() the adjacency is symmetric for any input file.
class SemanticNetwork {
 public:
  void add_vertex(const SynsetId& id);
  // Records the edge in both directions. Self-loops and non-positive
  // weights are rejected; re-adding an edge with a conflicting weight is
  // an integrity error.
  void add_edge(const SynsetId& a, const SynsetId& b, double weight);
  // Sorts adjacency lists by neighbor id. Call once after construction;
  // the network is immutable afterwards and safe to share across threads.
  void finalize();

  bool contains(const SynsetId& id) const;
  std::span<const std::pair<SynsetId, double>> neighbors(
      const SynsetId& id) const;
  std::size_t vertex_count() const { return adjacency_.size(); }
  std::size_t edge_count() const { return edge_count_; }

 private:
  std::unordered_map<SynsetId, std::vector<std::pair<SynsetId, double>>>
      adjacency_;
  std::size_t edge_count_ = 0;
  bool finalized_ = false;
};

// Parses a glosses.tsv file (glossId, synsetId, resource, lang, text).
// Validates field shape and (resource, language, glossId) uniqueness but
// not definiendum resolution, which needs a loaded inventory.
std::vector<Gloss> parse_glosses_tsv(const std::filesystem::path& path);

// The sense inventory: synsets with their multilingual lexicalizations,
// the gloss corpus, ranked candidate lists per (lemma, language, POS)
// key, and the semantic network. Immutable after load; safe for shared
// read access from concurrent workers.
//
// File set under one directory (UTF-8, LF, tab-separated):
//   synsets.tsv   id <tab> pos <tab> lemma@lang|lemma@lang|...
//   glosses.tsv   glossId <tab> synsetId <tab> resource <tab> lang <tab> text
//   rankings.tsv  lemma <tab> lang <tab> pos <tab> id1,id2,...
//   edges.tsv     src <tab> dst <tab> weight
//
// Candidate ranking is data-driven: rankings.tsv rows are authoritative
// for their key (first id = most common sense); any lexicalization key
// with no explicit row gets an implicit ranking in synset file order.
class SenseInventory {
 public:
  static SenseInventory load(const std::filesystem::path& dir);

  const Synset* find_synset(const SynsetId& id) const;
  std::size_t synset_count() const { return synsets_.size(); }
  const std::vector<Gloss>& glosses() const { return glosses_; }
  const SemanticNetwork& network() const { return network_; }

  // MCS-ranked candidates for a lexical key. Lemma matching is exact
  // after NFC + lowercasing (and tokenizer-normalized for multiwords);
  // an unknown key yields an empty list.
  const std::vector<SynsetId>& candidate_senses(std::string_view lemma,
                                                std::string_view language,
                                                Pos pos) const;

  std::optional<SynsetId> most_common_sense(std::string_view lemma,
                                            std::string_view language,
                                            Pos pos) const;

  // Content POS classes under which (lemma, language) has candidates,
  // in canonical order. Drives the lexicon-based tagger.
  std::vector<Pos> key_pos_set(std::string_view lemma,
                               std::string_view language) const;

  // Longest key length in tokens; bounds the multiword match window.
  std::size_t max_key_tokens() const { return max_key_tokens_; }

 private:
  SenseInventory() = default;

  std::vector<Synset> synsets_;
  std::unordered_map<SynsetId, std::size_t> synset_index_;
  std::vector<Gloss> glosses_;
  std::unordered_map<std::string, std::vector<SynsetId>> rankings_;
  std::unordered_map<std::string, unsigned> pos_masks_;
  SemanticNetwork network_;
  std::size_t max_key_tokens_ = 1;
};

}  // namespace sensedefs

#endif  // SENSEDEFS_INVENTORY_HPP
