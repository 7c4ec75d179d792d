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

#include "sensedefs/inventory.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <unordered_set>

#include "sensedefs/error.hpp"
#include "sensedefs/preprocess.hpp"
#include "sensedefs/tsv.hpp"

namespace sensedefs {

namespace {

// Internal key separators. U+001F cannot appear in tab-separated fields.
constexpr char kSep = '\x1f';

std::string ranking_key(std::string_view lemma_key, std::string_view language,
                        Pos pos) {
  std::string key;
  key.reserve(lemma_key.size() + language.size() + 4);
  key.append(lemma_key);
  key.push_back(kSep);
  key.append(language);
  key.push_back(kSep);
  key.push_back(static_cast<char>('0' + static_cast<int>(pos)));
  return key;
}

std::string pos_set_key(std::string_view lemma_key,
                        std::string_view language) {
  std::string key;
  key.reserve(lemma_key.size() + language.size() + 1);
  key.append(lemma_key);
  key.push_back(kSep);
  key.append(language);
  return key;
}

double parse_weight(const std::string& field, const std::filesystem::path& path,
                    std::size_t line) {
  const char* begin = field.c_str();
  char* end = nullptr;
  errno = 0;
  double value = std::strtod(begin, &end);
  if (end != begin + field.size() || field.empty() || errno == ERANGE ||
      !std::isfinite(value)) {
    throw ParseError(path.string() + ":" + std::to_string(line) +
                     ": malformed edge weight '" + field + "'");
  }
  return value;
}

std::size_t token_count(std::string_view lemma_key) {
  return static_cast<std::size_t>(
             std::count(lemma_key.begin(), lemma_key.end(), ' ')) +
         1;
}

}  // namespace

void SemanticNetwork::add_vertex(const SynsetId& id) {
  adjacency_.try_emplace(id);
}

void SemanticNetwork::add_edge(const SynsetId& a, const SynsetId& b,
                               double weight) {
  if (a == b) {
    throw IntegrityError("self-loop on synset '" + a + "'");
  }
  if (!(weight > 0.0) || !std::isfinite(weight)) {
    throw IntegrityError("non-positive weight on edge '" + a + "' - '" + b +
                         "'");
  }
  auto ia = adjacency_.find(a);
  auto ib = adjacency_.find(b);
  if (ia == adjacency_.end() || ib == adjacency_.end()) {
    throw IntegrityError("edge endpoint '" +
                         (ia == adjacency_.end() ? a : b) +
                         "' is not an inventory synset");
  }
  ia->second.emplace_back(b, weight);
  ib->second.emplace_back(a, weight);
}

void SemanticNetwork::finalize() {
  std::size_t directed = 0;
  for (auto& [id, neighbors] : adjacency_) {
    std::sort(neighbors.begin(), neighbors.end());
    // Both orientations of a file edge land here, so duplicates with an
    // identical weight collapse; differing weights mean the input listed
    // one relation twice inconsistently.
    auto last = std::unique(neighbors.begin(), neighbors.end());
    neighbors.erase(last, neighbors.end());
    for (std::size_t i = 1; i < neighbors.size(); ++i) {
      if (neighbors[i].first == neighbors[i - 1].first) {
        throw IntegrityError("conflicting weights for edge '" + id + "' - '" +
                             neighbors[i].first + "'");
      }
    }
    directed += neighbors.size();
  }
  edge_count_ = directed / 2;
  finalized_ = true;
}

bool SemanticNetwork::contains(const SynsetId& id) const {
  return adjacency_.count(id) != 0;
}

std::span<const std::pair<SynsetId, double>> SemanticNetwork::neighbors(
    const SynsetId& id) const {
  auto it = adjacency_.find(id);
  if (it == adjacency_.end()) {
    throw IntegrityError("unknown synset '" + id + "' in network lookup");
  }
  return {it->second.data(), it->second.size()};
}

std::vector<Gloss> parse_glosses_tsv(const std::filesystem::path& path) {
  std::vector<Gloss> glosses;
  std::unordered_set<std::string> seen;
  for (const TsvRecord& record : read_tsv(path, 5)) {
    Gloss gloss;
    gloss.gloss_id = record.fields[0];
    gloss.definiendum = record.fields[1];
    gloss.resource = resource_from_string(record.fields[2]);
    gloss.language = record.fields[3];
    // The gloss text is the final column; glue any stray tabs back so a
    // sloppy extractor does not silently truncate definitions.
    gloss.text = record.fields[4];
    for (std::size_t i = 5; i < record.fields.size(); ++i) {
      gloss.text.push_back('\t');
      gloss.text.append(record.fields[i]);
    }
    if (gloss.gloss_id.empty() || gloss.definiendum.empty() ||
        gloss.language.empty() || gloss.text.empty()) {
      throw ParseError(path.string() + ":" + std::to_string(record.line) +
                       ": empty field in gloss record");
    }
    std::string identity(to_string(gloss.resource));
    identity.push_back(kSep);
    identity.append(gloss.language);
    identity.push_back(kSep);
    identity.append(gloss.gloss_id);
    if (!seen.insert(identity).second) {
      throw IntegrityError("duplicate gloss '" + gloss.gloss_id + "' for " +
                           std::string(to_string(gloss.resource)) + "/" +
                           gloss.language);
    }
    glosses.push_back(std::move(gloss));
  }
  return glosses;
}

SenseInventory SenseInventory::load(const std::filesystem::path& dir) {
  SenseInventory inv;

  const auto synsets_path = dir / "synsets.tsv";
  for (const TsvRecord& record : read_tsv(synsets_path, 3)) {
    Synset synset;
    synset.id = record.fields[0];
    synset.pos = pos_from_string(record.fields[1]);
    if (synset.id.empty()) {
      throw ParseError(synsets_path.string() + ":" +
                       std::to_string(record.line) + ": empty synset id");
    }
    for (std::string_view lex : split(record.fields[2], '|')) {
      auto at = lex.rfind('@');
      if (at == std::string_view::npos || at == 0 || at + 1 == lex.size()) {
        throw ParseError(synsets_path.string() + ":" +
                         std::to_string(record.line) +
                         ": malformed lexicalization '" + std::string(lex) +
                         "'");
      }
      synset.lexicalizations.push_back(
          {std::string(lex.substr(0, at)), std::string(lex.substr(at + 1))});
    }
    if (synset.lexicalizations.empty()) {
      throw ParseError(synsets_path.string() + ":" +
                       std::to_string(record.line) +
                       ": synset without lexicalizations");
    }
    if (!inv.synset_index_.emplace(synset.id, inv.synsets_.size()).second) {
      throw IntegrityError("duplicate synset id '" + synset.id + "'");
    }
    inv.network_.add_vertex(synset.id);
    inv.synsets_.push_back(std::move(synset));
  }

  inv.glosses_ = parse_glosses_tsv(dir / "glosses.tsv");
  for (const Gloss& gloss : inv.glosses_) {
    if (inv.synset_index_.find(gloss.definiendum) == inv.synset_index_.end()) {
      throw IntegrityError("gloss '" + gloss.gloss_id +
                           "' defines unknown synset '" + gloss.definiendum +
                           "'");
    }
  }

  const auto rankings_path = dir / "rankings.tsv";
  for (const TsvRecord& record : read_tsv(rankings_path, 4)) {
    const std::string lemma_key = lexical_key(record.fields[0]);
    const Pos pos = pos_from_string(record.fields[2]);
    if (lemma_key.empty() || record.fields[1].empty()) {
      throw ParseError(rankings_path.string() + ":" +
                       std::to_string(record.line) +
                       ": empty lemma or language");
    }
    std::vector<SynsetId> ranked;
    std::unordered_set<std::string> in_row;
    for (std::string_view id : split(record.fields[3], ',')) {
      auto it = inv.synset_index_.find(std::string(id));
      if (id.empty() || it == inv.synset_index_.end()) {
        throw IntegrityError("ranking for '" + record.fields[0] +
                             "' lists unknown synset '" + std::string(id) +
                             "'");
      }
      if (inv.synsets_[it->second].pos != pos) {
        throw IntegrityError("ranking for '" + record.fields[0] + "' (" +
                             std::string(to_string(pos)) + ") lists synset '" +
                             std::string(id) + "' of different class");
      }
      if (!in_row.insert(std::string(id)).second) {
        throw IntegrityError("ranking for '" + record.fields[0] +
                             "' repeats synset '" + std::string(id) + "'");
      }
      ranked.emplace_back(id);
    }
    if (ranked.empty()) {
      throw ParseError(rankings_path.string() + ":" +
                       std::to_string(record.line) + ": empty ranking");
    }
    auto [slot, inserted] = inv.rankings_.emplace(
        ranking_key(lemma_key, record.fields[1], pos), std::move(ranked));
    if (!inserted) {
      throw IntegrityError("duplicate ranking for '" + record.fields[0] +
                           "'/" + record.fields[1] + "/" +
                           std::string(to_string(pos)));
    }
  }

  // Lexicalizations without an explicit ranking fall back to an implicit
  // one in synset file order. Keys with an explicit row are left alone:
  // the ranking file is authoritative even when it omits a synset.
  std::unordered_set<std::string> explicit_keys;
  explicit_keys.reserve(inv.rankings_.size());
  for (const auto& [key, ranked] : inv.rankings_) {
    explicit_keys.insert(key);
  }
  for (const Synset& synset : inv.synsets_) {
    for (const Lexicalization& lex : synset.lexicalizations) {
      const std::string lemma_key = lexical_key(lex.lemma);
      if (lemma_key.empty()) {
        throw IntegrityError("synset '" + synset.id +
                             "' has an empty lexicalization");
      }
      const std::string key = ranking_key(lemma_key, lex.language, synset.pos);
      if (explicit_keys.count(key) != 0) {
        continue;
      }
      auto& implicit = inv.rankings_[key];
      if (std::find(implicit.begin(), implicit.end(), synset.id) ==
          implicit.end()) {
        implicit.push_back(synset.id);
      }
    }
  }

  const auto edges_path = dir / "edges.tsv";
  for (const TsvRecord& record : read_tsv(edges_path, 3)) {
    double weight = parse_weight(record.fields[2], edges_path, record.line);
    if (weight <= 0.0) {
      throw IntegrityError("edge '" + record.fields[0] + "' - '" +
                           record.fields[1] + "' has non-positive weight");
    }
    inv.network_.add_edge(record.fields[0], record.fields[1], weight);
  }
  inv.network_.finalize();

  for (const auto& [key, ranked] : inv.rankings_) {
    auto second = key.find(kSep);
    auto third = key.find(kSep, second + 1);
    std::string_view lemma_key(key.data(), second);
    std::string_view language(key.data() + second + 1, third - second - 1);
    int pos_digit = key[third + 1] - '0';
    inv.pos_masks_[pos_set_key(lemma_key, language)] |= 1u << pos_digit;
    inv.max_key_tokens_ = std::max(inv.max_key_tokens_,
                                   token_count(lemma_key));
  }
  return inv;
}

const Synset* SenseInventory::find_synset(const SynsetId& id) const {
  auto it = synset_index_.find(id);
  return it == synset_index_.end() ? nullptr : &synsets_[it->second];
}

const std::vector<SynsetId>& SenseInventory::candidate_senses(
    std::string_view lemma, std::string_view language, Pos pos) const {
  static const std::vector<SynsetId> kNone;
  auto it = rankings_.find(ranking_key(lexical_key(lemma), language, pos));
  return it == rankings_.end() ? kNone : it->second;
}

std::optional<SynsetId> SenseInventory::most_common_sense(
    std::string_view lemma, std::string_view language, Pos pos) const {
  const auto& ranked = candidate_senses(lemma, language, pos);
  if (ranked.empty()) {
    return std::nullopt;
  }
  return ranked.front();
}

std::vector<Pos> SenseInventory::key_pos_set(std::string_view lemma,
                                             std::string_view language) const {
  auto it = pos_masks_.find(pos_set_key(lexical_key(lemma), language));
  std::vector<Pos> result;
  if (it == pos_masks_.end()) {
    return result;
  }
  for (Pos pos : kContentPos) {
    if (it->second & (1u << static_cast<int>(pos))) {
      result.push_back(pos);
    }
  }
  return result;
}

}  // namespace sensedefs
