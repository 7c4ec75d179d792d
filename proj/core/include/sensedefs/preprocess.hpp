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

#ifndef SENSEDEFS_PREPROCESS_HPP
#define SENSEDEFS_PREPROCESS_HPP

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "sensedefs/inventory.hpp"
#include "sensedefs/types.hpp"

namespace sensedefs {

// A surface token with Unicode code point offsets into the source text
// (half-open [begin, end)).
struct Token {
  std::string surface;
  std::size_t begin = 0;
  std::size_t end = 0;
};

// A linkable fragment: a token span (inclusive on both sides) whose
// lexical key has at least one candidate sense. Character offsets are
// code point offsets of the first token's start and the last token's
// end. The segment index ties a mention back to the gloss it came from
// once glosses are pooled into one document.
struct Mention {
  std::size_t token_begin = 0;
  std::size_t token_end = 0;
  std::size_t char_begin = 0;
  std::size_t char_end = 0;
  std::string surface;
  std::string lemma;
  LangCode language;
  Pos pos = Pos::Other;
  std::vector<SynsetId> candidates;
  std::size_t segment = 0;
};

// Deterministic rule-based tokenizer: splits on Unicode whitespace,
// peels leading and trailing punctuation into separate tokens, splits
// internal hyphens, and keeps decimal numbers (12.5, 1,024) intact.
std::vector<Token> tokenize(std::string_view text);

// Normal form used for inventory keys and mention lemmas: tokenize,
// NFC + lowercase each token, join with single spaces. Ensures that
// "Chess-Piece" and "chess - piece" address the same inventory entry.
std::string lexical_key(std::string_view text);

// Per-language stopword lists loaded from stopwords.<lang>.txt files
// (one word per line, # comments). Words are stored folded; a language
// without a list rejects nothing.
class StopwordList {
 public:
  static StopwordList load(const std::filesystem::path& dir);
  static StopwordList empty() { return StopwordList(); }

  bool contains(std::string_view word, std::string_view language) const;
  std::size_t language_count() const { return words_.size(); }

 private:
  std::unordered_map<std::string, std::unordered_set<std::string>> words_;
};

// Part of speech assignment for single tokens. The heuristic tagger is
// lexicon-first: a token whose key exists in the inventory under
// exactly one content POS gets that POS; ambiguous keys fall back to
// suffix rules restricted to the attested classes. Tokens unknown to
// the inventory get pure suffix rules. Punctuation, numbers and
// stopwords are tagged Other and never become mentions.
class PosTagger {
 public:
  virtual ~PosTagger() = default;
  virtual Pos tag(const Token& token, std::string_view language) const = 0;
};

class HeuristicTagger : public PosTagger {
 public:
  HeuristicTagger(const SenseInventory& inventory,
                  const StopwordList& stopwords);

  Pos tag(const Token& token, std::string_view language) const override;

 private:
  const SenseInventory& inventory_;
  const StopwordList& stopwords_;
};

// Finds all linkable mentions in a tokenized gloss. Multiword spans are
// matched greedily up to the longest inventory key (capped at five
// tokens); a multiword strictly contained in a longer multiword match
// is dropped, while single-token mentions are always kept, so "chess
// piece" yields mentions for the pair and for each word. Mentions are
// ordered by (token_begin, token_end).
std::vector<Mention> extract_mentions(const std::vector<Token>& tokens,
                                      std::string_view language,
                                      const SenseInventory& inventory,
                                      const PosTagger& tagger,
                                      std::size_t segment = 0);

}  // namespace sensedefs

#endif  // SENSEDEFS_PREPROCESS_HPP
