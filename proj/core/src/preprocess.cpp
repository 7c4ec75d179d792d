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

#include "sensedefs/preprocess.hpp"

#include <algorithm>
#include <fstream>
#include <tuple>

#include "sensedefs/error.hpp"
#include "sensedefs/unicode.hpp"

namespace sensedefs {

namespace {

bool is_hyphen(char32_t cp) { return cp == U'-' || cp == U'‐'; }

Pos suffix_pos(std::string_view folded) {
  if (folded.ends_with("ly")) {
    return Pos::Adverb;
  }
  if (folded.ends_with("ing") || folded.ends_with("ed") ||
      folded.ends_with("ize") || folded.ends_with("ise") ||
      folded.ends_with("ate")) {
    return Pos::Verb;
  }
  if (folded.ends_with("ous") || folded.ends_with("ful") ||
      folded.ends_with("ive") || folded.ends_with("able") ||
      folded.ends_with("ible") || folded.ends_with("ic") ||
      folded.ends_with("al")) {
    return Pos::Adjective;
  }
  return Pos::Noun;
}

}  // namespace

std::vector<Token> tokenize(std::string_view text) {
  const std::vector<char32_t> cps = uni::decode_utf8(text);
  std::vector<Token> tokens;
  auto emit = [&](std::size_t begin, std::size_t end) {
    tokens.push_back(
        {uni::encode_utf8({cps.data() + begin, end - begin}), begin, end});
  };

  const std::size_t n = cps.size();
  std::size_t i = 0;
  while (i < n) {
    if (uni::is_space(cps[i])) {
      ++i;
      continue;
    }
    std::size_t run_end = i;
    while (run_end < n && !uni::is_space(cps[run_end])) {
      ++run_end;
    }
    // Peel punctuation off both ends of the run one code point at a
    // time; interior punctuation stays put, which keeps decimals like
    // 12.5 or 1,024 in one piece.
    std::size_t begin = i;
    while (begin < run_end && uni::is_separable(cps[begin])) {
      emit(begin, begin + 1);
      ++begin;
    }
    std::size_t core_end = run_end;
    while (core_end > begin && uni::is_separable(cps[core_end - 1])) {
      --core_end;
    }
    std::size_t seg = begin;
    for (std::size_t k = begin; k < core_end; ++k) {
      if (is_hyphen(cps[k])) {
        if (k > seg) {
          emit(seg, k);
        }
        emit(k, k + 1);
        seg = k + 1;
      }
    }
    if (core_end > seg) {
      emit(seg, core_end);
    }
    for (std::size_t k = core_end; k < run_end; ++k) {
      emit(k, k + 1);
    }
    i = run_end;
  }
  return tokens;
}

std::string lexical_key(std::string_view text) {
  std::string key;
  for (const Token& token : tokenize(text)) {
    if (!key.empty()) {
      key.push_back(' ');
    }
    key.append(uni::fold(token.surface));
  }
  return key;
}

StopwordList StopwordList::load(const std::filesystem::path& dir) {
  if (!std::filesystem::is_directory(dir)) {
    throw ParseError("cannot open stopword directory '" + dir.string() + "'");
  }
  StopwordList list;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    const std::string name = entry.path().filename().string();
    constexpr std::string_view kPrefix = "stopwords.";
    constexpr std::string_view kSuffix = ".txt";
    if (name.size() <= kPrefix.size() + kSuffix.size() ||
        name.rfind(kPrefix, 0) != 0 ||
        name.compare(name.size() - kSuffix.size(), kSuffix.size(), kSuffix) !=
            0) {
      continue;
    }
    const std::string lang =
        name.substr(kPrefix.size(), name.size() - kPrefix.size() -
                                        kSuffix.size());
    std::ifstream in(entry.path());
    if (!in) {
      throw ParseError("cannot open '" + entry.path().string() + "'");
    }
    auto& words = list.words_[lang];
    std::string line;
    while (std::getline(in, line)) {
      if (!line.empty() && line.back() == '\r') {
        line.pop_back();
      }
      if (line.empty() || line[0] == '#') {
        continue;
      }
      words.insert(uni::fold(line));
    }
  }
  return list;
}

bool StopwordList::contains(std::string_view word,
                            std::string_view language) const {
  auto it = words_.find(std::string(language));
  if (it == words_.end()) {
    return false;
  }
  return it->second.count(uni::fold(word)) != 0;
}

HeuristicTagger::HeuristicTagger(const SenseInventory& inventory,
                                 const StopwordList& stopwords)
    : inventory_(inventory), stopwords_(stopwords) {}

Pos HeuristicTagger::tag(const Token& token, std::string_view language) const {
  const std::vector<char32_t> cps = uni::decode_utf8(token.surface);
  bool any_digit = false;
  bool all_punct = !cps.empty();
  bool numeric = !cps.empty();
  for (char32_t cp : cps) {
    const bool digit = uni::is_digit(cp);
    any_digit = any_digit || digit;
    if (!uni::is_separable(cp)) {
      all_punct = false;
    }
    if (!digit && cp != U'.' && cp != U',') {
      numeric = false;
    }
  }
  if (cps.empty() || all_punct || (numeric && any_digit)) {
    return Pos::Other;
  }

  const std::string folded = uni::fold(token.surface);
  if (stopwords_.contains(folded, language)) {
    return Pos::Other;
  }

  // Lexicon first: an unambiguous inventory key dictates the class, an
  // ambiguous one restricts the suffix guess to the attested classes.
  const std::vector<Pos> attested = inventory_.key_pos_set(folded, language);
  if (attested.size() == 1) {
    return attested.front();
  }
  const Pos guess = suffix_pos(folded);
  if (attested.empty()) {
    return guess;
  }
  if (std::find(attested.begin(), attested.end(), guess) != attested.end()) {
    return guess;
  }
  return attested.front();
}

std::vector<Mention> extract_mentions(const std::vector<Token>& tokens,
                                      std::string_view language,
                                      const SenseInventory& inventory,
                                      const PosTagger& tagger,
                                      std::size_t segment) {
  std::vector<Pos> pos(tokens.size());
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    pos[i] = tagger.tag(tokens[i], language);
  }

  struct Span {
    std::size_t begin;
    std::size_t end;  // inclusive token index
    Pos pos;
    std::string surface;
    std::vector<SynsetId> candidates;
  };
  std::vector<Span> found;

  // Longest multiword match per start position, capped by the longest
  // inventory key. First and last token must be content tokens; interior
  // stopwords or hyphens are allowed so keys like "state of the art"
  // remain reachable.
  const std::size_t window =
      std::min<std::size_t>(5, inventory.max_key_tokens());
  for (std::size_t i = 0; i < tokens.size() && window >= 2; ++i) {
    if (pos[i] == Pos::Other) {
      continue;
    }
    const std::size_t longest = std::min(window, tokens.size() - i);
    for (std::size_t len = longest; len >= 2; --len) {
      const std::size_t last = i + len - 1;
      if (pos[last] == Pos::Other) {
        continue;
      }
      std::string surface;
      for (std::size_t k = i; k <= last; ++k) {
        if (k > i) {
          surface.push_back(' ');
        }
        surface.append(tokens[k].surface);
      }
      bool matched = false;
      for (Pos p : kContentPos) {
        const auto& candidates =
            inventory.candidate_senses(surface, language, p);
        if (!candidates.empty()) {
          found.push_back({i, last, p, std::move(surface), candidates});
          matched = true;
          break;
        }
      }
      if (matched) {
        break;
      }
    }
  }

  // A multiword strictly inside another multiword is redundant; single
  // tokens always stand on their own.
  std::vector<Span> multi;
  for (std::size_t a = 0; a < found.size(); ++a) {
    bool contained = false;
    for (std::size_t b = 0; b < found.size() && !contained; ++b) {
      if (a == b) {
        continue;
      }
      contained = found[b].begin <= found[a].begin &&
                  found[a].end <= found[b].end &&
                  (found[b].begin != found[a].begin ||
                   found[b].end != found[a].end);
    }
    if (!contained) {
      multi.push_back(std::move(found[a]));
    }
  }

  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (pos[i] == Pos::Other) {
      continue;
    }
    const auto& candidates =
        inventory.candidate_senses(tokens[i].surface, language, pos[i]);
    if (!candidates.empty()) {
      multi.push_back({i, i, pos[i], tokens[i].surface, candidates});
    }
  }

  std::vector<Mention> mentions;
  mentions.reserve(multi.size());
  for (Span& span : multi) {
    Mention mention;
    mention.token_begin = span.begin;
    mention.token_end = span.end;
    mention.char_begin = tokens[span.begin].begin;
    mention.char_end = tokens[span.end].end;
    mention.lemma = lexical_key(span.surface);
    mention.surface = std::move(span.surface);
    mention.language = std::string(language);
    mention.pos = span.pos;
    mention.candidates = std::move(span.candidates);
    mention.segment = segment;
    mentions.push_back(std::move(mention));
  }
  std::sort(mentions.begin(), mentions.end(),
            [](const Mention& a, const Mention& b) {
              return std::tie(a.token_begin, a.token_end) <
                     std::tie(b.token_begin, b.token_end);
            });
  return mentions;
}

}  // namespace sensedefs
