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
#include <string>
#include <vector>

#include "doctest.h"
#include "sensedefs/error.hpp"
#include "sensedefs/inventory.hpp"
#include "test_support.hpp"

using sensedefs::extract_mentions;
using sensedefs::HeuristicTagger;
using sensedefs::Mention;
using sensedefs::Pos;
using sensedefs::SenseInventory;
using sensedefs::StopwordList;
using sensedefs::Token;
using sensedefs::lexical_key;
using sensedefs::tokenize;
namespace testing = sensedefs::testing;

namespace {

std::vector<std::string> surfaces(const std::vector<Token>& tokens) {
  std::vector<std::string> out;
  for (const Token& t : tokens) {
    out.push_back(t.surface);
  }
  return out;
}

}  // namespace

TEST_CASE("tokenize splits on whitespace and peels punctuation") {
  const auto tokens = tokenize("Interchanging the positions of the king and "
                               "a rook.");
  REQUIRE(tokens.size() == 10);
  CHECK(surfaces(tokens) ==
        std::vector<std::string>{"Interchanging", "the", "positions", "of",
                                 "the", "king", "and", "a", "rook", "."});
  // Offsets frozen by hand-counting code points in the sentence above.
  CHECK(tokens[2].begin == 18);
  CHECK(tokens[2].end == 27);
  CHECK(tokens[5].begin == 35);
  CHECK(tokens[5].end == 39);
  CHECK(tokens[8].begin == 46);
  CHECK(tokens[8].end == 50);
  CHECK(tokens[9].begin == 50);
  CHECK(tokens[9].end == 51);
}

TEST_CASE("tokenize offsets count code points, not bytes") {
  const auto tokens = tokenize("pe\xc3\xb3n de torre.");
  REQUIRE(tokens.size() == 4);
  CHECK(tokens[0].surface == "pe\xc3\xb3n");
  CHECK(tokens[0].begin == 0);
  CHECK(tokens[0].end == 4);
  CHECK(tokens[2].surface == "torre");
  CHECK(tokens[2].begin == 8);
  CHECK(tokens[2].end == 13);
  CHECK(tokens[3].surface == ".");
}

TEST_CASE("tokenize keeps decimal and grouped numbers intact") {
  const auto tokens = tokenize("It weighs 12.5 grams, about 1,024 grains.");
  const auto s = surfaces(tokens);
  CHECK(std::count(s.begin(), s.end(), "12.5") == 1);
  CHECK(std::count(s.begin(), s.end(), "1,024") == 1);
  // The clause comma is still peeled off the preceding word.
  CHECK(std::count(s.begin(), s.end(), ",") == 1);
}

TEST_CASE("tokenize splits internal hyphens") {
  const auto tokens = tokenize("king-side castle");
  CHECK(surfaces(tokens) ==
        std::vector<std::string>{"king", "-", "side", "castle"});
}

TEST_CASE("tokenize peels wrapping punctuation one character at a time") {
  const auto tokens = tokenize("(\"rook\")");
  CHECK(surfaces(tokens) ==
        std::vector<std::string>{"(", "\"", "rook", "\"", ")"});
}

TEST_CASE("tokenize on empty and all-space input") {
  CHECK(tokenize("").empty());
  CHECK(tokenize(" \t \n ").empty());
}

TEST_CASE("lexical_key folds case and joins tokens with single spaces") {
  CHECK(lexical_key("Chess Piece") == "chess piece");
  CHECK(lexical_key("  chess \t piece ") == "chess piece");
  CHECK(lexical_key("Chess-Piece") == "chess - piece");
  CHECK(lexical_key("PE\xc3\x93N") == "pe\xc3\xb3n");
}

TEST_CASE("stopword lists are per language and folded") {
  const StopwordList stopwords =
      StopwordList::load(testing::chess_mini_dir());
  CHECK(stopwords.contains("the", "en"));
  CHECK(stopwords.contains("The", "en"));
  CHECK_FALSE(stopwords.contains("the", "es"));
  CHECK(stopwords.contains("que", "es"));
  CHECK_FALSE(stopwords.contains("rook", "en"));
  // A language without a list rejects nothing.
  CHECK_FALSE(stopwords.contains("the", "fr"));
}

TEST_CASE("missing stopword directory is an error") {
  CHECK_THROWS_AS(StopwordList::load(testing::fixture_dir() / "no_such_dir"),
                  sensedefs::ParseError);
}

TEST_CASE("tagger classifies tokens against the inventory") {
  const SenseInventory inventory =
      SenseInventory::load(testing::chess_mini_dir());
  const StopwordList stopwords =
      StopwordList::load(testing::chess_mini_dir());
  const HeuristicTagger tagger(inventory, stopwords);

  auto tag = [&](const std::string& surface, const std::string& lang) {
    return tagger.tag(Token{surface, 0, surface.size()}, lang);
  };

  CHECK(tag("rook", "en") == Pos::Noun);
  CHECK(tag("Rook", "en") == Pos::Noun);
  // The only sense of "special" in the inventory is adjectival.
  CHECK(tag("special", "en") == Pos::Adjective);
  CHECK(tag("the", "en") == Pos::Other);
  CHECK(tag(".", "en") == Pos::Other);
  CHECK(tag("12.5", "en") == Pos::Other);
  // Unknown words fall back to suffix heuristics.
  CHECK(tag("involving", "en") == Pos::Verb);
  CHECK(tag("quickly", "en") == Pos::Adverb);
  CHECK(tag("tower", "en") == Pos::Noun);
}

TEST_CASE("extract_mentions finds single-word mentions with candidates") {
  const SenseInventory inventory =
      SenseInventory::load(testing::chess_mini_dir());
  const StopwordList stopwords =
      StopwordList::load(testing::chess_mini_dir());
  const HeuristicTagger tagger(inventory, stopwords);

  const auto tokens =
      tokenize("Interchanging the positions of the king and a rook.");
  const auto mentions =
      extract_mentions(tokens, "en", inventory, tagger, 4);

  REQUIRE(mentions.size() == 3);
  CHECK(mentions[0].surface == "positions");
  CHECK(mentions[0].lemma == "positions");
  CHECK(mentions[0].char_begin == 18);
  CHECK(mentions[0].char_end == 27);
  CHECK(mentions[0].pos == Pos::Noun);
  CHECK(mentions[0].segment == 4);
  CHECK(mentions[0].candidates ==
        std::vector<std::string>{"position_rank", "position_perch"});
  CHECK(mentions[1].surface == "king");
  CHECK(mentions[1].candidates ==
        std::vector<std::string>{"king_monarch", "king_chess"});
  CHECK(mentions[2].surface == "rook");
  CHECK(mentions[2].candidates ==
        std::vector<std::string>{"rook_chess", "rook_bird"});
}

TEST_CASE("extract_mentions keeps multiword spans and their parts") {
  const SenseInventory inventory =
      SenseInventory::load(testing::chess_mini_dir());
  const StopwordList stopwords =
      StopwordList::load(testing::chess_mini_dir());
  const HeuristicTagger tagger(inventory, stopwords);

  const auto tokens = tokenize("A chess piece shaped like a tower.");
  const auto mentions = extract_mentions(tokens, "en", inventory, tagger);

  REQUIRE(mentions.size() == 3);
  // Sorted by token span: "chess", then the two-token "chess piece",
  // then "piece".
  CHECK(mentions[0].surface == "chess");
  CHECK(mentions[0].char_begin == 2);
  CHECK(mentions[0].char_end == 7);
  CHECK(mentions[1].surface == "chess piece");
  CHECK(mentions[1].lemma == "chess piece");
  CHECK(mentions[1].char_begin == 2);
  CHECK(mentions[1].char_end == 13);
  CHECK(mentions[1].candidates == std::vector<std::string>{"chess_piece"});
  CHECK(mentions[2].surface == "piece");
  CHECK(mentions[2].char_begin == 8);
  CHECK(mentions[2].char_end == 13);
}

TEST_CASE("stopwords and unknown words yield no mentions") {
  const SenseInventory inventory =
      SenseInventory::load(testing::chess_mini_dir());
  const StopwordList stopwords =
      StopwordList::load(testing::chess_mini_dir());
  const HeuristicTagger tagger(inventory, stopwords);

  const auto tokens = tokenize("A game played between two players.");
  CHECK(extract_mentions(tokens, "en", inventory, tagger).empty());
}
