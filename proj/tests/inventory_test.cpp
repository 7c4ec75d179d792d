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

#include <string>
#include <vector>

#include "doctest.h"
#include "sensedefs/error.hpp"
#include "test_support.hpp"

using sensedefs::IntegrityError;
using sensedefs::ParseError;
using sensedefs::Pos;
using sensedefs::SemanticNetwork;
using sensedefs::SenseInventory;
using sensedefs::SynsetId;
namespace testing = sensedefs::testing;

namespace {

// A loadable inventory directory seeded with the minimum viable files;
// individual tests overwrite one file to provoke a specific failure.
testing::TempDir seed_inventory() {
  testing::TempDir dir;
  dir.write("synsets.tsv",
            "s1\tNOUN\talpha@en\n"
            "s2\tNOUN\talpha@en|beta@en\n");
  dir.write("glosses.tsv", "g1\ts1\tWordNet\ten\tSomething about alpha.\n");
  dir.write("rankings.tsv", "alpha\ten\tNOUN\ts2,s1\n");
  dir.write("edges.tsv", "s1\ts2\t0.5\n");
  return dir;
}

}  // namespace

TEST_CASE("chess_mini inventory loads and resolves candidates") {
  const SenseInventory inv = SenseInventory::load(testing::chess_mini_dir());

  CHECK(inv.synset_count() == 12);
  CHECK(inv.glosses().size() == 7);
  CHECK(inv.network().vertex_count() == 12);
  CHECK(inv.network().edge_count() == 8);
  CHECK(inv.max_key_tokens() == 2);

  REQUIRE(inv.find_synset("rook_chess") != nullptr);
  CHECK(inv.find_synset("rook_chess")->pos == Pos::Noun);
  CHECK(inv.find_synset("no_such") == nullptr);

  // Explicit ranking rows are authoritative and ordered.
  CHECK(inv.candidate_senses("rook", "en", Pos::Noun) ==
        std::vector<SynsetId>{"rook_chess", "rook_bird"});
  CHECK(inv.candidate_senses("king", "en", Pos::Noun) ==
        std::vector<SynsetId>{"king_monarch", "king_chess"});
  CHECK(inv.most_common_sense("king", "en", Pos::Noun) ==
        SynsetId("king_monarch"));

  // Keys without a ranking row fall back to synset file order.
  CHECK(inv.candidate_senses("torre", "es", Pos::Noun) ==
        std::vector<SynsetId>{"rook_chess"});
  CHECK(inv.candidate_senses("chess piece", "en", Pos::Noun) ==
        std::vector<SynsetId>{"chess_piece"});

  // Wrong language or POS finds nothing.
  CHECK(inv.candidate_senses("rook", "es", Pos::Noun).empty());
  CHECK(inv.candidate_senses("rook", "en", Pos::Verb).empty());
  CHECK(inv.most_common_sense("rook", "en", Pos::Verb) == std::nullopt);

  CHECK(inv.key_pos_set("special", "en") == std::vector<Pos>{Pos::Adjective});
  CHECK(inv.key_pos_set("king", "en") == std::vector<Pos>{Pos::Noun});
  CHECK(inv.key_pos_set("zebra", "en").empty());
}

TEST_CASE("candidate lookup folds the lemma") {
  const SenseInventory inv = SenseInventory::load(testing::chess_mini_dir());
  CHECK(inv.candidate_senses("Rook", "en", Pos::Noun) ==
        std::vector<SynsetId>{"rook_chess", "rook_bird"});
  CHECK(inv.candidate_senses("CHESS PIECE", "en", Pos::Noun) ==
        std::vector<SynsetId>{"chess_piece"});
}

TEST_CASE("semantic network rejects malformed edges") {
  SemanticNetwork net;
  net.add_vertex("a");
  net.add_vertex("b");
  CHECK_THROWS_AS(net.add_edge("a", "a", 0.5), IntegrityError);
  CHECK_THROWS_AS(net.add_edge("a", "b", 0.0), IntegrityError);
  CHECK_THROWS_AS(net.add_edge("a", "b", -1.0), IntegrityError);
  CHECK_THROWS_AS(net.add_edge("a", "zzz", 0.5), IntegrityError);

  net.add_edge("a", "b", 0.5);
  // Re-adding with the same weight is tolerated, a different weight is
  // a conflict caught at finalize.
  net.add_edge("b", "a", 0.5);
  net.finalize();
  CHECK(net.edge_count() == 1);
  REQUIRE(net.neighbors("a").size() == 1);
  CHECK(net.neighbors("a")[0].first == "b");
  CHECK(net.neighbors("a")[0].second == 0.5);
  // Neighbor lookups are only valid for known synsets.
  CHECK_THROWS_AS(net.neighbors("zzz"), IntegrityError);
}

TEST_CASE("semantic network detects conflicting duplicate edges") {
  SemanticNetwork net;
  net.add_vertex("a");
  net.add_vertex("b");
  net.add_edge("a", "b", 0.5);
  net.add_edge("a", "b", 0.7);
  CHECK_THROWS_AS(net.finalize(), IntegrityError);
}

TEST_CASE("loader rejects a gloss for an unknown synset") {
  auto dir = seed_inventory();
  dir.write("glosses.tsv", "g1\tmissing\tWordNet\ten\tText here.\n");
  CHECK_THROWS_AS(SenseInventory::load(dir.path()), IntegrityError);
}

TEST_CASE("loader rejects duplicate synset ids") {
  auto dir = seed_inventory();
  dir.write("synsets.tsv",
            "s1\tNOUN\talpha@en\n"
            "s1\tNOUN\talpha@en\n"
            "s2\tNOUN\tbeta@en\n");
  CHECK_THROWS_AS(SenseInventory::load(dir.path()), IntegrityError);
}

TEST_CASE("loader rejects duplicate gloss identity") {
  auto dir = seed_inventory();
  dir.write("glosses.tsv",
            "g1\ts1\tWordNet\ten\tFirst text.\n"
            "g1\ts2\tWordNet\ten\tSecond text.\n");
  CHECK_THROWS_AS(SenseInventory::load(dir.path()), IntegrityError);
}

TEST_CASE("same gloss id under different resources is fine") {
  auto dir = seed_inventory();
  dir.write("glosses.tsv",
            "g1\ts1\tWordNet\ten\tFirst text.\n"
            "g1\ts2\tWikipedia\ten\tSecond text.\n");
  CHECK(SenseInventory::load(dir.path()).glosses().size() == 2);
}

TEST_CASE("loader rejects rankings that disagree with the inventory") {
  auto dir = seed_inventory();

  SUBCASE("unknown synset") {
    dir.write("rankings.tsv", "alpha\ten\tNOUN\ts2,ghost\n");
  }
  SUBCASE("synset of a different POS") {
    dir.write("synsets.tsv",
              "s1\tNOUN\talpha@en\n"
              "s2\tVERB\talpha@en\n");
    dir.write("rankings.tsv", "alpha\ten\tNOUN\ts1,s2\n");
    dir.write("edges.tsv", "");
  }
  SUBCASE("repeated synset in one row") {
    dir.write("rankings.tsv", "alpha\ten\tNOUN\ts1,s1\n");
  }
  SUBCASE("two rows for the same key") {
    dir.write("rankings.tsv",
              "alpha\ten\tNOUN\ts1,s2\n"
              "alpha\ten\tNOUN\ts2,s1\n");
  }
  CHECK_THROWS_AS(SenseInventory::load(dir.path()), IntegrityError);
}

TEST_CASE("loader rejects malformed fields") {
  auto dir = seed_inventory();

  SUBCASE("bad lexicalization") {
    dir.write("synsets.tsv", "s1\tNOUN\talpha\n");
  }
  SUBCASE("bad POS") {
    dir.write("synsets.tsv", "s1\tPRONOUN\talpha@en\n");
  }
  SUBCASE("bad edge weight") {
    dir.write("edges.tsv", "s1\ts2\theavy\n");
  }
  CHECK_THROWS_AS(SenseInventory::load(dir.path()), ParseError);
}

TEST_CASE("loader rejects non-positive edge weights") {
  auto dir = seed_inventory();
  dir.write("edges.tsv", "s1\ts2\t0\n");
  CHECK_THROWS_AS(SenseInventory::load(dir.path()), IntegrityError);
}

TEST_CASE("ranking file may omit synsets and stays authoritative") {
  auto dir = seed_inventory();
  // alpha maps to s1 and s2 but the ranking row lists only s2.
  dir.write("rankings.tsv", "alpha\ten\tNOUN\ts2\n");
  const SenseInventory inv = SenseInventory::load(dir.path());
  CHECK(inv.candidate_senses("alpha", "en", Pos::Noun) ==
        std::vector<SynsetId>{"s2"});
  // beta has no row; it gets the implicit file-order ranking.
  CHECK(inv.candidate_senses("beta", "en", Pos::Noun) ==
        std::vector<SynsetId>{"s2"});
}

TEST_CASE("gloss text may contain tab characters") {
  auto dir = seed_inventory();
  dir.write("glosses.tsv", "g1\ts1\tWordNet\ten\tText with\ta tab.\n");
  const SenseInventory inv = SenseInventory::load(dir.path());
  REQUIRE(inv.glosses().size() == 1);
  CHECK(inv.glosses()[0].text == "Text with\ta tab.");
}
