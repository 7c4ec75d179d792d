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

#include <benchmark/benchmark.h>

#include <cstddef>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "sensedefs/disambiguate.hpp"
#include "sensedefs/evalstats.hpp"
#include "sensedefs/inventory.hpp"
#include "sensedefs/preprocess.hpp"
#include "sensedefs/unicode.hpp"

namespace {

using sensedefs::DisambiguationGraph;
using sensedefs::SemanticNetwork;
using sensedefs::Signature;
using sensedefs::SynsetId;

std::string synset_name(std::size_t i) {
  return "bench:" + std::to_string(i);
}

// A ring with random chords: connected, sparse and irregular enough
// that signature expansion does real work.
SemanticNetwork make_network(std::size_t vertices, std::size_t chords,
                             unsigned seed) {
  SemanticNetwork network;
  for (std::size_t i = 0; i < vertices; ++i) {
    network.add_vertex(synset_name(i));
  }
  for (std::size_t i = 0; i < vertices; ++i) {
    network.add_edge(synset_name(i), synset_name((i + 1) % vertices), 0.5);
  }
  std::mt19937 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, vertices - 1);
  std::uniform_real_distribution<double> weight(0.05, 1.0);
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (std::size_t added = 0; added < chords;) {
    const std::size_t a = pick(rng);
    const std::size_t b = pick(rng);
    if (a == b || (a + 1) % vertices == b || (b + 1) % vertices == a ||
        !seen.emplace(std::min(a, b), std::max(a, b)).second) {
      continue;
    }
    network.add_edge(synset_name(a), synset_name(b), weight(rng));
    ++added;
  }
  network.finalize();
  return network;
}

void BM_Tokenize(benchmark::State& state) {
  const std::string text =
      "Castling is the only move in chess that displaces two pieces at "
      "once: the king slides two squares toward a rook of the same color, "
      "and that rook jumps to the square the king just crossed. Neither "
      "piece may have moved before, no square between them may be "
      "occupied, and the king may not castle out of, through, or into "
      "check (rules 3.8a-3.8b).";
  for (auto _ : state) {
    benchmark::DoNotOptimize(sensedefs::tokenize(text));
  }
}
BENCHMARK(BM_Tokenize);

void BM_Fold(benchmark::State& state) {
  const std::string text = "Enroque Corto Y LARGO del pe\xc3\xb3n";
  for (auto _ : state) {
    benchmark::DoNotOptimize(sensedefs::uni::fold(text));
  }
}
BENCHMARK(BM_Fold);

void BM_SemanticSignature(benchmark::State& state) {
  const auto network = make_network(2000, 6000, 7);
  const std::size_t radius = static_cast<std::size_t>(state.range(0));
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        sensedefs::semantic_signature(synset_name(i), network, radius));
    i = (i + 37) % 2000;
  }
}
BENCHMARK(BM_SemanticSignature)->Arg(1)->Arg(2)->Arg(3);

void BM_SignatureOverlap(benchmark::State& state) {
  const auto network = make_network(2000, 6000, 7);
  const Signature a = sensedefs::semantic_signature(synset_name(0), network, 3);
  const Signature b =
      sensedefs::semantic_signature(synset_name(1000), network, 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(sensedefs::signature_overlap(a, b));
  }
}
BENCHMARK(BM_SignatureOverlap);

void BM_DensestAssignment(benchmark::State& state) {
  const std::size_t mentions = static_cast<std::size_t>(state.range(0));
  const std::size_t candidates = 4;
  DisambiguationGraph graph;
  for (std::size_t m = 0; m < mentions; ++m) {
    const std::size_t first = graph.vertices.size();
    for (std::size_t c = 0; c < candidates; ++c) {
      graph.vertices.push_back(
          {m, synset_name(m * candidates + c)});
    }
    graph.mention_span.emplace_back(first, graph.vertices.size());
  }
  graph.adjacency.resize(graph.vertices.size());
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> weight(0.1, 1.0);
  std::bernoulli_distribution keep(0.4);
  for (std::size_t u = 0; u < graph.vertices.size(); ++u) {
    for (std::size_t v = u + 1; v < graph.vertices.size(); ++v) {
      if (graph.vertices[u].mention == graph.vertices[v].mention ||
          !keep(rng)) {
        continue;
      }
      const double w = weight(rng);
      graph.adjacency[u].emplace_back(v, w);
      graph.adjacency[v].emplace_back(u, w);
    }
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(sensedefs::densest_assignment(graph));
  }
}
BENCHMARK(BM_DensestAssignment)->Arg(8)->Arg(32)->Arg(128);

void BM_WeightedOverlap(benchmark::State& state) {
  const std::size_t dim = 300;
  std::mt19937 rng(3);
  std::uniform_real_distribution<double> weight(0.0, 1.0);
  std::bernoulli_distribution nonzero(0.2);
  std::vector<double> a(dim), b(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    a[i] = nonzero(rng) ? weight(rng) : 0.0;
    b[i] = nonzero(rng) ? weight(rng) : 0.0;
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(sensedefs::weighted_overlap(a, b));
  }
}
BENCHMARK(BM_WeightedOverlap);

}  // namespace

BENCHMARK_MAIN();
