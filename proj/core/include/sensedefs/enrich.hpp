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

#ifndef SENSEDEFS_ENRICH_HPP
#define SENSEDEFS_ENRICH_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "sensedefs/inventory.hpp"
#include "sensedefs/preprocess.hpp"
#include "sensedefs/types.hpp"

namespace sensedefs {

// One gloss inside an enriched document. Token and mention offsets are
// relative to this segment's own text.
struct GlossSegment {
  std::string gloss_id;
  Resource resource = Resource::WordNet;
  LangCode language;
  std::string text;
  std::vector<Token> tokens;
};

// All glosses that define one synset, pooled into a single context so
// short definitions borrow disambiguation evidence from their siblings
// in other resources and languages. Mentions from every segment share
// one list; the segment index ties each back to its gloss.
struct EnrichedDocument {
  SynsetId definiendum;
  std::vector<GlossSegment> segments;
  std::vector<Mention> mentions;
};

// Builds the enriched document for one definiendum. Segments are
// ordered by (resource, language, gloss id) so the pooled mention list
// is reproducible regardless of input order; mentions follow segment
// order and, within a segment, token order.
EnrichedDocument build_enriched_document(const SynsetId& definiendum,
                                         const std::vector<Gloss>& glosses,
                                         const SenseInventory& inventory,
                                         const PosTagger& tagger);

// Groups a gloss corpus by definiendum and builds every document,
// ordered by definiendum id. A synset with a single gloss simply yields
// a one-segment document; there is nothing to pool but the pipeline
// downstream does not care.
std::vector<EnrichedDocument> group_corpus(const std::vector<Gloss>& glosses,
                                           const SenseInventory& inventory,
                                           const PosTagger& tagger);

}  // namespace sensedefs

#endif  // SENSEDEFS_ENRICH_HPP
