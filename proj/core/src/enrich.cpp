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

#include "sensedefs/enrich.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "sensedefs/error.hpp"

namespace sensedefs {

EnrichedDocument build_enriched_document(const SynsetId& definiendum,
                                         const std::vector<Gloss>& glosses,
                                         const SenseInventory& inventory,
                                         const PosTagger& tagger) {
  if (inventory.find_synset(definiendum) == nullptr) {
    throw IntegrityError("enriched document for unknown synset '" +
                         definiendum + "'");
  }
  EnrichedDocument doc;
  doc.definiendum = definiendum;
  for (const Gloss& gloss : glosses) {
    if (gloss.definiendum != definiendum) {
      throw IntegrityError("gloss '" + gloss.gloss_id +
                           "' pooled under wrong synset '" + definiendum +
                           "'");
    }
    GlossSegment segment;
    segment.gloss_id = gloss.gloss_id;
    segment.resource = gloss.resource;
    segment.language = gloss.language;
    segment.text = gloss.text;
    doc.segments.push_back(std::move(segment));
  }
  std::sort(doc.segments.begin(), doc.segments.end(),
            [](const GlossSegment& a, const GlossSegment& b) {
              return std::tie(a.resource, a.language, a.gloss_id) <
                     std::tie(b.resource, b.language, b.gloss_id);
            });
  for (std::size_t s = 0; s < doc.segments.size(); ++s) {
    GlossSegment& segment = doc.segments[s];
    segment.tokens = tokenize(segment.text);
    std::vector<Mention> mentions = extract_mentions(
        segment.tokens, segment.language, inventory, tagger, s);
    doc.mentions.insert(doc.mentions.end(),
                        std::make_move_iterator(mentions.begin()),
                        std::make_move_iterator(mentions.end()));
  }
  return doc;
}

std::vector<EnrichedDocument> group_corpus(const std::vector<Gloss>& glosses,
                                           const SenseInventory& inventory,
                                           const PosTagger& tagger) {
  std::map<SynsetId, std::vector<Gloss>> grouped;
  for (const Gloss& gloss : glosses) {
    grouped[gloss.definiendum].push_back(gloss);
  }
  std::vector<EnrichedDocument> documents;
  documents.reserve(grouped.size());
  for (const auto& [definiendum, pooled] : grouped) {
    documents.push_back(
        build_enriched_document(definiendum, pooled, inventory, tagger));
  }
  return documents;
}

}  // namespace sensedefs
