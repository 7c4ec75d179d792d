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

#ifndef SENSEDEFS_TYPES_HPP
#define SENSEDEFS_TYPES_HPP

#include <string>
#include <string_view>
#include <vector>

namespace sensedefs {

// Synset identifiers are opaque strings chosen by the inventory
// (WordNet offsets, page titles, ...). They are stable for the whole
// run: annotations reference them verbatim.
using SynsetId = std::string;

// BCP-47-ish language code, lowercased ("en", "es", "pt-br").
using LangCode = std::string;

enum class Pos {
  Noun,
  Verb,
  Adjective,
  Adverb,
  Other,  // function words, punctuation, numbers; never annotated
};

constexpr bool is_content_pos(Pos p) { return p != Pos::Other; }

// The four content classes in a fixed canonical order. Used wherever a
// deterministic POS iteration or preference order is needed.
inline constexpr Pos kContentPos[] = {Pos::Noun, Pos::Verb, Pos::Adjective,
                                      Pos::Adverb};

std::string_view to_string(Pos p);
// Accepts NOUN/VERB/ADJ/ADV (any case) and the one-letter codes n/v/a/r.
Pos pos_from_string(std::string_view s);

// Gloss provenance. Enum order is the canonical resource order used for
// segment ordering and report rows.
enum class Resource {
  WordNet,
  Wikipedia,
  Wiktionary,
  Wikidata,
  OmegaWiki,
};

inline constexpr Resource kAllResources[] = {
    Resource::WordNet, Resource::Wikipedia, Resource::Wiktionary,
    Resource::Wikidata, Resource::OmegaWiki};

std::string_view to_string(Resource r);
// Lowercase form used for directory and file names ("wordnet", ...).
std::string_view to_file_string(Resource r);
Resource resource_from_string(std::string_view s);

struct Lexicalization {
  std::string lemma;
  LangCode language;
};

struct Synset {
  SynsetId id;
  Pos pos = Pos::Noun;
  std::vector<Lexicalization> lexicalizations;  // at least one
};

// One textual definition of `definiendum` from one resource in one
// language. (gloss_id) is unique within (resource, language).
struct Gloss {
  std::string gloss_id;
  SynsetId definiendum;
  Resource resource = Resource::WordNet;
  LangCode language;
  std::string text;  // non-empty
};

// Who produced an annotation: the joint graph stage, the
// most-common-sense backoff, or the similarity refinement.
enum class AnnotationSource {
  Babelfy,
  Mcs,
  Nasari,
};

std::string_view to_string(AnnotationSource s);
AnnotationSource annotation_source_from_string(std::string_view s);

}  // namespace sensedefs

#endif  // SENSEDEFS_TYPES_HPP
