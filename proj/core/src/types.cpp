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

#include "sensedefs/types.hpp"

#include <algorithm>
#include <cctype>

#include "sensedefs/error.hpp"

namespace sensedefs {

namespace {

std::string ascii_upper(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return std::toupper(c); });
  return out;
}

}  // namespace

std::string_view to_string(Pos p) {
  switch (p) {
    case Pos::Noun:
      return "NOUN";
    case Pos::Verb:
      return "VERB";
    case Pos::Adjective:
      return "ADJ";
    case Pos::Adverb:
      return "ADV";
    case Pos::Other:
      return "OTHER";
  }
  return "OTHER";
}

Pos pos_from_string(std::string_view s) {
  const std::string u = ascii_upper(s);
  if (u == "NOUN" || u == "N") return Pos::Noun;
  if (u == "VERB" || u == "V") return Pos::Verb;
  if (u == "ADJ" || u == "ADJECTIVE" || u == "A") return Pos::Adjective;
  if (u == "ADV" || u == "ADVERB" || u == "R") return Pos::Adverb;
  if (u == "OTHER") return Pos::Other;
  throw ParseError("unknown part-of-speech tag: '" + std::string(s) + "'");
}

std::string_view to_string(Resource r) {
  switch (r) {
    case Resource::WordNet:
      return "WordNet";
    case Resource::Wikipedia:
      return "Wikipedia";
    case Resource::Wiktionary:
      return "Wiktionary";
    case Resource::Wikidata:
      return "Wikidata";
    case Resource::OmegaWiki:
      return "OmegaWiki";
  }
  return "WordNet";
}

std::string_view to_file_string(Resource r) {
  switch (r) {
    case Resource::WordNet:
      return "wordnet";
    case Resource::Wikipedia:
      return "wikipedia";
    case Resource::Wiktionary:
      return "wiktionary";
    case Resource::Wikidata:
      return "wikidata";
    case Resource::OmegaWiki:
      return "omegawiki";
  }
  return "wordnet";
}

Resource resource_from_string(std::string_view s) {
  const std::string u = ascii_upper(s);
  if (u == "WORDNET") return Resource::WordNet;
  if (u == "WIKIPEDIA") return Resource::Wikipedia;
  if (u == "WIKTIONARY") return Resource::Wiktionary;
  if (u == "WIKIDATA") return Resource::Wikidata;
  if (u == "OMEGAWIKI") return Resource::OmegaWiki;
  throw ParseError("unknown resource: '" + std::string(s) + "'");
}

std::string_view to_string(AnnotationSource s) {
  switch (s) {
    case AnnotationSource::Babelfy:
      return "BABELFY";
    case AnnotationSource::Mcs:
      return "MCS";
    case AnnotationSource::Nasari:
      return "NASARI";
  }
  return "BABELFY";
}

AnnotationSource annotation_source_from_string(std::string_view s) {
  if (s == "BABELFY") return AnnotationSource::Babelfy;
  if (s == "MCS") return AnnotationSource::Mcs;
  if (s == "NASARI") return AnnotationSource::Nasari;
  throw ParseError("unknown annotation source: '" + std::string(s) + "'");
}

}  // namespace sensedefs
