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

#ifndef SENSEDEFS_CORPUS_IO_HPP
#define SENSEDEFS_CORPUS_IO_HPP

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sensedefs/inventory.hpp"
#include "sensedefs/types.hpp"

namespace sensedefs {

enum class ReleaseVersion { Complete, HighPrecision };

std::string version_to_string(ReleaseVersion version);
ReleaseVersion version_from_string(std::string_view text);
// Directory name under the output root: complete/ or high_precision/.
std::string version_to_dir(ReleaseVersion version);

// One annotated span of a definition. Offsets are Unicode code point
// positions into the definition text, half-open; the anchor is the
// verbatim text slice at that position.
struct Annotation {
  AnnotationSource source = AnnotationSource::Babelfy;
  std::string anchor;
  std::size_t char_begin = 0;
  std::size_t char_end = 0;
  double bf_score = 0.0;
  double coherence_score = 0.0;
  std::optional<double> nasari_score;
  SynsetId sense;
};

struct AnnotatedGloss {
  std::string gloss_id;
  std::string text;
  std::vector<Annotation> annotations;
};

// One release tier: annotated glosses partitioned by resource and then
// language, mirroring the on-disk layout
// <version>/<resource>/<resource>.<lang>.xml.
struct CorpusRelease {
  ReleaseVersion version = ReleaseVersion::Complete;
  std::map<std::pair<Resource, LangCode>, std::vector<AnnotatedGloss>> files;
};

// Renders a score with exactly 4 fractional digits, ties to even.
std::string format_score(double value);

// Serializes a release under out_dir. Definitions are ordered by gloss
// id, annotations by start offset, attributes in a fixed order, scores
// via format_score: the same release always produces the same bytes.
// Violations of the version rules (NASARI in COMPLETE, MCS in
// HIGH_PRECISION), a nasariScore on a non-NASARI annotation, or an
// anchor that does not match its recorded span are integrity errors.
void write_corpus_xml(const CorpusRelease& release,
                      const std::filesystem::path& out_dir);

// Parses a release directory produced by write_corpus_xml (or files
// conforming to the same schema). Strict: structural deviations raise a
// parse error naming the offending element or attribute, and the same
// integrity rules as writing apply.
CorpusRelease read_corpus_xml(const std::filesystem::path& version_dir);

// Loads and validates a raw gloss corpus against the inventory.
std::vector<Gloss> ingest_raw_glosses(const std::filesystem::path& path,
                                      const SenseInventory& inventory);

}  // namespace sensedefs

#endif  // SENSEDEFS_CORPUS_IO_HPP
