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

#include "sensedefs/corpus_io.hpp"

#include <string>
#include <vector>

#include "doctest.h"
#include "sensedefs/error.hpp"
#include "test_support.hpp"

using sensedefs::AnnotatedGloss;
using sensedefs::Annotation;
using sensedefs::AnnotationSource;
using sensedefs::CorpusRelease;
using sensedefs::IntegrityError;
using sensedefs::LangCode;
using sensedefs::ParseError;
using sensedefs::ReleaseVersion;
using sensedefs::Resource;
using sensedefs::SenseInventory;
using sensedefs::format_score;
using sensedefs::read_corpus_xml;
using sensedefs::version_from_string;
using sensedefs::version_to_dir;
using sensedefs::version_to_string;
using sensedefs::write_corpus_xml;
namespace testing = sensedefs::testing;

namespace {

Annotation make_annotation(AnnotationSource source, std::string anchor,
                           std::size_t begin, std::size_t end, double bf,
                           double coh, std::string sense) {
  Annotation ann;
  ann.source = source;
  ann.anchor = std::move(anchor);
  ann.char_begin = begin;
  ann.char_end = end;
  ann.bf_score = bf;
  ann.coherence_score = coh;
  ann.sense = std::move(sense);
  return ann;
}

// A two-file release with every annotation source that the version
// admits, exercising escaping in both text and attribute positions.
CorpusRelease sample_release(ReleaseVersion version) {
  CorpusRelease release;
  release.version = version;

  AnnotatedGloss g1;
  g1.gloss_id = "g1";
  g1.text = "The king & the \"rook\" <here>.";
  g1.annotations.push_back(make_annotation(
      version == ReleaseVersion::Complete ? AnnotationSource::Mcs
                                          : AnnotationSource::Nasari,
      "\"rook\"", 15, 21, 0.25, 0.125, "rook_chess"));
  if (version == ReleaseVersion::HighPrecision) {
    g1.annotations.back().nasari_score = 0.875;
  }
  g1.annotations.push_back(make_annotation(
      AnnotationSource::Babelfy, "rook", 16, 20, 1.0, 0.0, "rook_chess"));

  AnnotatedGloss g2;
  g2.gloss_id = "g2";
  g2.text = "Sin anotaciones.";

  release.files[{Resource::WordNet, "en"}] = {g1};
  release.files[{Resource::Wikipedia, "es"}] = {g2};
  return release;
}

}  // namespace

TEST_CASE("version names round-trip") {
  CHECK(version_to_string(ReleaseVersion::Complete) == "COMPLETE");
  CHECK(version_to_string(ReleaseVersion::HighPrecision) == "HIGH_PRECISION");
  CHECK(version_to_dir(ReleaseVersion::Complete) == "complete");
  CHECK(version_to_dir(ReleaseVersion::HighPrecision) == "high_precision");
  CHECK(version_from_string("COMPLETE") == ReleaseVersion::Complete);
  CHECK(version_from_string("HIGH_PRECISION") ==
        ReleaseVersion::HighPrecision);
  CHECK_THROWS_AS(version_from_string("complete"), ParseError);
}

TEST_CASE("format_score renders four digits, ties to even") {
  CHECK(format_score(0.0) == "0.0000");
  CHECK(format_score(1.0) == "1.0000");
  CHECK(format_score(0.25) == "0.2500");
  CHECK(format_score(0.6) == "0.6000");
  CHECK(format_score(4.48 / 6.08) == "0.7368");
  CHECK(format_score(5.44 / 9.04) == "0.6018");
  CHECK(format_score(0.94868329805051381) == "0.9487");
  // 0.15625 and 0.21875 are exactly representable; their scaled values
  // sit exactly on the .5 boundary, so rounding goes to the even digit.
  CHECK(format_score(0.15625) == "0.1562");
  CHECK(format_score(0.21875) == "0.2188");
}

TEST_CASE("writer emits a deterministic canonical form") {
  testing::TempDir out;
  write_corpus_xml(sample_release(ReleaseVersion::Complete), out.path());

  const auto file =
      out.path() / "complete" / "wordnet" / "wordnet.en.xml";
  REQUIRE(std::filesystem::exists(file));
  CHECK(testing::read_file(file) ==
        "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        "<definitions resource=\"WordNet\" language=\"en\" "
        "version=\"COMPLETE\">\n"
        "<definition id=\"g1\">The king &amp; the \"rook\" &lt;here&gt;."
        "<annotation source=\"MCS\" anchor=\"&quot;rook&quot;\" start=\"15\" "
        "end=\"21\" bfScore=\"0.2500\" coherenceScore=\"0.1250\">rook_chess"
        "</annotation>"
        "<annotation source=\"BABELFY\" anchor=\"rook\" start=\"16\" "
        "end=\"20\" bfScore=\"1.0000\" coherenceScore=\"0.0000\">rook_chess"
        "</annotation></definition>\n"
        "</definitions>\n");

  const auto other =
      out.path() / "complete" / "wikipedia" / "wikipedia.es.xml";
  REQUIRE(std::filesystem::exists(other));
  CHECK(testing::read_file(other) ==
        "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        "<definitions resource=\"Wikipedia\" language=\"es\" "
        "version=\"COMPLETE\">\n"
        "<definition id=\"g2\">Sin anotaciones.</definition>\n"
        "</definitions>\n");
}

TEST_CASE("write and read round-trip byte-identically") {
  for (const ReleaseVersion version :
       {ReleaseVersion::Complete, ReleaseVersion::HighPrecision}) {
    CAPTURE(version_to_string(version));
    testing::TempDir out;
    const CorpusRelease release = sample_release(version);
    write_corpus_xml(release, out.path());

    const CorpusRelease parsed =
        read_corpus_xml(out.path() / version_to_dir(version));
    CHECK(parsed.version == version);
    REQUIRE(parsed.files.size() == 2);
    const auto& glosses = parsed.files.at({Resource::WordNet, "en"});
    REQUIRE(glosses.size() == 1);
    CHECK(glosses[0].gloss_id == "g1");
    CHECK(glosses[0].text == "The king & the \"rook\" <here>.");
    REQUIRE(glosses[0].annotations.size() == 2);
    CHECK(glosses[0].annotations[0].anchor == "\"rook\"");
    CHECK(glosses[0].annotations[0].char_begin == 15);
    CHECK(glosses[0].annotations[0].bf_score == doctest::Approx(0.25));
    CHECK(glosses[0].annotations[1].source == AnnotationSource::Babelfy);

    // Re-serializing the parsed release reproduces the exact bytes.
    testing::TempDir again;
    write_corpus_xml(parsed, again.path());
    for (const auto& [key, unused] : release.files) {
      const std::string stem(to_file_string(key.first));
      const auto rel = std::filesystem::path(version_to_dir(version)) / stem /
                       (stem + "." + key.second + ".xml");
      CAPTURE(rel.string());
      CHECK(testing::read_file(out.path() / rel) ==
            testing::read_file(again.path() / rel));
    }
  }
}

TEST_CASE("definitions are ordered by id and annotations by span") {
  testing::TempDir out;
  CorpusRelease release;
  release.version = ReleaseVersion::Complete;

  AnnotatedGloss b;
  b.gloss_id = "b";
  b.text = "beta beta";
  b.annotations.push_back(make_annotation(AnnotationSource::Babelfy, "beta",
                                          5, 9, 1.0, 0.5, "s_beta"));
  b.annotations.push_back(make_annotation(AnnotationSource::Babelfy, "beta",
                                          0, 4, 1.0, 0.5, "s_beta"));
  AnnotatedGloss a;
  a.gloss_id = "a";
  a.text = "alpha";
  release.files[{Resource::WordNet, "en"}] = {b, a};
  write_corpus_xml(release, out.path());

  const auto parsed = read_corpus_xml(out.path() / "complete");
  const auto& glosses = parsed.files.at({Resource::WordNet, "en"});
  REQUIRE(glosses.size() == 2);
  CHECK(glosses[0].gloss_id == "a");
  CHECK(glosses[1].gloss_id == "b");
  CHECK(glosses[1].annotations[0].char_begin == 0);
  CHECK(glosses[1].annotations[1].char_begin == 5);
}

TEST_CASE("writer enforces the version and annotation rules") {
  testing::TempDir out;

  auto single = [](Annotation ann, ReleaseVersion version) {
    CorpusRelease release;
    release.version = version;
    AnnotatedGloss gloss;
    gloss.gloss_id = "g";
    gloss.text = "word here";
    gloss.annotations.push_back(std::move(ann));
    release.files[{Resource::WordNet, "en"}] = {gloss};
    return release;
  };
  const auto plain = [&](AnnotationSource source) {
    return make_annotation(source, "word", 0, 4, 0.9, 0.5, "s1");
  };

  SUBCASE("NASARI may not appear in the complete tier") {
    auto ann = plain(AnnotationSource::Nasari);
    ann.nasari_score = 0.9;
    CHECK_THROWS_AS(
        write_corpus_xml(single(ann, ReleaseVersion::Complete), out.path()),
        IntegrityError);
  }
  SUBCASE("MCS may not appear in the high-precision tier") {
    CHECK_THROWS_AS(
        write_corpus_xml(
            single(plain(AnnotationSource::Mcs), ReleaseVersion::HighPrecision),
            out.path()),
        IntegrityError);
  }
  SUBCASE("nasariScore is mandatory for NASARI annotations") {
    CHECK_THROWS_AS(write_corpus_xml(single(plain(AnnotationSource::Nasari),
                                            ReleaseVersion::HighPrecision),
                                     out.path()),
                    IntegrityError);
  }
  SUBCASE("nasariScore is forbidden elsewhere") {
    auto ann = plain(AnnotationSource::Babelfy);
    ann.nasari_score = 0.9;
    CHECK_THROWS_AS(
        write_corpus_xml(single(ann, ReleaseVersion::Complete), out.path()),
        IntegrityError);
  }
  SUBCASE("sense must be present") {
    auto ann = plain(AnnotationSource::Babelfy);
    ann.sense.clear();
    CHECK_THROWS_AS(
        write_corpus_xml(single(ann, ReleaseVersion::Complete), out.path()),
        IntegrityError);
  }
  SUBCASE("scores must lie in the unit interval") {
    auto ann = plain(AnnotationSource::Babelfy);
    ann.bf_score = 1.5;
    CHECK_THROWS_AS(
        write_corpus_xml(single(ann, ReleaseVersion::Complete), out.path()),
        IntegrityError);
  }
  SUBCASE("span must fit the definition text") {
    auto ann = plain(AnnotationSource::Babelfy);
    ann.char_end = 99;
    CHECK_THROWS_AS(
        write_corpus_xml(single(ann, ReleaseVersion::Complete), out.path()),
        IntegrityError);
  }
  SUBCASE("anchor must match the text at its span") {
    auto ann = plain(AnnotationSource::Babelfy);
    ann.anchor = "held";
    CHECK_THROWS_AS(
        write_corpus_xml(single(ann, ReleaseVersion::Complete), out.path()),
        IntegrityError);
  }
  SUBCASE("definition text must be non-empty") {
    CorpusRelease release;
    release.version = ReleaseVersion::Complete;
    AnnotatedGloss gloss;
    gloss.gloss_id = "g";
    release.files[{Resource::WordNet, "en"}] = {gloss};
    CHECK_THROWS_AS(write_corpus_xml(release, out.path()), IntegrityError);
  }
  SUBCASE("gloss ids must be unique within a file") {
    CorpusRelease release;
    release.version = ReleaseVersion::Complete;
    AnnotatedGloss gloss;
    gloss.gloss_id = "g";
    gloss.text = "word";
    release.files[{Resource::WordNet, "en"}] = {gloss, gloss};
    CHECK_THROWS_AS(write_corpus_xml(release, out.path()), IntegrityError);
  }
}

TEST_CASE("reader accepts apostrophe entities the writer never emits") {
  testing::TempDir dir;
  dir.write("complete/wordnet/wordnet.en.xml",
            "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
            "<definitions resource=\"WordNet\" language=\"en\" "
            "version=\"COMPLETE\">\n"
            "<definition id=\"g\">the rook&apos;s file</definition>\n"
            "</definitions>\n");
  const auto release = read_corpus_xml(dir.path() / "complete");
  CHECK(release.files.at({Resource::WordNet, "en"})[0].text ==
        "the rook's file");
}

TEST_CASE("reader rejects structural deviations") {
  testing::TempDir dir;
  const std::string good =
      "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      "<definitions resource=\"WordNet\" language=\"en\" "
      "version=\"COMPLETE\">\n"
      "<definition id=\"g\">word here</definition>\n"
      "</definitions>\n";

  SUBCASE("well-formed baseline parses") {
    dir.write("complete/wordnet/wordnet.en.xml", good);
    CHECK(read_corpus_xml(dir.path() / "complete").files.size() == 1);
  }
  SUBCASE("filename must match the resource and language attributes") {
    dir.write("complete/wordnet/wordnet.es.xml", good);
    CHECK_THROWS(read_corpus_xml(dir.path() / "complete"));
  }
  SUBCASE("unexpected attribute") {
    std::string bad = good;
    bad.replace(bad.find("id=\"g\""), 6, "id=\"g\" extra=\"1\"");
    dir.write("complete/wordnet/wordnet.en.xml", bad);
    CHECK_THROWS_AS(read_corpus_xml(dir.path() / "complete"), ParseError);
  }
  SUBCASE("definitions out of order") {
    std::string bad = good;
    bad.replace(bad.find("<definition id=\"g\">word here</definition>\n"),
                std::string("<definition id=\"g\">word here</definition>\n")
                    .size(),
                "<definition id=\"g2\">word here</definition>\n"
                "<definition id=\"g1\">word here</definition>\n");
    dir.write("complete/wordnet/wordnet.en.xml", bad);
    CHECK_THROWS_AS(read_corpus_xml(dir.path() / "complete"), ParseError);
  }
  SUBCASE("trailing garbage") {
    dir.write("complete/wordnet/wordnet.en.xml", good + "tail");
    CHECK_THROWS_AS(read_corpus_xml(dir.path() / "complete"), ParseError);
  }
  SUBCASE("not XML at all") {
    dir.write("complete/wordnet/wordnet.en.xml", "plain text\n");
    CHECK_THROWS_AS(read_corpus_xml(dir.path() / "complete"), ParseError);
  }
  SUBCASE("mixed versions in one tree") {
    dir.write("complete/wordnet/wordnet.en.xml", good);
    std::string hp = good;
    hp.replace(hp.find("COMPLETE"), 8, "HIGH_PRECISION");
    dir.write("complete/wikipedia/wikipedia.en.xml",
              [&] {
                std::string s = hp;
                auto pos = s.find("WordNet");
                s.replace(pos, 7, "Wikipedia");
                return s;
              }());
    CHECK_THROWS_AS(read_corpus_xml(dir.path() / "complete"), IntegrityError);
  }
}

TEST_CASE("reading an empty tier directory yields an empty release") {
  testing::TempDir dir;
  std::filesystem::create_directories(dir.path() / "high_precision");
  const auto release = read_corpus_xml(dir.path() / "high_precision");
  CHECK(release.version == ReleaseVersion::HighPrecision);
  CHECK(release.files.empty());
}

TEST_CASE("ingest validates raw glosses against the inventory") {
  const SenseInventory inventory =
      SenseInventory::load(testing::chess_mini_dir());
  const auto glosses = sensedefs::ingest_raw_glosses(
      testing::chess_mini_dir() / "glosses.tsv", inventory);
  CHECK(glosses.size() == 7);

  testing::TempDir dir;
  const auto bad =
      dir.write("bad.tsv", "gx\tno_such_synset\tWordNet\ten\tText.\n");
  CHECK_THROWS_AS(sensedefs::ingest_raw_glosses(bad, inventory),
                  IntegrityError);
}
