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

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <tuple>

#include "sensedefs/error.hpp"
#include "sensedefs/unicode.hpp"

namespace sensedefs {

namespace {

constexpr std::string_view kXmlDeclaration =
    "<?xml version=\"1.0\" encoding=\"UTF-8\"?>";

void append_escaped_text(std::string& out, std::string_view text) {
  for (char c : text) {
    switch (c) {
      case '&':
        out.append("&amp;");
        break;
      case '<':
        out.append("&lt;");
        break;
      case '>':
        out.append("&gt;");
        break;
      default:
        out.push_back(c);
    }
  }
}

void append_escaped_attr(std::string& out, std::string_view value) {
  for (char c : value) {
    switch (c) {
      case '&':
        out.append("&amp;");
        break;
      case '<':
        out.append("&lt;");
        break;
      case '>':
        out.append("&gt;");
        break;
      case '"':
        out.append("&quot;");
        break;
      default:
        out.push_back(c);
    }
  }
}

void append_attr(std::string& out, std::string_view name,
                 std::string_view value) {
  out.push_back(' ');
  out.append(name);
  out.append("=\"");
  append_escaped_attr(out, value);
  out.push_back('"');
}

void validate_annotation(const AnnotatedGloss& gloss, const Annotation& ann,
                         ReleaseVersion version) {
  if (version == ReleaseVersion::Complete &&
      ann.source == AnnotationSource::Nasari) {
    throw IntegrityError("NASARI annotation in COMPLETE release, gloss '" +
                         gloss.gloss_id + "'");
  }
  if (version == ReleaseVersion::HighPrecision &&
      ann.source == AnnotationSource::Mcs) {
    throw IntegrityError("MCS annotation in HIGH_PRECISION release, gloss '" +
                         gloss.gloss_id + "'");
  }
  if (ann.nasari_score.has_value() !=
      (ann.source == AnnotationSource::Nasari)) {
    throw IntegrityError("nasariScore presence contradicts source on gloss '" +
                         gloss.gloss_id + "'");
  }
  if (ann.sense.empty()) {
    throw IntegrityError("annotation without sense on gloss '" +
                         gloss.gloss_id + "'");
  }
  if (!(ann.bf_score >= 0.0 && ann.bf_score <= 1.0) ||
      !(ann.coherence_score >= 0.0 && ann.coherence_score <= 1.0)) {
    throw IntegrityError("score out of range on gloss '" + gloss.gloss_id +
                         "'");
  }
  if (ann.char_end <= ann.char_begin ||
      ann.char_end > uni::length(gloss.text)) {
    throw IntegrityError("bad annotation span on gloss '" + gloss.gloss_id +
                         "'");
  }
  if (uni::substr(gloss.text, ann.char_begin, ann.char_end) != ann.anchor) {
    throw IntegrityError("anchor '" + ann.anchor +
                         "' does not match definition text of gloss '" +
                         gloss.gloss_id + "' at its recorded span");
  }
}

std::string render_file(const ReleaseVersion version, const Resource resource,
                        const LangCode& language,
                        std::vector<AnnotatedGloss> glosses) {
  std::sort(glosses.begin(), glosses.end(),
            [](const AnnotatedGloss& a, const AnnotatedGloss& b) {
              return a.gloss_id < b.gloss_id;
            });
  std::string out;
  out.append(kXmlDeclaration);
  out.push_back('\n');
  out.append("<definitions");
  append_attr(out, "resource", to_string(resource));
  append_attr(out, "language", language);
  append_attr(out, "version", version_to_string(version));
  out.append(">\n");
  for (std::size_t i = 0; i < glosses.size(); ++i) {
    AnnotatedGloss& gloss = glosses[i];
    if (i > 0 && glosses[i - 1].gloss_id == gloss.gloss_id) {
      throw IntegrityError("duplicate definition id '" + gloss.gloss_id +
                           "' in " + std::string(to_string(resource)) + "/" +
                           language);
    }
    if (gloss.text.empty()) {
      throw IntegrityError("empty definition text for gloss '" +
                           gloss.gloss_id + "'");
    }
    std::stable_sort(gloss.annotations.begin(), gloss.annotations.end(),
                     [](const Annotation& a, const Annotation& b) {
                       return std::tie(a.char_begin, a.char_end) <
                              std::tie(b.char_begin, b.char_end);
                     });
    out.append("<definition");
    append_attr(out, "id", gloss.gloss_id);
    out.push_back('>');
    append_escaped_text(out, gloss.text);
    for (const Annotation& ann : gloss.annotations) {
      validate_annotation(gloss, ann, version);
      out.append("<annotation");
      append_attr(out, "source", to_string(ann.source));
      append_attr(out, "anchor", ann.anchor);
      append_attr(out, "start", std::to_string(ann.char_begin));
      append_attr(out, "end", std::to_string(ann.char_end));
      append_attr(out, "bfScore", format_score(ann.bf_score));
      append_attr(out, "coherenceScore", format_score(ann.coherence_score));
      if (ann.nasari_score.has_value()) {
        append_attr(out, "nasariScore", format_score(*ann.nasari_score));
      }
      out.push_back('>');
      append_escaped_text(out, ann.sense);
      out.append("</annotation>");
    }
    out.append("</definition>\n");
  }
  out.append("</definitions>\n");
  return out;
}

// Minimal cursor parser for exactly the schema the writer emits.
class XmlCursor {
 public:
  XmlCursor(std::string_view content, const std::filesystem::path& path)
      : content_(content), path_(path) {}

  bool consume(std::string_view literal) {
    if (content_.substr(pos_, literal.size()) != literal) {
      return false;
    }
    pos_ += literal.size();
    return true;
  }

  void expect(std::string_view literal, std::string_view what) {
    if (!consume(literal)) {
      fail("expected " + std::string(what));
    }
  }

  bool peek(std::string_view literal) const {
    return content_.substr(pos_, literal.size()) == literal;
  }

  bool at_end() const { return pos_ >= content_.size(); }

  // Parses `name="value"` pairs up to the closing '>'.
  std::map<std::string, std::string> attributes(std::string_view element) {
    std::map<std::string, std::string> attrs;
    for (;;) {
      if (consume(">")) {
        return attrs;
      }
      expect(" ", "attribute separator in <" + std::string(element) + ">");
      while (consume(" ")) {
      }
      std::string name;
      while (pos_ < content_.size() && content_[pos_] != '=' &&
             content_[pos_] != '>' && content_[pos_] != ' ') {
        name.push_back(content_[pos_++]);
      }
      if (name.empty()) {
        fail("malformed attribute in <" + std::string(element) + ">");
      }
      expect("=\"", "attribute value for '" + name + "'");
      std::string raw;
      while (pos_ < content_.size() && content_[pos_] != '"') {
        if (content_[pos_] == '<') {
          fail("raw '<' in attribute '" + name + "'");
        }
        raw.push_back(content_[pos_++]);
      }
      expect("\"", "closing quote for attribute '" + name + "'");
      if (!attrs.emplace(std::move(name), unescape(raw)).second) {
        fail("repeated attribute in <" + std::string(element) + ">");
      }
    }
  }

  // Raw text up to the next '<'; the element structure around it decides
  // whether that is content or an error.
  std::string text_until_tag() {
    std::string raw;
    while (pos_ < content_.size() && content_[pos_] != '<') {
      raw.push_back(content_[pos_++]);
    }
    return unescape(raw);
  }

  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(path_.string() + ": " + message + " at byte " +
                     std::to_string(pos_));
  }

 private:
  std::string unescape(std::string_view raw) {
    std::string out;
    out.reserve(raw.size());
    for (std::size_t i = 0; i < raw.size(); ++i) {
      if (raw[i] != '&') {
        out.push_back(raw[i]);
        continue;
      }
      const std::size_t end = raw.find(';', i);
      if (end == std::string_view::npos) {
        fail("unterminated character entity");
      }
      const std::string_view entity = raw.substr(i + 1, end - i - 1);
      if (entity == "amp") {
        out.push_back('&');
      } else if (entity == "lt") {
        out.push_back('<');
      } else if (entity == "gt") {
        out.push_back('>');
      } else if (entity == "quot") {
        out.push_back('"');
      } else if (entity == "apos") {
        out.push_back('\'');
      } else {
        fail("unknown character entity '&" + std::string(entity) + ";'");
      }
      i = end;
    }
    return out;
  }

  std::string_view content_;
  std::size_t pos_ = 0;
  const std::filesystem::path& path_;
};

std::string require_attr(const std::map<std::string, std::string>& attrs,
                         const std::string& name, std::string_view element,
                         XmlCursor& cursor) {
  auto it = attrs.find(name);
  if (it == attrs.end()) {
    cursor.fail("missing attribute '" + name + "' in <" +
                std::string(element) + ">");
  }
  return it->second;
}

std::size_t parse_offset(const std::string& value, const std::string& name,
                         XmlCursor& cursor) {
  if (value.empty() ||
      value.find_first_not_of("0123456789") != std::string::npos) {
    cursor.fail("attribute '" + name + "' is not a non-negative integer");
  }
  return static_cast<std::size_t>(std::stoull(value));
}

double parse_score(const std::string& value, const std::string& name,
                   XmlCursor& cursor) {
  const char* begin = value.c_str();
  char* end = nullptr;
  const double parsed = std::strtod(begin, &end);
  if (value.empty() || end != begin + value.size() || !std::isfinite(parsed)) {
    cursor.fail("attribute '" + name + "' is not a finite number");
  }
  return parsed;
}

struct ParsedFile {
  Resource resource;
  LangCode language;
  ReleaseVersion version;
  std::vector<AnnotatedGloss> glosses;
};

ParsedFile parse_release_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ParseError("cannot open '" + path.string() + "'");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  const std::string content = buffer.str();

  XmlCursor cursor(content, path);
  cursor.expect(kXmlDeclaration, "XML declaration");
  cursor.expect("\n", "newline after XML declaration");
  cursor.expect("<definitions", "<definitions> root element");
  auto root_attrs = cursor.attributes("definitions");
  cursor.expect("\n", "newline after <definitions>");

  ParsedFile file;
  file.resource = resource_from_string(
      require_attr(root_attrs, "resource", "definitions", cursor));
  file.language = require_attr(root_attrs, "language", "definitions", cursor);
  file.version = version_from_string(
      require_attr(root_attrs, "version", "definitions", cursor));
  if (root_attrs.size() != 3) {
    cursor.fail("unexpected attribute in <definitions>");
  }
  if (file.language.empty()) {
    cursor.fail("empty language in <definitions>");
  }

  while (!cursor.consume("</definitions>\n")) {
    cursor.expect("<definition", "<definition> element");
    auto def_attrs = cursor.attributes("definition");
    AnnotatedGloss gloss;
    gloss.gloss_id = require_attr(def_attrs, "id", "definition", cursor);
    if (def_attrs.size() != 1) {
      cursor.fail("unexpected attribute in <definition>");
    }
    gloss.text = cursor.text_until_tag();
    if (gloss.text.empty()) {
      cursor.fail("empty definition text for id '" + gloss.gloss_id + "'");
    }
    while (cursor.consume("<annotation")) {
      auto attrs = cursor.attributes("annotation");
      Annotation ann;
      ann.source = annotation_source_from_string(
          require_attr(attrs, "source", "annotation", cursor));
      ann.anchor = require_attr(attrs, "anchor", "annotation", cursor);
      ann.char_begin = parse_offset(
          require_attr(attrs, "start", "annotation", cursor), "start", cursor);
      ann.char_end = parse_offset(
          require_attr(attrs, "end", "annotation", cursor), "end", cursor);
      ann.bf_score =
          parse_score(require_attr(attrs, "bfScore", "annotation", cursor),
                      "bfScore", cursor);
      ann.coherence_score = parse_score(
          require_attr(attrs, "coherenceScore", "annotation", cursor),
          "coherenceScore", cursor);
      std::size_t expected = 6;
      if (attrs.count("nasariScore") != 0) {
        ann.nasari_score =
            parse_score(attrs.at("nasariScore"), "nasariScore", cursor);
        ++expected;
      }
      if (attrs.size() != expected) {
        cursor.fail("unexpected attribute in <annotation>");
      }
      ann.sense = cursor.text_until_tag();
      cursor.expect("</annotation>", "closing </annotation>");
      if (!gloss.annotations.empty()) {
        const Annotation& prev = gloss.annotations.back();
        if (std::tie(prev.char_begin, prev.char_end) >
            std::tie(ann.char_begin, ann.char_end)) {
          cursor.fail("annotations out of order in definition '" +
                      gloss.gloss_id + "'");
        }
      }
      validate_annotation(gloss, ann, file.version);
      gloss.annotations.push_back(std::move(ann));
    }
    cursor.expect("</definition>", "closing </definition>");
    cursor.expect("\n", "newline after </definition>");
    if (!file.glosses.empty() &&
        file.glosses.back().gloss_id >= gloss.gloss_id) {
      cursor.fail("definition ids out of order at '" + gloss.gloss_id + "'");
    }
    file.glosses.push_back(std::move(gloss));
  }
  if (!cursor.at_end()) {
    cursor.fail("trailing content after </definitions>");
  }
  return file;
}

}  // namespace

std::string version_to_string(ReleaseVersion version) {
  return version == ReleaseVersion::Complete ? "COMPLETE" : "HIGH_PRECISION";
}

ReleaseVersion version_from_string(std::string_view text) {
  if (text == "COMPLETE") {
    return ReleaseVersion::Complete;
  }
  if (text == "HIGH_PRECISION") {
    return ReleaseVersion::HighPrecision;
  }
  throw ParseError("unknown release version '" + std::string(text) + "'");
}

std::string version_to_dir(ReleaseVersion version) {
  return version == ReleaseVersion::Complete ? "complete" : "high_precision";
}

std::string format_score(double value) {
  // llrint under the default rounding mode gives ties-to-even, and 4
  // decimal digits survive a double round-trip exactly.
  const long long scaled = std::llrint(value * 10000.0);
  const bool negative = scaled < 0;
  const unsigned long long magnitude =
      negative ? -static_cast<unsigned long long>(scaled)
               : static_cast<unsigned long long>(scaled);
  std::string out;
  if (negative) {
    out.push_back('-');
  }
  out.append(std::to_string(magnitude / 10000));
  out.push_back('.');
  const std::string fraction = std::to_string(magnitude % 10000);
  out.append(4 - fraction.size(), '0');
  out.append(fraction);
  return out;
}

void write_corpus_xml(const CorpusRelease& release,
                      const std::filesystem::path& out_dir) {
  const std::filesystem::path root = out_dir / version_to_dir(release.version);
  std::filesystem::create_directories(root);
  for (const auto& [key, glosses] : release.files) {
    const auto& [resource, language] = key;
    if (language.empty()) {
      throw IntegrityError("release file with empty language for resource " +
                           std::string(to_string(resource)));
    }
    const std::string stem(to_file_string(resource));
    const std::filesystem::path dir = root / stem;
    std::filesystem::create_directories(dir);
    const std::filesystem::path path =
        dir / (stem + "." + language + ".xml");
    const std::string rendered =
        render_file(release.version, resource, language, glosses);
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
      throw Error("cannot write '" + path.string() + "'");
    }
    out.write(rendered.data(),
              static_cast<std::streamsize>(rendered.size()));
    if (!out) {
      throw Error("short write to '" + path.string() + "'");
    }
  }
}

CorpusRelease read_corpus_xml(const std::filesystem::path& version_dir) {
  if (!std::filesystem::is_directory(version_dir)) {
    throw ParseError("release directory '" + version_dir.string() +
                     "' does not exist");
  }
  std::vector<std::filesystem::path> files;
  for (const auto& entry :
       std::filesystem::recursive_directory_iterator(version_dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".xml") {
      files.push_back(entry.path());
    }
  }
  std::sort(files.begin(), files.end());

  CorpusRelease release;
  bool version_seen = false;
  for (const std::filesystem::path& path : files) {
    ParsedFile file = parse_release_file(path);
    const std::string stem(to_file_string(file.resource));
    if (path.filename().string() != stem + "." + file.language + ".xml" ||
        path.parent_path().filename().string() != stem) {
      throw IntegrityError("file '" + path.string() +
                           "' does not match its resource/language "
                           "attributes");
    }
    if (!version_seen) {
      release.version = file.version;
      version_seen = true;
    } else if (release.version != file.version) {
      throw IntegrityError("mixed release versions under '" +
                           version_dir.string() + "'");
    }
    auto [slot, inserted] = release.files.emplace(
        std::make_pair(file.resource, file.language), std::move(file.glosses));
    if (!inserted) {
      throw IntegrityError("duplicate release file for " +
                           std::string(to_string(file.resource)) + "/" +
                           file.language);
    }
  }
  if (!version_seen) {
    release.version = version_dir.filename().string() == "high_precision"
                          ? ReleaseVersion::HighPrecision
                          : ReleaseVersion::Complete;
  }
  return release;
}

std::vector<Gloss> ingest_raw_glosses(const std::filesystem::path& path,
                                      const SenseInventory& inventory) {
  std::vector<Gloss> glosses = parse_glosses_tsv(path);
  for (const Gloss& gloss : glosses) {
    if (inventory.find_synset(gloss.definiendum) == nullptr) {
      throw IntegrityError("gloss '" + gloss.gloss_id +
                           "' references unknown synset '" +
                           gloss.definiendum + "'");
    }
  }
  return glosses;
}

}  // namespace sensedefs
