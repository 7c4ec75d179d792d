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

#include "sensedefs/evalstats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "sensedefs/error.hpp"
#include "sensedefs/tsv.hpp"
#include "sensedefs/unicode.hpp"

namespace sensedefs {

namespace {

std::string ratio_or_dash(const std::optional<double>& value) {
  return value.has_value() ? format_score(*value) : "-";
}

Pos sense_pos(const SenseInventory& inventory, const SynsetId& sense) {
  const Synset* synset = inventory.find_synset(sense);
  if (synset == nullptr) {
    throw IntegrityError("annotated sense '" + sense +
                         "' is not in the inventory");
  }
  return synset->pos;
}

void tally_release(const CorpusRelease& release,
                   const SenseInventory& inventory,
                   std::map<LangCode, SourceCounts>& by_language,
                   std::map<Pos, SourceCounts>& by_pos, std::size_t& total) {
  for (const auto& [key, glosses] : release.files) {
    for (const AnnotatedGloss& gloss : glosses) {
      for (const Annotation& ann : gloss.annotations) {
        by_language[key.second].add(ann.source);
        by_pos[sense_pos(inventory, ann.sense)].add(ann.source);
        ++total;
      }
    }
  }
}

std::size_t count_cell(const std::map<Pos, SourceCounts>& by_pos, Pos pos) {
  auto it = by_pos.find(pos);
  return it == by_pos.end() ? 0 : it->second.total();
}

std::optional<double> safe_ratio(std::size_t numerator,
                                 std::size_t denominator) {
  if (denominator == 0) {
    return std::nullopt;
  }
  return static_cast<double>(numerator) / static_cast<double>(denominator);
}

// Ranks the nonzero dimensions of a vector: heaviest weight first, ties
// to the smaller index. rank[dim] is 1-based, 0 for zero dimensions.
std::vector<std::size_t> feature_ranks(const std::vector<double>& values) {
  std::vector<std::size_t> nonzero;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] != 0.0) {
      nonzero.push_back(i);
    }
  }
  std::sort(nonzero.begin(), nonzero.end(),
            [&values](std::size_t a, std::size_t b) {
              if (values[a] != values[b]) {
                return values[a] > values[b];
              }
              return a < b;
            });
  std::vector<std::size_t> rank(values.size(), 0);
  for (std::size_t i = 0; i < nonzero.size(); ++i) {
    rank[nonzero[i]] = i + 1;
  }
  return rank;
}

struct Cell {
  std::string text;
  bool right = false;
};

// Renders rows of equal arity as a space-padded table.
std::string render_table(const std::vector<std::vector<Cell>>& rows) {
  std::vector<std::size_t> widths;
  for (const auto& row : rows) {
    widths.resize(std::max(widths.size(), row.size()), 0);
    for (std::size_t c = 0; c < row.size(); ++c) {
      widths[c] = std::max(widths[c], row[c].text.size());
    }
  }
  std::string out;
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c > 0) {
        out.append("  ");
      }
      const std::size_t pad = widths[c] - row[c].text.size();
      if (row[c].right) {
        out.append(pad, ' ');
      }
      out.append(row[c].text);
      if (!row[c].right && c + 1 < row.size()) {
        out.append(pad, ' ');
      }
    }
    out.push_back('\n');
  }
  return out;
}

Cell l(std::string text) { return {std::move(text), false}; }
Cell r(std::string text) { return {std::move(text), true}; }
Cell r(std::size_t n) { return {std::to_string(n), true}; }

}  // namespace

void SourceCounts::add(AnnotationSource source) {
  switch (source) {
    case AnnotationSource::Babelfy:
      ++babelfy;
      break;
    case AnnotationSource::Mcs:
      ++mcs;
      break;
    case AnnotationSource::Nasari:
      ++nasari;
      break;
  }
}

StatsReport compute_stats(const CorpusRelease& complete,
                          const CorpusRelease& high_precision,
                          const SenseInventory& inventory) {
  // Both tiers must present the same definitions; only annotations may
  // differ.
  if (complete.files.size() != high_precision.files.size()) {
    throw IntegrityError("release tiers cover different file sets");
  }
  auto hp_it = high_precision.files.begin();
  for (const auto& [key, glosses] : complete.files) {
    if (hp_it->first != key || hp_it->second.size() != glosses.size()) {
      throw IntegrityError("release tiers cover different gloss sets");
    }
    for (std::size_t i = 0; i < glosses.size(); ++i) {
      if (glosses[i].gloss_id != hp_it->second[i].gloss_id ||
          glosses[i].text != hp_it->second[i].text) {
        throw IntegrityError("gloss '" + glosses[i].gloss_id +
                             "' differs between release tiers");
      }
    }
    ++hp_it;
  }

  StatsReport report;
  for (const auto& [key, glosses] : complete.files) {
    report.gloss_counts[key.first][key.second] += glosses.size();
    report.gloss_total += glosses.size();
  }
  tally_release(complete, inventory, report.language_before,
                report.pos_before, report.total_before);
  tally_release(high_precision, inventory, report.language_after,
                report.pos_after, report.total_after);
  if (report.total_after > report.total_before) {
    throw IntegrityError(
        "high-precision tier has more annotations than the complete tier");
  }

  report.annotations_per_gloss =
      report.gloss_total == 0
          ? 0.0
          : static_cast<double>(report.total_before) /
                static_cast<double>(report.gloss_total);
  report.coverage = safe_ratio(report.total_after, report.total_before);
  for (Pos pos : kContentPos) {
    report.pos_coverage[pos] = safe_ratio(count_cell(report.pos_after, pos),
                                          count_cell(report.pos_before, pos));
  }
  return report;
}

std::string render_stats_tsv(const StatsReport& report) {
  std::string out;
  auto line = [&out](std::initializer_list<std::string> fields) {
    bool first = true;
    for (const std::string& field : fields) {
      if (!first) {
        out.push_back('\t');
      }
      out.append(field);
      first = false;
    }
    out.push_back('\n');
  };

  for (const auto& [resource, languages] : report.gloss_counts) {
    for (const auto& [language, count] : languages) {
      line({"glosses", std::string(to_string(resource)), language,
            std::to_string(count)});
    }
  }
  for (const auto* stage :
       {&report.language_before, &report.language_after}) {
    const char* tag = stage == &report.language_before ? "before" : "after";
    for (const auto& [language, counts] : *stage) {
      line({"annotations_language", tag, language,
            std::to_string(counts.babelfy), std::to_string(counts.mcs),
            std::to_string(counts.nasari), std::to_string(counts.total())});
    }
  }
  for (const auto* stage : {&report.pos_before, &report.pos_after}) {
    const char* tag = stage == &report.pos_before ? "before" : "after";
    for (Pos pos : kContentPos) {
      auto it = stage->find(pos);
      const SourceCounts counts =
          it == stage->end() ? SourceCounts{} : it->second;
      line({"annotations_pos", tag, std::string(to_string(pos)),
            std::to_string(counts.babelfy), std::to_string(counts.mcs),
            std::to_string(counts.nasari), std::to_string(counts.total())});
    }
  }
  line({"summary", "glosses", std::to_string(report.gloss_total)});
  line({"summary", "annotations_before", std::to_string(report.total_before)});
  line({"summary", "annotations_after", std::to_string(report.total_after)});
  line({"summary", "annotations_per_gloss",
        format_score(report.annotations_per_gloss)});
  line({"summary", "coverage", ratio_or_dash(report.coverage)});
  for (Pos pos : kContentPos) {
    auto it = report.pos_coverage.find(pos);
    line({"summary", "coverage_" + std::string(to_string(pos)),
          ratio_or_dash(it == report.pos_coverage.end() ? std::nullopt
                                                        : it->second)});
  }
  return out;
}

std::string render_stats_text(const StatsReport& report) {
  std::string out;

  out.append("Glosses by resource and language\n");
  {
    std::vector<std::vector<Cell>> rows;
    rows.push_back({l("resource"), l("language"), r("glosses")});
    for (const auto& [resource, languages] : report.gloss_counts) {
      for (const auto& [language, count] : languages) {
        rows.push_back({l(std::string(to_string(resource))), l(language),
                        r(count)});
      }
    }
    rows.push_back({l("total"), l(""), r(report.gloss_total)});
    out.append(render_table(rows));
  }

  for (const auto* stage :
       {&report.language_before, &report.language_after}) {
    const bool before = stage == &report.language_before;
    out.append(before ? "\nAnnotations by language (complete)\n"
                      : "\nAnnotations by language (high precision)\n");
    std::vector<std::vector<Cell>> rows;
    rows.push_back({l("language"), r("BABELFY"), r("MCS"), r("NASARI"),
                    r("total")});
    SourceCounts sum;
    for (const auto& [language, counts] : *stage) {
      rows.push_back({l(language), r(counts.babelfy), r(counts.mcs),
                      r(counts.nasari), r(counts.total())});
      sum.babelfy += counts.babelfy;
      sum.mcs += counts.mcs;
      sum.nasari += counts.nasari;
    }
    rows.push_back({l("total"), r(sum.babelfy), r(sum.mcs), r(sum.nasari),
                    r(sum.total())});
    out.append(render_table(rows));
  }

  for (const auto* stage : {&report.pos_before, &report.pos_after}) {
    const bool before = stage == &report.pos_before;
    out.append(before ? "\nAnnotations by part of speech (complete)\n"
                      : "\nAnnotations by part of speech (high precision)\n");
    std::vector<std::vector<Cell>> rows;
    rows.push_back(
        {l("pos"), r("BABELFY"), r("MCS"), r("NASARI"), r("total")});
    for (Pos pos : kContentPos) {
      auto it = stage->find(pos);
      const SourceCounts counts =
          it == stage->end() ? SourceCounts{} : it->second;
      rows.push_back({l(std::string(to_string(pos))), r(counts.babelfy),
                      r(counts.mcs), r(counts.nasari), r(counts.total())});
    }
    out.append(render_table(rows));
  }

  out.append("\nSummary\n");
  std::vector<std::vector<Cell>> rows;
  rows.push_back({l("annotations per gloss"),
                  r(format_score(report.annotations_per_gloss))});
  rows.push_back({l("coverage"), r(ratio_or_dash(report.coverage))});
  for (Pos pos : kContentPos) {
    auto it = report.pos_coverage.find(pos);
    rows.push_back({l("coverage " + std::string(to_string(pos))),
                    r(ratio_or_dash(it == report.pos_coverage.end()
                                        ? std::nullopt
                                        : it->second))});
  }
  out.append(render_table(rows));
  return out;
}

std::vector<GoldAnnotation> load_gold(const std::filesystem::path& path,
                                      const SenseInventory& inventory) {
  std::vector<GoldAnnotation> gold;
  for (const TsvRecord& record : read_tsv(path, 4)) {
    GoldAnnotation item;
    item.gloss_id = record.fields[0];
    for (int f : {1, 2}) {
      if (record.fields[f].empty() ||
          record.fields[f].find_first_not_of("0123456789") !=
              std::string::npos) {
        throw ParseError(path.string() + ":" + std::to_string(record.line) +
                         ": malformed offset '" + record.fields[f] + "'");
      }
    }
    item.char_begin = std::stoull(record.fields[1]);
    item.char_end = std::stoull(record.fields[2]);
    item.sense = record.fields[3];
    if (item.gloss_id.empty() || item.char_end <= item.char_begin) {
      throw ParseError(path.string() + ":" + std::to_string(record.line) +
                       ": bad gold span");
    }
    if (inventory.find_synset(item.sense) == nullptr) {
      throw IntegrityError("gold sense '" + item.sense +
                           "' is not in the inventory");
    }
    gold.push_back(std::move(item));
  }
  return gold;
}

IntrinsicResult intrinsic_eval(const CorpusRelease& release,
                               const std::vector<GoldAnnotation>& gold) {
  if (gold.empty()) {
    throw Error("gold annotation set is empty");
  }

  // Gold rows address glosses by id alone, so an id reused by several
  // release files would be ambiguous.
  std::unordered_map<std::string, const AnnotatedGloss*> by_id;
  std::unordered_set<std::string> ambiguous;
  for (const auto& [key, glosses] : release.files) {
    for (const AnnotatedGloss& gloss : glosses) {
      if (!by_id.emplace(gloss.gloss_id, &gloss).second) {
        ambiguous.insert(gloss.gloss_id);
      }
    }
  }

  std::unordered_map<std::string, std::vector<const GoldAnnotation*>>
      gold_by_gloss;
  IntrinsicResult result;
  result.gold_total = gold.size();
  for (const GoldAnnotation& item : gold) {
    if (ambiguous.count(item.gloss_id) != 0) {
      throw IntegrityError("gold gloss id '" + item.gloss_id +
                           "' is ambiguous in this release");
    }
    auto it = by_id.find(item.gloss_id);
    if (it == by_id.end()) {
      throw IntegrityError("gold references unknown gloss '" + item.gloss_id +
                           "'");
    }
    if (item.char_end > uni::length(it->second->text)) {
      throw IntegrityError("gold span exceeds gloss '" + item.gloss_id + "'");
    }
    gold_by_gloss[item.gloss_id].push_back(&item);
  }

  std::unordered_set<const GoldAnnotation*> matched;
  for (const auto& [gloss_id, items] : gold_by_gloss) {
    const AnnotatedGloss& gloss = *by_id.at(gloss_id);
    for (const Annotation& ann : gloss.annotations) {
      bool judged = false;
      bool correct = false;
      for (const GoldAnnotation* item : items) {
        const bool overlaps = ann.char_begin < item->char_end &&
                              item->char_begin < ann.char_end;
        if (!overlaps) {
          continue;
        }
        judged = true;
        matched.insert(item);
        correct = correct || item->sense == ann.sense;
      }
      result.judged += judged ? 1 : 0;
      result.correct += correct ? 1 : 0;
    }
  }
  result.matched_gold = matched.size();
  result.precision =
      result.judged == 0
          ? 0.0
          : static_cast<double>(result.correct) /
                static_cast<double>(result.judged);
  result.coverage = static_cast<double>(result.matched_gold) /
                    static_cast<double>(result.gold_total);
  return result;
}

std::string render_intrinsic_text(const IntrinsicResult& complete,
                                  const IntrinsicResult& high_precision) {
  std::vector<std::vector<Cell>> rows;
  rows.push_back({l("tier"), r("judged"), r("correct"), r("gold"),
                  r("precision"), r("coverage")});
  auto row = [&rows](const char* tier, const IntrinsicResult& res) {
    rows.push_back({l(tier), r(res.judged), r(res.correct), r(res.gold_total),
                    r(format_score(res.precision)),
                    r(format_score(res.coverage))});
  };
  row("complete", complete);
  row("high_precision", high_precision);
  return render_table(rows);
}

double weighted_overlap(const std::vector<double>& a,
                        const std::vector<double>& b) {
  if (a.size() != b.size()) {
    throw Error("weighted overlap between vectors of dimension " +
                std::to_string(a.size()) + " and " + std::to_string(b.size()));
  }
  const std::vector<std::size_t> rank_a = feature_ranks(a);
  const std::vector<std::size_t> rank_b = feature_ranks(b);
  double numerator = 0.0;
  std::size_t shared = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (rank_a[i] != 0 && rank_b[i] != 0) {
      numerator += 1.0 / static_cast<double>(rank_a[i] + rank_b[i]);
      ++shared;
    }
  }
  if (shared == 0) {
    return 0.0;
  }
  double normalizer = 0.0;
  for (std::size_t i = 1; i <= shared; ++i) {
    normalizer += 1.0 / static_cast<double>(2 * i);
  }
  return std::sqrt(numerator / normalizer);
}

std::vector<ClusterPair> load_cluster_pairs(
    const std::filesystem::path& path) {
  std::vector<ClusterPair> pairs;
  for (const TsvRecord& record : read_tsv(path, 3)) {
    ClusterPair pair;
    pair.a = record.fields[0];
    pair.b = record.fields[1];
    if (record.fields[2] == "merge") {
      pair.gold_merge = true;
    } else if (record.fields[2] == "split") {
      pair.gold_merge = false;
    } else {
      throw ParseError(path.string() + ":" + std::to_string(record.line) +
                       ": judgement must be 'merge' or 'split', got '" +
                       record.fields[2] + "'");
    }
    if (pair.a.empty() || pair.b.empty()) {
      throw ParseError(path.string() + ":" + std::to_string(record.line) +
                       ": empty synset id");
    }
    pairs.push_back(std::move(pair));
  }
  return pairs;
}

ClusteringResult sense_clustering_eval(const std::vector<ClusterPair>& pairs,
                                       const VectorStore& vectors) {
  if (pairs.empty()) {
    throw Error("cluster pair set is empty");
  }
  ClusteringResult result;
  for (const ClusterPair& pair : pairs) {
    const std::vector<double>* va = vectors.find(pair.a);
    const std::vector<double>* vb = vectors.find(pair.b);
    bool predicted_merge = false;
    if (va != nullptr && vb != nullptr) {
      ++result.judgeable;
      predicted_merge = weighted_overlap(*va, *vb) > 0.5;
    } else {
      ++result.unjudgeable;
    }
    if (predicted_merge) {
      (pair.gold_merge ? result.true_positive : result.false_positive) += 1;
    } else {
      (pair.gold_merge ? result.false_negative : result.true_negative) += 1;
    }
  }
  const std::size_t total = pairs.size();
  result.accuracy =
      static_cast<double>(result.true_positive + result.true_negative) /
      static_cast<double>(total);
  const std::size_t f1_denominator =
      2 * result.true_positive + result.false_positive + result.false_negative;
  result.f1 = f1_denominator == 0
                  ? 0.0
                  : 2.0 * static_cast<double>(result.true_positive) /
                        static_cast<double>(f1_denominator);
  return result;
}

std::string render_clustering_text(const ClusteringResult& result) {
  std::vector<std::vector<Cell>> rows;
  rows.push_back({l("pairs"),
                  r(result.judgeable + result.unjudgeable)});
  rows.push_back({l("judgeable"), r(result.judgeable)});
  rows.push_back({l("unjudgeable"), r(result.unjudgeable)});
  rows.push_back({l("true positive"), r(result.true_positive)});
  rows.push_back({l("false positive"), r(result.false_positive)});
  rows.push_back({l("true negative"), r(result.true_negative)});
  rows.push_back({l("false negative"), r(result.false_negative)});
  rows.push_back({l("accuracy"), r(format_score(result.accuracy))});
  rows.push_back({l("F1"), r(format_score(result.f1))});
  return render_table(rows);
}

}  // namespace sensedefs
