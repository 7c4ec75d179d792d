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

#include "sensedefs/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <fstream>
#include <mutex>
#include <thread>
#include <vector>

#include "sensedefs/disambiguate.hpp"
#include "sensedefs/enrich.hpp"
#include "sensedefs/error.hpp"
#include "sensedefs/preprocess.hpp"
#include "sensedefs/refine.hpp"

namespace sensedefs {

namespace {

Annotation to_annotation(const DisambiguatedInstance& instance) {
  Annotation ann;
  ann.source = instance.source;
  ann.anchor = instance.anchor;
  ann.char_begin = instance.char_begin;
  ann.char_end = instance.char_end;
  ann.bf_score = instance.babelfy_score;
  ann.coherence_score = instance.coherence_score;
  ann.nasari_score = instance.nasari_score;
  ann.sense = instance.sense;
  return ann;
}

}  // namespace

void validate(const PipelineConfig& config) {
  auto in_unit = [](double value) { return value >= 0.0 && value <= 1.0; };
  if (!in_unit(config.bf_threshold) || !in_unit(config.coh_threshold) ||
      !in_unit(config.nasari_threshold)) {
    throw Error("thresholds must lie in [0,1]");
  }
  if (config.radius < 1) {
    throw Error("signature radius must be at least 1");
  }
  if (config.workers < 1) {
    throw Error("worker count must be at least 1");
  }
  if (config.inventory_dir.empty()) {
    throw Error("inventory directory not set");
  }
  if (config.vectors_path.empty()) {
    throw Error("vectors path not set");
  }
  if (config.out_dir.empty()) {
    throw Error("output directory not set");
  }
}

PipelineResult run_pipeline(const PipelineConfig& config) {
  validate(config);

  const SenseInventory inventory = SenseInventory::load(config.inventory_dir);
  const StopwordList stopwords = StopwordList::load(
      config.stopwords_dir.empty() ? config.inventory_dir
                                   : config.stopwords_dir);
  const VectorStore vectors = VectorStore::load(config.vectors_path);
  const HeuristicTagger tagger(inventory, stopwords);

  const std::vector<EnrichedDocument> documents =
      group_corpus(inventory.glosses(), inventory, tagger);

  // Documents are independent; workers pull indices off a shared
  // counter and write into their own slot, so the merged result is
  // identical for any worker count.
  std::vector<RefinedDocument> refined(documents.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto work = [&]() {
    SignatureCache signatures(inventory.network(), config.radius);
    for (;;) {
      const std::size_t index = next.fetch_add(1);
      if (index >= documents.size()) {
        return;
      }
      try {
        const EnrichedDocument& doc = documents[index];
        if (doc.mentions.empty()) {
          continue;
        }
        std::vector<DisambiguatedInstance> instances = joint_disambiguate(
            doc, inventory, signatures, config.bf_threshold);
        coherence_scores(instances, signatures);
        refined[index] = refine_document(
            std::move(instances), inventory, vectors, config.bf_threshold,
            config.coh_threshold, config.nasari_threshold);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) {
          failure = std::current_exception();
        }
        return;
      }
    }
  };
  const std::size_t worker_count =
      std::max<std::size_t>(1, std::min(config.workers, documents.size()));
  if (worker_count == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(worker_count);
    for (std::size_t w = 0; w < worker_count; ++w) {
      pool.emplace_back(work);
    }
    for (std::thread& thread : pool) {
      thread.join();
    }
  }
  if (failure) {
    std::rethrow_exception(failure);
  }

  PipelineResult result;
  result.documents = documents.size();
  result.complete.version = ReleaseVersion::Complete;
  result.high_precision.version = ReleaseVersion::HighPrecision;
  for (std::size_t index = 0; index < documents.size(); ++index) {
    const EnrichedDocument& doc = documents[index];
    std::vector<AnnotatedGloss> complete_glosses(doc.segments.size());
    std::vector<AnnotatedGloss> hp_glosses(doc.segments.size());
    for (std::size_t s = 0; s < doc.segments.size(); ++s) {
      complete_glosses[s].gloss_id = doc.segments[s].gloss_id;
      complete_glosses[s].text = doc.segments[s].text;
      hp_glosses[s].gloss_id = doc.segments[s].gloss_id;
      hp_glosses[s].text = doc.segments[s].text;
    }
    for (const DisambiguatedInstance& instance : refined[index].complete) {
      complete_glosses[instance.segment].annotations.push_back(
          to_annotation(instance));
    }
    for (const DisambiguatedInstance& instance :
         refined[index].high_precision) {
      hp_glosses[instance.segment].annotations.push_back(
          to_annotation(instance));
    }
    for (std::size_t s = 0; s < doc.segments.size(); ++s) {
      const auto key = std::make_pair(doc.segments[s].resource,
                                      doc.segments[s].language);
      result.complete.files[key].push_back(std::move(complete_glosses[s]));
      result.high_precision.files[key].push_back(std::move(hp_glosses[s]));
    }
  }

  write_corpus_xml(result.complete, config.out_dir);
  write_corpus_xml(result.high_precision, config.out_dir);

  result.stats =
      compute_stats(result.complete, result.high_precision, inventory);
  const std::filesystem::path stats_path = config.out_dir / "stats.tsv";
  const std::string rendered = render_stats_tsv(result.stats);
  std::ofstream out(stats_path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw Error("cannot write '" + stats_path.string() + "'");
  }
  out.write(rendered.data(), static_cast<std::streamsize>(rendered.size()));
  if (!out) {
    throw Error("short write to '" + stats_path.string() + "'");
  }
  return result;
}

}  // namespace sensedefs
