// Copyright 2026 The ink authors. Apache 2.0 License.

#pragma once

#include <cstddef>

#include "ink/data/ink.hpp"
#include "json.hpp"

namespace ink {

struct CorpusReport {
  std::size_t samples = 0;
  std::size_t authors = 0;
  std::size_t word_instances = 0;
  std::size_t unique_words = 0;
  /// Non-space characters over all sample texts.
  std::size_t characters = 0;
  std::size_t points = 0;
};

CorpusReport corpus_report(const Corpus& corpus);
nlohmann::json report_to_json(const CorpusReport& report);

}  // namespace ink
