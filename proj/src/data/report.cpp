// Copyright 2026 The ink authors. Apache 2.0 License.

#include "ink/data/report.hpp"

#include <set>
#include <sstream>
#include <string>

namespace ink {

CorpusReport corpus_report(const Corpus& corpus) {
  CorpusReport r;
  std::set<std::string> authors;
  std::set<std::string> words;
  for (const InkSample& s : corpus.samples) {
    ++r.samples;
    r.points += s.length();
    authors.insert(s.author);
    std::istringstream in(s.text);
    std::string word;
    while (in >> word) {
      ++r.word_instances;
      r.characters += word.size();
      words.insert(word);
    }
  }
  r.authors = authors.size();
  r.unique_words = words.size();
  return r;
}

nlohmann::json report_to_json(const CorpusReport& report) {
  return nlohmann::json{{"samples", report.samples},
                        {"authors", report.authors},
                        {"word_instances", report.word_instances},
                        {"unique_words", report.unique_words},
                        {"characters", report.characters},
                        {"points", report.points}};
}

}  // namespace ink
