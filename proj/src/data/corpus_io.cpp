// Copyright 2026 The ink authors. Apache 2.0 License.

#include "ink/data/corpus_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "ink/core/error.hpp"

namespace ink {

using nlohmann::json;

namespace {

[[noreturn]] void schema_error(std::size_t sample, const std::string& field, const std::string& msg) {
  throw DataError("sample " + std::to_string(sample) + ": field '" + field + "': " + msg);
}

const json& require(const json& obj, const char* key, std::size_t sample) {
  auto it = obj.find(key);
  if (it == obj.end()) schema_error(sample, key, "missing");
  return *it;
}

std::vector<int> read_labels(const json& obj, const char* key, std::size_t sample, bool binary) {
  const json& arr = require(obj, key, sample);
  if (!arr.is_array()) schema_error(sample, key, "expected an array");
  std::vector<int> out;
  out.reserve(arr.size());
  for (const json& v : arr) {
    if (!v.is_number_integer()) schema_error(sample, key, "expected integers");
    const auto x = v.get<long long>();
    if (x < 0 || (binary && x > 1)) {
      schema_error(sample, key, binary ? "expected 0 or 1" : "expected a non-negative index");
    }
    out.push_back(static_cast<int>(x));
  }
  return out;
}

InkSample read_sample(const json& obj, std::size_t index, std::size_t alphabet_size) {
  if (!obj.is_object()) schema_error(index, "", "expected an object");
  InkSample s;
  const json& author = require(obj, "author", index);
  const json& text = require(obj, "text", index);
  if (!author.is_string()) schema_error(index, "author", "expected a string");
  if (!text.is_string()) schema_error(index, "text", "expected a string");
  s.author = author.get<std::string>();
  s.text = text.get<std::string>();

  const json& points = require(obj, "points", index);
  if (!points.is_array()) schema_error(index, "points", "expected an array");
  s.points.reserve(points.size());
  for (const json& p : points) {
    if (!p.is_array() || p.size() != 3 || !p[0].is_number() || !p[1].is_number() ||
        !p[2].is_number_integer()) {
      schema_error(index, "points", "expected [u, v, pen] triples");
    }
    const auto pen = p[2].get<long long>();
    if (pen != 0 && pen != 1) schema_error(index, "points", "pen must be 0 or 1");
    s.points.push_back({p[0].get<Real>(), p[1].get<Real>(), static_cast<int>(pen)});
  }
  s.y = read_labels(obj, "y", index, false);
  s.eoc = read_labels(obj, "eoc", index, true);
  s.bow = read_labels(obj, "bow", index, true);
  try {
    s.validate(alphabet_size);
  } catch (const DataError& e) {
    throw DataError("sample " + std::to_string(index) + ": " + e.what());
  }
  return s;
}

}  // namespace

Corpus corpus_from_json(const json& doc) {
  if (!doc.is_object()) throw DataError("corpus: expected a JSON object");
  auto version = doc.find("version");
  if (version == doc.end() || !version->is_number_integer() || version->get<int>() != 1) {
    throw DataError("corpus: unsupported or missing version (expected 1)");
  }
  auto alphabet = doc.find("alphabet");
  if (alphabet == doc.end() || !alphabet->is_string()) {
    throw DataError("corpus: missing alphabet string");
  }
  auto samples = doc.find("samples");
  if (samples == doc.end() || !samples->is_array()) {
    throw DataError("corpus: missing samples array");
  }
  Corpus corpus{Alphabet(alphabet->get<std::string>()), {}};
  corpus.samples.reserve(samples->size());
  for (std::size_t i = 0; i < samples->size(); ++i) {
    corpus.samples.push_back(read_sample((*samples)[i], i, corpus.alphabet.size()));
  }
  return corpus;
}

json corpus_to_json(const Corpus& corpus) {
  json samples = json::array();
  for (const InkSample& s : corpus.samples) {
    json points = json::array();
    for (const StrokePoint& p : s.points) {
      points.push_back(json::array({static_cast<double>(p.u), static_cast<double>(p.v), p.pen}));
    }
    samples.push_back(json{{"author", s.author},
                           {"text", s.text},
                           {"points", std::move(points)},
                           {"y", s.y},
                           {"eoc", s.eoc},
                           {"bow", s.bow}});
  }
  return json{{"version", 1}, {"alphabet", corpus.alphabet.symbols()}, {"samples", std::move(samples)}};
}

Corpus parse_corpus(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw DataError(std::string("corpus: invalid JSON: ") + e.what());
  }
  return corpus_from_json(doc);
}

std::string serialize_corpus(const Corpus& corpus) { return corpus_to_json(corpus).dump() + "\n"; }

Corpus load_corpus(const std::string& path) { return parse_corpus(read_file(path)); }

void save_corpus(const Corpus& corpus, const std::string& path) {
  write_file_atomic(path, serialize_corpus(corpus));
}

json stats_to_json(const NormStats& stats) {
  return json{{"mean", {static_cast<double>(stats.mean[0]), static_cast<double>(stats.mean[1])}},
              {"std", {static_cast<double>(stats.std[0]), static_cast<double>(stats.std[1])}}};
}

NormStats stats_from_json(const json& doc) {
  auto pair = [&](const char* key) {
    auto it = doc.find(key);
    if (it == doc.end() || !it->is_array() || it->size() != 2 || !(*it)[0].is_number() ||
        !(*it)[1].is_number()) {
      throw DataError(std::string("stats: field '") + key + "' must be a pair of numbers");
    }
    return std::array<Real, 2>{(*it)[0].get<Real>(), (*it)[1].get<Real>()};
  };
  if (!doc.is_object()) throw DataError("stats: expected a JSON object");
  NormStats s{pair("mean"), pair("std")};
  if (!(s.std[0] > 0) || !(s.std[1] > 0)) throw DataError("stats: std must be positive");
  return s;
}

NormStats load_stats(const std::string& path) {
  try {
    return stats_from_json(json::parse(read_file(path)));
  } catch (const json::parse_error& e) {
    throw DataError(std::string("stats: invalid JSON: ") + e.what());
  }
}

void save_stats(const NormStats& stats, const std::string& path) {
  write_file_atomic(path, stats_to_json(stats).dump() + "\n");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file_atomic(const std::string& path, std::string_view content) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw DataError("cannot write '" + tmp + "'");
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.flush();
    if (!out) {
      std::remove(tmp.c_str());
      throw DataError("write failed for '" + tmp + "'");
    }
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) {
    std::remove(tmp.c_str());
    throw DataError("cannot rename '" + tmp + "' to '" + path + "'");
  }
}

}  // namespace ink
