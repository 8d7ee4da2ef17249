// Copyright 2026 The ink authors. Apache 2.0 License.

#include "ink/data/ink.hpp"

#include "ink/core/error.hpp"

namespace ink {

namespace {

void check_labels(std::size_t t, const std::vector<int>& y, const std::vector<int>& eoc,
                  const std::vector<int>& bow, std::size_t alphabet_size) {
  auto length = [&](const std::vector<int>& v, const char* name) {
    if (v.size() != t) {
      throw DataError(std::string("field '") + name + "': label length mismatch (T=" +
                      std::to_string(t) + ", got " + std::to_string(v.size()) + ")");
    }
  };
  length(y, "y");
  length(eoc, "eoc");
  length(bow, "bow");
  for (std::size_t i = 0; i < t; ++i) {
    if (y[i] < 0 || static_cast<std::size_t>(y[i]) >= alphabet_size) {
      throw DataError("field 'y': index " + std::to_string(y[i]) + " at t=" + std::to_string(i) +
                      " exceeds alphabet size " + std::to_string(alphabet_size));
    }
    if ((eoc[i] != 0 && eoc[i] != 1) || (bow[i] != 0 && bow[i] != 1)) {
      throw DataError("eoc/bow labels must be 0 or 1 (t=" + std::to_string(i) + ")");
    }
  }
}

}  // namespace

void InkSample::validate(std::size_t alphabet_size) const {
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (points[i].pen != 0 && points[i].pen != 1) {
      throw DataError("field 'points': pen must be 0 or 1 (t=" + std::to_string(i) + ")");
    }
  }
  check_labels(points.size(), y, eoc, bow, alphabet_size);
}

void EncodedSequence::validate(std::size_t alphabet_size) const {
  check_labels(deltas.size(), y, eoc, bow, alphabet_size);
}

std::string text_from_labels(const Alphabet& alphabet, const std::vector<int>& y,
                             const std::vector<int>& eoc, const std::vector<int>& bow) {
  std::string text;
  bool open = false;
  for (std::size_t t = 0; t < y.size(); ++t) {
    if (!open) {
      if (bow[t] == 1 && !text.empty()) text.push_back(' ');
      text.push_back(alphabet.symbol(static_cast<std::size_t>(y[t])));
      open = true;
    }
    if (eoc[t] == 1) open = false;
  }
  return text;
}

}  // namespace ink
