// Copyright 2026 The ink authors. Apache 2.0 License.
//
// Handwriting samples. A sample is a sequence of pen points (u, v, pen) in
// screen units where pen = 1 marks the point at which the pen is lifted.
// Every point carries the index of the character it belongs to (y), an
// end-of-character flag (eoc) and a beginning-of-word flag (bow).

#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "ink/core/array.hpp"
#include "ink/data/alphabet.hpp"

namespace ink {

struct StrokePoint {
  Real u = 0;
  Real v = 0;
  int pen = 0;

  friend bool operator==(const StrokePoint&, const StrokePoint&) = default;
};

struct InkSample {
  std::vector<StrokePoint> points;
  std::vector<int> y;
  std::vector<int> eoc;
  std::vector<int> bow;
  std::string author;
  std::string text;

  std::size_t length() const { return points.size(); }
  /// Throws DataError when labels are misaligned or out of range.
  void validate(std::size_t alphabet_size) const;

  friend bool operator==(const InkSample&, const InkSample&) = default;
};

struct Corpus {
  Alphabet alphabet;
  std::vector<InkSample> samples;

  friend bool operator==(const Corpus&, const Corpus&) = default;
};

/// Per-axis statistics of coordinate deltas.
struct NormStats {
  std::array<Real, 2> mean{0, 0};
  std::array<Real, 2> std{1, 1};

  friend bool operator==(const NormStats&, const NormStats&) = default;
};

/// Model-space form of a sample: rows are (du, dv, pen) with du, dv
/// normalized by NormStats. Row 0 is always (0, 0, pen_0).
struct EncodedSequence {
  std::vector<std::array<Real, 3>> deltas;
  std::vector<int> y;
  std::vector<int> eoc;
  std::vector<int> bow;

  std::size_t length() const { return deltas.size(); }
  void validate(std::size_t alphabet_size) const;
};

/// Rebuilds readable text from per-point labels: one symbol per eoc-terminated
/// run, a space before every word start except the first.
std::string text_from_labels(const Alphabet& alphabet, const std::vector<int>& y,
                             const std::vector<int>& eoc, const std::vector<int>& bow);

}  // namespace ink
