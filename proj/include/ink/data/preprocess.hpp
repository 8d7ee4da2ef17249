// Copyright 2026 The ink authors. Apache 2.0 License.
//
// Training-data preparation: long samples are split on character boundaries,
// every sample is shifted to start at the origin and turned into per-point
// deltas, and deltas are standardized with corpus-wide statistics. The pen
// column is never transformed. from_model_space inverts the chain exactly.

#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "ink/data/ink.hpp"

namespace ink {

inline constexpr std::size_t kMaxStrokes = 300;
inline constexpr Real kStdFloor = 1e-8;

struct SplitResult {
  std::vector<InkSample> parts;
  /// Set when a part had to be cut without an end-of-character boundary.
  bool hard_split = false;
};

/// Cuts samples longer than `max_strokes` right after the latest eoc = 1
/// inside each window. Texts of the parts are rebuilt from their labels.
SplitResult split_long_samples(const InkSample& sample, const Alphabet& alphabet,
                               std::size_t max_strokes = kMaxStrokes);

/// Splits every sample of a corpus. `hard_splits` (optional) receives the
/// number of samples that needed a hard cut.
Corpus split_corpus(const Corpus& corpus, std::size_t max_strokes = kMaxStrokes,
                    std::size_t* hard_splits = nullptr);

struct StatsResult {
  NormStats stats;
  /// Axes whose standard deviation was raised to kStdFloor.
  std::array<bool, 2> degenerate{false, false};
  bool any_degenerate() const { return degenerate[0] || degenerate[1]; }
};

/// Mean and population standard deviation of the (du, dv) deltas t >= 1 of
/// every sample. Throws DataError when fewer than two deltas exist.
StatsResult compute_stats(const Corpus& corpus);

EncodedSequence to_model_space(const InkSample& sample, const NormStats& stats);
InkSample from_model_space(const EncodedSequence& encoded, const NormStats& stats,
                           std::array<Real, 2> origin = {0, 0});

std::vector<EncodedSequence> encode_corpus(const Corpus& corpus, const NormStats& stats);

}  // namespace ink
