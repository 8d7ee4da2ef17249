// Copyright 2026 The ink authors. Apache 2.0 License.

#include "ink/data/preprocess.hpp"

#include <cmath>

#include "ink/core/error.hpp"

namespace ink {

namespace {

InkSample take(const InkSample& s, std::size_t begin, std::size_t end, const Alphabet& alphabet) {
  InkSample part;
  part.author = s.author;
  part.points.assign(s.points.begin() + begin, s.points.begin() + end);
  part.y.assign(s.y.begin() + begin, s.y.begin() + end);
  part.eoc.assign(s.eoc.begin() + begin, s.eoc.begin() + end);
  part.bow.assign(s.bow.begin() + begin, s.bow.begin() + end);
  part.text = text_from_labels(alphabet, part.y, part.eoc, part.bow);
  return part;
}

}  // namespace

SplitResult split_long_samples(const InkSample& sample, const Alphabet& alphabet,
                               std::size_t max_strokes) {
  if (max_strokes == 0) throw ContractError("split_long_samples: max_strokes must be >= 1");
  sample.validate(alphabet.size());
  SplitResult result;
  if (sample.length() <= max_strokes) {
    result.parts.push_back(sample);
    return result;
  }
  std::size_t start = 0;
  const std::size_t total = sample.length();
  while (total - start > max_strokes) {
    std::size_t cut = 0;  // exclusive end of the part
    for (std::size_t i = start + max_strokes; i-- > start;) {
      if (sample.eoc[i] == 1) {
        cut = i + 1;
        break;
      }
    }
    if (cut == 0) {
      cut = start + max_strokes;
      result.hard_split = true;
    }
    result.parts.push_back(take(sample, start, cut, alphabet));
    start = cut;
  }
  result.parts.push_back(take(sample, start, total, alphabet));
  return result;
}

Corpus split_corpus(const Corpus& corpus, std::size_t max_strokes, std::size_t* hard_splits) {
  Corpus out{corpus.alphabet, {}};
  std::size_t hard = 0;
  for (const InkSample& s : corpus.samples) {
    SplitResult r = split_long_samples(s, corpus.alphabet, max_strokes);
    if (r.hard_split) ++hard;
    for (InkSample& p : r.parts) out.samples.push_back(std::move(p));
  }
  if (hard_splits != nullptr) *hard_splits = hard;
  return out;
}

StatsResult compute_stats(const Corpus& corpus) {
  double sum[2] = {0, 0};
  double sq[2] = {0, 0};
  std::size_t count = 0;
  for (const InkSample& s : corpus.samples) {
    for (std::size_t t = 1; t < s.length(); ++t) {
      const double du = static_cast<double>(s.points[t].u) - s.points[t - 1].u;
      const double dv = static_cast<double>(s.points[t].v) - s.points[t - 1].v;
      sum[0] += du;
      sum[1] += dv;
      ++count;
    }
  }
  if (count < 2) {
    throw DataError("compute_stats: need at least two deltas, corpus has " + std::to_string(count));
  }
  const double mean[2] = {sum[0] / count, sum[1] / count};
  // second pass for a stable variance
  for (const InkSample& s : corpus.samples) {
    for (std::size_t t = 1; t < s.length(); ++t) {
      const double du = static_cast<double>(s.points[t].u) - s.points[t - 1].u - mean[0];
      const double dv = static_cast<double>(s.points[t].v) - s.points[t - 1].v - mean[1];
      sq[0] += du * du;
      sq[1] += dv * dv;
    }
  }
  StatsResult r;
  for (int a = 0; a < 2; ++a) {
    r.stats.mean[a] = static_cast<Real>(mean[a]);
    double sd = std::sqrt(sq[a] / count);
    if (sd < kStdFloor) {
      sd = kStdFloor;
      r.degenerate[a] = true;
    }
    r.stats.std[a] = static_cast<Real>(sd);
  }
  return r;
}

EncodedSequence to_model_space(const InkSample& sample, const NormStats& stats) {
  if (sample.length() == 0) throw ContractError("to_model_space: empty sample");
  EncodedSequence e;
  e.y = sample.y;
  e.eoc = sample.eoc;
  e.bow = sample.bow;
  e.deltas.reserve(sample.length());
  e.deltas.push_back({0, 0, static_cast<Real>(sample.points[0].pen)});
  // the origin shift cancels in the deltas
  for (std::size_t t = 1; t < sample.length(); ++t) {
    const Real du = sample.points[t].u - sample.points[t - 1].u;
    const Real dv = sample.points[t].v - sample.points[t - 1].v;
    e.deltas.push_back({(du - stats.mean[0]) / stats.std[0], (dv - stats.mean[1]) / stats.std[1],
                        static_cast<Real>(sample.points[t].pen)});
  }
  return e;
}

InkSample from_model_space(const EncodedSequence& encoded, const NormStats& stats,
                           std::array<Real, 2> origin) {
  InkSample s;
  s.y = encoded.y;
  s.eoc = encoded.eoc;
  s.bow = encoded.bow;
  s.points.reserve(encoded.length());
  Real u = origin[0];
  Real v = origin[1];
  for (std::size_t t = 0; t < encoded.length(); ++t) {
    const auto& d = encoded.deltas[t];
    if (t > 0) {
      u += d[0] * stats.std[0] + stats.mean[0];
      v += d[1] * stats.std[1] + stats.mean[1];
    }
    s.points.push_back({u, v, d[2] >= Real(0.5) ? 1 : 0});
  }
  return s;
}

std::vector<EncodedSequence> encode_corpus(const Corpus& corpus, const NormStats& stats) {
  std::vector<EncodedSequence> out;
  out.reserve(corpus.samples.size());
  for (const InkSample& s : corpus.samples) {
    if (s.length() > 0) out.push_back(to_model_space(s, stats));
  }
  return out;
}

}  // namespace ink
