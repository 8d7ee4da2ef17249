// Copyright 2026 The ink authors. Apache 2.0 License.
//
// Deterministic generator of labelled handwriting-like corpora. Every glyph is
// a short polyline in the unit box (y grows downwards). An author is a
// StyleVector; a sample is a random word rendered glyph by glyph.

#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ink/core/rng.hpp"
#include "ink/data/ink.hpp"

namespace ink {

struct Point2 {
  Real x = 0;
  Real y = 0;

  friend bool operator==(const Point2&, const Point2&) = default;
};

struct GlyphTemplate {
  char symbol = '?';
  std::vector<Point2> polyline;
};

/// Template for any symbol of kFullAlphabet. 'a'..'e' are hand-drawn, the
/// rest are fixed pseudo-random scribbles.
GlyphTemplate glyph_template(char symbol);

struct StyleVector {
  Real slant = 0;    // shear angle, radians
  Real scale = 1;    // glyph box size in screen units
  Real spacing = 1;  // advance width, in glyph boxes
  Real jitter = 0;   // std of per-point noise, screen units
  Real drift = 0;    // baseline slope

  void validate() const;
  static StyleVector identity() { return {}; }
  static StyleVector random(Rng& rng);
};

/// `count` points spaced evenly along the polyline's arc length.
std::vector<Point2> resample_polyline(const std::vector<Point2>& polyline, std::size_t count);

/// Shear by slant, scale, add baseline drift, then add jitter drawn from rng.
std::vector<Point2> apply_style(const std::vector<Point2>& polyline, const StyleVector& style,
                                Rng& rng);

/// Renders `text` (words separated by spaces) in one style. Every glyph
/// contributes `points_per_glyph` points, the last with pen = 1 and eoc = 1;
/// the first point of each word has bow = 1.
InkSample render_text(std::string_view text, const Alphabet& alphabet, const StyleVector& style,
                      std::size_t points_per_glyph, Rng& rng);

struct GeneratorConfig {
  std::string alphabet = "abcde";
  std::size_t authors = 4;
  std::size_t samples_per_author = 40;
  std::size_t points_per_glyph = 8;
  std::size_t max_word_length = 5;
  std::size_t max_words = 1;
  std::uint64_t seed = 0;
};

Corpus generate_corpus(const GeneratorConfig& config);

}  // namespace ink
