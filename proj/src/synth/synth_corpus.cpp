// Copyright 2026 The ink authors. Apache 2.0 License.

#include "ink/synth/synth_corpus.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "ink/core/error.hpp"

namespace ink {

namespace {

// Word gap in glyph boxes, added on top of the normal advance.
constexpr Real kWordGap = 0.8;

std::vector<Point2> hand_drawn(char c) {
  switch (c) {
    case 'a': return {{0.80, 0.50}, {0.40, 0.40}, {0.20, 0.70}, {0.45, 0.95}, {0.80, 0.70}, {0.85, 1.00}};
    case 'b': return {{0.20, 0.00}, {0.20, 1.00}, {0.20, 0.60}, {0.60, 0.50}, {0.80, 0.80}, {0.30, 1.00}};
    case 'c': return {{0.80, 0.50}, {0.40, 0.45}, {0.20, 0.70}, {0.30, 0.95}, {0.60, 1.00}, {0.85, 0.90}};
    case 'd': return {{0.75, 0.55}, {0.35, 0.50}, {0.20, 0.80}, {0.50, 1.00}, {0.75, 0.75}, {0.75, 0.00}};
    case 'e': return {{0.20, 0.75}, {0.80, 0.70}, {0.60, 0.45}, {0.30, 0.50}, {0.20, 0.80}, {0.70, 1.00}};
    default: return {};
  }
}

}  // namespace

GlyphTemplate glyph_template(char symbol) {
  if (kFullAlphabet.find(symbol) == std::string_view::npos) {
    throw DataError(std::string("no glyph template for '") + symbol + "'");
  }
  GlyphTemplate g{symbol, hand_drawn(symbol)};
  if (g.polyline.empty()) {
    Rng rng(Rng::derive(0x51ee7u, static_cast<unsigned char>(symbol)));
    for (int i = 0; i < 6; ++i) {
      g.polyline.push_back({static_cast<Real>(rng.uniform(0.1, 0.9)),
                            static_cast<Real>(rng.uniform(0.1, 0.9))});
    }
  }
  return g;
}

void StyleVector::validate() const {
  if (!(scale > 0)) throw ContractError("style: scale must be > 0");
  if (!(jitter >= 0)) throw ContractError("style: jitter must be >= 0");
}

StyleVector StyleVector::random(Rng& rng) {
  StyleVector s;
  s.slant = static_cast<Real>(rng.uniform(-0.35, 0.35));
  s.scale = static_cast<Real>(rng.uniform(16, 26));
  s.spacing = static_cast<Real>(rng.uniform(1.0, 1.4));
  s.jitter = static_cast<Real>(rng.uniform(0.1, 0.5));
  s.drift = static_cast<Real>(rng.uniform(-0.05, 0.05));
  return s;
}

std::vector<Point2> resample_polyline(const std::vector<Point2>& polyline, std::size_t count) {
  if (polyline.empty() || count == 0) return {};
  if (count == 1 || polyline.size() == 1) return std::vector<Point2>(count, polyline.front());

  std::vector<double> cumulative(polyline.size(), 0.0);
  for (std::size_t i = 1; i < polyline.size(); ++i) {
    cumulative[i] = cumulative[i - 1] + std::hypot(polyline[i].x - polyline[i - 1].x,
                                                   polyline[i].y - polyline[i - 1].y);
  }
  const double total = cumulative.back();
  std::vector<Point2> out;
  out.reserve(count);
  std::size_t seg = 1;
  for (std::size_t k = 0; k < count; ++k) {
    const double target = total * static_cast<double>(k) / static_cast<double>(count - 1);
    while (seg + 1 < polyline.size() && cumulative[seg] < target) ++seg;
    const double len = cumulative[seg] - cumulative[seg - 1];
    const double w = len > 0 ? std::clamp((target - cumulative[seg - 1]) / len, 0.0, 1.0) : 0.0;
    const Point2& a = polyline[seg - 1];
    const Point2& b = polyline[seg];
    out.push_back({static_cast<Real>(a.x + w * (b.x - a.x)), static_cast<Real>(a.y + w * (b.y - a.y))});
  }
  return out;
}

std::vector<Point2> apply_style(const std::vector<Point2>& polyline, const StyleVector& style,
                                Rng& rng) {
  style.validate();
  const Real shear = std::tan(style.slant);
  std::vector<Point2> out;
  out.reserve(polyline.size());
  for (const Point2& p : polyline) {
    Real x = (p.x + p.y * shear) * style.scale;
    Real y = p.y * style.scale;
    y += style.drift * x;
    if (style.jitter > 0) {
      x += static_cast<Real>(style.jitter * rng.normal());
      y += static_cast<Real>(style.jitter * rng.normal());
    }
    out.push_back({x, y});
  }
  return out;
}

InkSample render_text(std::string_view text, const Alphabet& alphabet, const StyleVector& style,
                      std::size_t points_per_glyph, Rng& rng) {
  if (points_per_glyph == 0) throw ContractError("render_text: points_per_glyph must be >= 1");
  style.validate();
  InkSample s;
  s.text = std::string(text);
  Real pen_x = 0;
  bool word_start = true;
  bool any_glyph = false;
  for (char c : text) {
    if (c == ' ') {
      if (!word_start && any_glyph) pen_x += kWordGap * style.spacing * style.scale;
      word_start = true;
      continue;
    }
    const auto label = static_cast<int>(alphabet.index(c));
    const auto glyph = apply_style(resample_polyline(glyph_template(c).polyline, points_per_glyph),
                                   style, rng);
    for (std::size_t i = 0; i < glyph.size(); ++i) {
      const bool last = i + 1 == glyph.size();
      s.points.push_back({pen_x + glyph[i].x, glyph[i].y + style.drift * pen_x, last ? 1 : 0});
      s.y.push_back(label);
      s.eoc.push_back(last ? 1 : 0);
      s.bow.push_back(i == 0 && word_start ? 1 : 0);
    }
    word_start = false;
    any_glyph = true;
    pen_x += style.spacing * style.scale;
  }
  return s;
}

Corpus generate_corpus(const GeneratorConfig& config) {
  if (config.authors == 0 || config.samples_per_author == 0 || config.points_per_glyph == 0 ||
      config.max_word_length == 0 || config.max_words == 0) {
    throw ContractError("generate_corpus: counts must be >= 1");
  }
  Corpus corpus{Alphabet(config.alphabet), {}};
  const std::string& symbols = corpus.alphabet.symbols();
  corpus.samples.reserve(config.authors * config.samples_per_author);
  for (std::size_t a = 0; a < config.authors; ++a) {
    const std::uint64_t author_seed = Rng::derive(config.seed, a);
    Rng style_rng(author_seed);
    const StyleVector style = StyleVector::random(style_rng);
    char name[32];
    std::snprintf(name, sizeof(name), "author-%03zu", a);
    for (std::size_t m = 0; m < config.samples_per_author; ++m) {
      Rng rng(Rng::derive(author_seed, 1 + m));
      const std::size_t words = 1 + rng.index(config.max_words);
      std::string text;
      for (std::size_t w = 0; w < words; ++w) {
        if (w > 0) text.push_back(' ');
        const std::size_t len = 1 + rng.index(config.max_word_length);
        for (std::size_t i = 0; i < len; ++i) text.push_back(symbols[rng.index(symbols.size())]);
      }
      InkSample s = render_text(text, corpus.alphabet, style, config.points_per_glyph, rng);
      s.author = name;
      corpus.samples.push_back(std::move(s));
    }
  }
  return corpus;
}

}  // namespace ink
