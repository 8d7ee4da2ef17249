// Copyright 2026 The ink authors. Apache 2.0 License.

#include <algorithm>
#include <cmath>
#include <string>

#include "doctest.h"
#include "ink/core/error.hpp"
#include "ink/data/corpus_io.hpp"
#include "ink/synth/synth_corpus.hpp"

using namespace ink;
using doctest::Approx;

TEST_CASE("same seed gives byte-identical corpora") {
  GeneratorConfig cfg;
  cfg.seed = 7;
  cfg.max_words = 3;
  const std::string a = serialize_corpus(generate_corpus(cfg));
  CHECK(a == serialize_corpus(generate_corpus(cfg)));
  cfg.seed = 8;
  CHECK(a != serialize_corpus(generate_corpus(cfg)));
}

TEST_CASE("two-glyph word labels") {
  Rng rng(1);
  const InkSample s = render_text("ab", Alphabet("ab"), StyleVector::random(rng), 8, rng);
  REQUIRE(s.length() == 16);
  for (std::size_t t = 0; t < 16; ++t) {
    CHECK(s.eoc[t] == (t == 7 || t == 15 ? 1 : 0));
    CHECK(s.bow[t] == (t == 0 ? 1 : 0));
    CHECK(s.points[t].pen == (t == 7 || t == 15 ? 1 : 0));
    CHECK(s.y[t] == (t < 8 ? 0 : 1));
  }
  CHECK(s.text == "ab");
}

TEST_CASE("unknown characters are data errors") {
  Rng rng(1);
  CHECK_THROWS_AS(render_text("az", Alphabet("ab"), StyleVector{}, 8, rng), DataError);
  GeneratorConfig cfg;
  cfg.alphabet = "a~";
  CHECK_THROWS_AS(generate_corpus(cfg), DataError);
}

TEST_CASE("noise-free style renders repeated words identically") {
  StyleVector style;
  style.slant = 0.2;
  style.scale = 30;
  Rng r1(1);
  Rng r2(2);
  const Alphabet ab("abcde");
  CHECK(render_text("bead", ab, style, 6, r1).points ==
        render_text("bead", ab, style, 6, r2).points);
}

TEST_CASE("apply_style geometry") {
  const std::vector<Point2> poly{{0, 0}, {0.5, 1}, {1, 0.25}};
  Rng rng(0);
  CHECK(apply_style(poly, StyleVector::identity(), rng) == poly);

  StyleVector twice;
  twice.scale = 2;
  const auto doubled = apply_style(poly, twice, rng);
  for (std::size_t i = 0; i < poly.size(); ++i) {
    CHECK(doubled[i].x == Approx(2 * poly[i].x));
    CHECK(doubled[i].y == Approx(2 * poly[i].y));
  }

  StyleVector slant;
  slant.slant = 0.3;
  const auto sheared = apply_style(poly, slant, rng);
  for (std::size_t i = 0; i < poly.size(); ++i) {
    CHECK(sheared[i].x == Approx(poly[i].x + poly[i].y * std::tan(0.3)));
    CHECK(sheared[i].y == Approx(poly[i].y));
  }

  StyleVector bad;
  bad.scale = 0;
  CHECK_THROWS_AS(bad.validate(), ContractError);
  bad.scale = 1;
  bad.jitter = -1;
  CHECK_THROWS_AS(bad.validate(), ContractError);
}

TEST_CASE("glyph templates stay in the unit box") {
  for (char c : kFullAlphabet) {
    const GlyphTemplate g = glyph_template(c);
    CHECK(g.symbol == c);
    CHECK(g.polyline.size() >= 2);
    for (const Point2& p : g.polyline) {
      CHECK(p.x >= 0);
      CHECK(p.x <= 1);
      CHECK(p.y >= 0);
      CHECK(p.y <= 1);
    }
  }
}

TEST_CASE("resample_polyline spaces points by arc length") {
  const auto pts = resample_polyline({{0, 0}, {1, 0}, {1, 1}}, 5);
  REQUIRE(pts.size() == 5);
  CHECK(pts[0] == Point2{0, 0});
  CHECK(pts[2].x == Approx(1));
  CHECK(pts[2].y == Approx(0));
  CHECK(pts[4].x == Approx(1));
  CHECK(pts[4].y == Approx(1));
}

TEST_CASE("generated corpora are valid and label counts match the text") {
  GeneratorConfig cfg;
  cfg.seed = 3;
  cfg.max_words = 4;
  cfg.authors = 3;
  cfg.samples_per_author = 10;
  const Corpus c = generate_corpus(cfg);
  CHECK(c.samples.size() == 30);
  CHECK(parse_corpus(serialize_corpus(c)) == c);
  for (const InkSample& s : c.samples) {
    const auto chars = std::count_if(s.text.begin(), s.text.end(), [](char ch) { return ch != ' '; });
    const auto words = 1 + std::count(s.text.begin(), s.text.end(), ' ');
    CHECK(std::count(s.eoc.begin(), s.eoc.end(), 1) == chars);
    CHECK(std::count(s.bow.begin(), s.bow.end(), 1) == words);
    CHECK(s.length() == static_cast<std::size_t>(chars) * cfg.points_per_glyph);
  }
}
