// Copyright 2026 The ink authors. Apache 2.0 License.

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "doctest.h"
#include "ink/core/error.hpp"
#include "ink/core/grad_check.hpp"
#include "ink/model/classifier.hpp"

using namespace ink;
using doctest::Approx;

namespace {

ClassifierConfig small_config() {
  ClassifierConfig c;
  c.hidden_size = 5;
  c.layers = 2;
  c.projection_size = 4;
  c.alphabet_size = 5;
  return c;
}

EncodedSequence random_sequence(Rng& rng, std::size_t t, std::size_t k) {
  EncodedSequence s;
  for (std::size_t i = 0; i < t; ++i) {
    s.deltas.push_back({rng.normal(), rng.normal(), rng.uniform() < 0.3 ? Real(1) : Real(0)});
    s.y.push_back(static_cast<int>((i / 3) % k));
    s.eoc.push_back(i % 3 == 2 || i + 1 == t ? 1 : 0);
    s.bow.push_back(i == 0 ? 1 : 0);
  }
  return s;
}

EncodedSequence reversed(EncodedSequence s) {
  std::reverse(s.deltas.begin(), s.deltas.end());
  std::reverse(s.y.begin(), s.y.end());
  return s;
}

// Exchanges the two halves of every column block of width 2 * half.
void swap_column_halves(Array& w, std::size_t half) {
  for (std::size_t r = 0; r < w.rows(); ++r) {
    for (std::size_t c = 0; c < half; ++c) std::swap(w.at(r, c), w.at(r, c + half));
  }
}

}  // namespace

TEST_CASE("zero parameters give uniform predictions") {
  const ClassifierModel m = ClassifierModel::zeros(small_config());
  Rng rng(1);
  const EncodedSequence seq = random_sequence(rng, 9, 5);
  const std::vector<Categorical> out = classify(m, seq);
  REQUIRE(out.size() == 9);
  for (const Categorical& c : out) {
    for (Real p : c.probs()) CHECK(p == Approx(0.2).epsilon(1e-15));
  }
  CHECK(classifier_loss(m, seq) == Approx(1.6094379124341003).epsilon(1e-12));
}

TEST_CASE("confident correct predictions give near-zero loss") {
  ClassifierModel m = ClassifierModel::zeros(small_config());
  m.params().at("output/b")[2] = 50;
  Rng rng(2);
  EncodedSequence seq = random_sequence(rng, 6, 5);
  std::fill(seq.y.begin(), seq.y.end(), 2);
  CHECK(classifier_loss(m, seq) < 1e-15);
}

TEST_CASE("output length and empty input") {
  const ClassifierModel m(small_config(), 3);
  Rng rng(4);
  for (std::size_t t = 1; t < 12; ++t) CHECK(classify(m, random_sequence(rng, t, 5)).size() == t);
  CHECK_THROWS_AS(classify(m, EncodedSequence{}), DataError);
  EncodedSequence bad = random_sequence(rng, 4, 5);
  bad.y.pop_back();
  CHECK_THROWS_AS(classifier_loss(m, bad), DataError);
}

TEST_CASE("reversing the input mirrors the predictions when directions swap") {
  const ClassifierConfig cfg = small_config();
  const ClassifierModel m(cfg, 5);
  ParamStore swapped = m.params();
  const std::size_t h = cfg.hidden_size;
  for (std::size_t n = 0; n < cfg.layers; ++n) {
    const std::string fwd = "layer" + std::to_string(n) + "/forward/";
    const std::string bwd = "layer" + std::to_string(n) + "/backward/";
    for (const char* part : {"wx", "wh", "b"}) {
      std::swap(swapped.at(fwd + part), swapped.at(bwd + part));
    }
    if (n > 0) {
      swap_column_halves(swapped.at(fwd + "wx"), h);
      swap_column_halves(swapped.at(bwd + "wx"), h);
    }
  }
  swap_column_halves(swapped.at("projection/w"), h);
  const ClassifierModel mirror(cfg, swapped);

  Rng rng(6);
  for (int trial = 0; trial < 5; ++trial) {
    const EncodedSequence seq = random_sequence(rng, 3 + rng.index(10), 5);
    const std::vector<Categorical> a = classify(m, seq);
    const std::vector<Categorical> b = classify(mirror, reversed(seq));
    const std::size_t t = a.size();
    for (std::size_t i = 0; i < t; ++i) {
      for (std::size_t k = 0; k < 5; ++k) {
        CHECK(a[i].probs()[k] == Approx(b[t - 1 - i].probs()[k]).epsilon(1e-13));
      }
    }
  }
}

TEST_CASE("bidirectional predictions depend on future input") {
  const ClassifierConfig cfg = small_config();
  ClassifierConfig uni_cfg = cfg;
  uni_cfg.bidirectional = false;
  const ClassifierModel bi(cfg, 7);
  const ClassifierModel uni(uni_cfg, 7);
  CHECK_THROWS_AS(uni.backward_cell(0), ContractError);
  Rng rng(8);
  const EncodedSequence seq = random_sequence(rng, 8, 5);
  EncodedSequence tail = seq;
  tail.deltas.back() = {4, 4, 1};
  CHECK(classify(bi, seq)[0].probs() != classify(bi, tail)[0].probs());
  CHECK(classify(uni, seq)[0].probs() == classify(uni, tail)[0].probs());
}

TEST_CASE("loss gradient matches finite differences") {
  ClassifierModel m(small_config(), 9);
  Rng rng(10);
  const EncodedSequence seq = random_sequence(rng, 5, 5);
  Graph g(m.params());
  Var loss = classifier_loss(g, m, seq);
  GradCheckOptions o;
  o.max_entries = 300;
  const GradCheckReport r = grad_check(g, loss, m.params(), o);
  CHECK(r.max_rel_error < 1e-4);
}

TEST_CASE("batch loss is invariant to batch order") {
  const ClassifierModel m(small_config(), 11);
  Rng rng(12);
  std::vector<EncodedSequence> batch;
  for (int i = 0; i < 4; ++i) batch.push_back(random_sequence(rng, 3 + i, 5));
  const double a = classifier_training_step(m, batch).loss;
  std::reverse(batch.begin(), batch.end());
  CHECK(classifier_training_step(m, batch).loss == Approx(a).epsilon(1e-14));
}

TEST_CASE("loss decreases while overfitting a single sample") {
  ClassifierModel m(small_config(), 13);
  Rng rng(14);
  const std::vector<EncodedSequence> batch{random_sequence(rng, 12, 5)};
  double previous = classifier_training_step(m, batch).loss;
  for (int step = 0; step < 20; ++step) {
    const ClassifierStepResult r = classifier_training_step(m, batch);
    for (std::size_t i = 0; i < m.params().size(); ++i) {
      auto p = m.params().at(i).data();
      auto g = r.grads[i].data();
      for (std::size_t j = 0; j < p.size(); ++j) p[j] -= 0.05 * g[j];
    }
    const double now = classifier_training_step(m, batch).loss;
    CHECK(now < previous);
    previous = now;
  }
}

TEST_CASE("config checks") {
  ClassifierConfig c = small_config();
  CHECK(ClassifierConfig::from_json(c.to_json()).to_json() == c.to_json());
  c.layers = 0;
  CHECK_THROWS_AS(c.validate(), ContractError);
  const ClassifierConfig full = ClassifierConfig::full_scale(69);
  CHECK(full.hidden_size == 512);
  CHECK(full.projection_size == 256);
  CHECK(full.layers == 3);
}
