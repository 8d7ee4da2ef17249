// Copyright 2026 The ink authors. Apache 2.0 License.
//
// Acceptance gate. Runs each end-to-end criterion once and prints one
// PASS/FAIL line per criterion; the exit status is nonzero if any failed.

#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "ink/core/error.hpp"
#include "ink/data/corpus_io.hpp"
#include "ink/data/preprocess.hpp"
#include "ink/model/checkpoint.hpp"
#include "ink/synth/synth_corpus.hpp"
#include "ink/train/trainer.hpp"
#include "ink/verify/gradcheck_suite.hpp"
#include "oracles.hpp"
#include "xml_check.hpp"

using namespace ink;
namespace fs = std::filesystem;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), f, v);
  return buf;
}

// Desk-scale corpus shared by the training criteria: alphabet "abcde",
// 4 authors, 40 samples each.
struct DeskData {
  Corpus corpus;
  NormStats stats;
  std::vector<EncodedSequence> train;
};

const DeskData& desk_data() {
  static const DeskData d = [] {
    GeneratorConfig g;
    g.seed = 7;
    DeskData out;
    out.corpus = split_corpus(generate_corpus(g));
    out.stats = compute_stats(out.corpus).stats;
    out.train = encode_corpus(out.corpus, out.stats);
    return out;
  }();
  return d;
}

CvrnnConfig desk_model_config() {
  CvrnnConfig c;
  c.hidden_size = 32;
  c.latent_dim = 8;
  c.gmm_dim = 8;
  c.ff_width = 32;
  c.alphabet_size = 5;
  return c;
}

std::optional<CvrnnModel> g_overfit_model;

// 1 ----------------------------------------------------------------------------
Outcome gradient_integrity() {
  const auto start = Clock::now();
  const std::vector<SuiteResult> results = gradcheck_suite(1e-3, 0, SuiteModelSize{4, 8, 3, 4});
  const double secs = seconds_since(start);
  double worst = 0;
  std::string worst_name;
  bool all = true;
  for (const SuiteResult& r : results) {
    all = all && r.passed && r.entries > 0;
    if (r.max_rel_error >= worst) {
      worst = r.max_rel_error;
      worst_name = r.name;
    }
  }
  return {all && worst < 1e-3 && secs < 120,
          std::to_string(results.size()) + " checks, max rel error " + fmt("%.2e", worst) + " (" +
              worst_name + "), " + fmt("%.1f", secs) + " s"};
}

// 2 ----------------------------------------------------------------------------
Outcome kl_correctness() {
  Rng rng(2);
  double worst = 0;
  for (int i = 0; i < 20; ++i) {
    const auto [q, p] = oracle::random_gaussian_pair(rng, 1 + rng.index(4));
    const double exact = gaussian_kl(q, p);
    worst = std::max(worst, std::abs(oracle::mc_gaussian_kl(q, p, 1000000, rng) - exact) / exact);
    const auto [a, b] = oracle::random_categorical_pair(rng, 2 + rng.index(5));
    const double cexact = categorical_kl(a, b);
    worst = std::max(worst,
                     std::abs(oracle::mc_categorical_kl(a, b, 1000000, rng) - cexact) / cexact);
  }
  std::size_t negative = 0;
  for (int i = 0; i < 10000; ++i) {
    const auto [q, p] = oracle::random_gaussian_pair(rng, 1 + rng.index(8));
    negative += gaussian_kl(q, p) < 0;
    negative += gaussian_kl(q, q) < 0;
    const auto [a, b] = oracle::random_categorical_pair(rng, 2 + rng.index(8));
    negative += categorical_kl(a, b) < 0;
    negative += categorical_kl(a, a) < 0;
  }
  return {worst < 0.01 && negative == 0,
          "max MC deviation " + fmt("%.3f%%", 100 * worst) + " over 20+20 pairs, " +
              std::to_string(negative) + " negative values over 10^4 pairs"};
}

// 3 ----------------------------------------------------------------------------
Outcome preprocessing_exactness() {
  Rng rng(3);
  double worst = 0;
  for (int i = 0; i < 1000; ++i) {
    InkSample s;
    const std::size_t t = 1 + rng.index(400);
    for (std::size_t k = 0; k < t; ++k) {
      s.points.push_back({rng.uniform(-2000, 2000), rng.uniform(-2000, 2000),
                          rng.uniform() < 0.1 ? 1 : 0});
      s.y.push_back(0);
      s.eoc.push_back(k + 1 == t);
      s.bow.push_back(k == 0);
    }
    const NormStats stats{{rng.uniform(-5, 5), rng.uniform(-5, 5)},
                          {rng.uniform(0.01, 50), rng.uniform(0.01, 50)}};
    const InkSample back =
        from_model_space(to_model_space(s, stats), stats, {s.points[0].u, s.points[0].v});
    for (std::size_t k = 0; k < t; ++k) {
      worst = std::max({worst, std::abs(back.points[k].u - s.points[k].u),
                        std::abs(back.points[k].v - s.points[k].v)});
      if (back.points[k].pen != s.points[k].pen) worst = INFINITY;
    }
  }

  // Label runs: inside every part, each maximal run of equal labels ends on
  // an end-of-character point, except where a hard cut was reported.
  const Alphabet abc("abc");
  std::size_t violations = 0;
  std::size_t parts = 0;
  std::size_t hard = 0;
  for (int i = 0; i < 1000; ++i) {
    InkSample s;
    const std::size_t chars = 1 + rng.index(40);
    int label = static_cast<int>(rng.index(3));
    for (std::size_t c = 0; c < chars; ++c) {
      const std::size_t len = 1 + rng.index(i % 50 == 0 ? 400 : 40);
      label = (label + 1 + static_cast<int>(rng.index(2))) % 3;
      for (std::size_t k = 0; k < len; ++k) {
        s.points.push_back({static_cast<Real>(s.points.size()), 0, k + 1 == len});
        s.y.push_back(label);
        s.eoc.push_back(k + 1 == len);
        s.bow.push_back(s.points.size() == 1);
      }
    }
    const SplitResult r = split_long_samples(s, abc);
    hard += r.hard_split;
    std::vector<StrokePoint> joined;
    for (const InkSample& part : r.parts) {
      ++parts;
      if (part.length() > kMaxStrokes) ++violations;
      joined.insert(joined.end(), part.points.begin(), part.points.end());
      for (std::size_t k = 0; k < part.length(); ++k) {
        const bool run_end = k + 1 == part.length() || part.y[k + 1] != part.y[k];
        if (run_end && part.eoc[k] != 1 && !(r.hard_split && k + 1 == part.length())) {
          ++violations;
        }
      }
    }
    if (joined != s.points) ++violations;
  }
  return {worst < 1e-9 && violations == 0,
          "round trip max error " + fmt("%.2e", worst) + " on 1000 sequences; " +
              std::to_string(parts) + " split parts, " + std::to_string(hard) +
              " hard-split samples, " + std::to_string(violations) + " violations"};
}

// 4 ----------------------------------------------------------------------------
Outcome overfit_convergence() {
  const DeskData& d = desk_data();
  CvrnnModel model(desk_model_config(), 1);
  TrainConfig cfg;
  cfg.lr0 = 0.005;
  cfg.batch_size = 8;
  cfg.epochs = 1000;
  cfg.max_steps = 500;
  cfg.seed = 3;

  double min_kl = INFINITY;
  StepFn step = [&](std::span<const EncodedSequence> batch, std::uint64_t seed, double w) {
    TrainStepOptions o;
    o.kl_weight = static_cast<Real>(w);
    o.seed = seed;
    TrainStepResult r = training_step(model, batch, o);
    min_kl = std::min({min_kl, r.min_step_kl_z, r.min_step_kl_pi});
    return StepOutcome{r.loss, std::move(r.grads)};
  };
  std::vector<StepRecord> records;
  TrainHooks hooks;
  hooks.on_step = [&](const StepRecord& r) { records.push_back(r); };
  AdamState adam(model.params());
  TrainProgress progress;
  const auto start = Clock::now();
  run_training(model.params(), adam, progress, d.train, cfg, step, hooks);
  const double secs = seconds_since(start);

  double first = 0;
  for (std::size_t i = 0; i < 10; ++i) first += records[i].loss.total / 10;
  const double last = records.back().loss.total;
  const double ratio = last / first;
  g_overfit_model.emplace(model);
  return {records.size() == 500 && ratio <= 0.2 && min_kl >= 0 && secs < 600,
          std::to_string(d.train.size()) + " sequences, " + std::to_string(records.size()) +
              " steps, loss " + fmt("%.2f", first) + " -> " + fmt("%.2f", last) + " (ratio " +
              fmt("%.3f", ratio) + "), min step KL " + fmt("%.2e", min_kl) + ", " +
              fmt("%.1f", secs) + " s"};
}

// 5 ----------------------------------------------------------------------------
Outcome sampling_contract() {
  if (!g_overfit_model) return {false, "no trained model (criterion 4 did not run)"};
  const CvrnnModel& model = *g_overfit_model;
  const Alphabet& alphabet = desk_data().corpus.alphabet;
  SamplingConfig sc;
  sc.seed = 1;
  const SampleResult r = sample_text(model, alphabet, "ab ab", CvrnnState::zeros(model.config()), sc);
  const auto& s = r.strokes;
  const auto bows = std::count(s.bow.begin(), s.bow.end(), 1);
  const auto eocs = std::count(s.eoc.begin(), s.eoc.end(), 1);
  std::vector<int> order;
  for (std::size_t t = 0; t < s.length(); ++t) {
    if (s.eoc[t]) order.push_back(s.y[t]);
  }
  const std::vector<int> expected{static_cast<int>(alphabet.index('a')),
                                  static_cast<int>(alphabet.index('b')),
                                  static_cast<int>(alphabet.index('a')),
                                  static_cast<int>(alphabet.index('b'))};
  const bool sampled_ok = bows == 2 && eocs == 4 && order == expected && s.length() >= 4 &&
                          s.length() <= 4 * sc.max_strokes_per_char;

  CvrnnModel stub = model;
  Array& w = stub.params().at("output/out/w");
  for (std::size_t k = 0; k < w.cols(); ++k) w.at(6, k) = 0;
  stub.params().at("output/out/b")[6] = 50;
  const SampleResult forced =
      sample_text(stub, alphabet, "ab ab", CvrnnState::zeros(model.config()), sc);
  const bool stub_ok = forced.strokes.length() == 4 && !forced.partial;

  return {sampled_ok && stub_ok,
          "\"ab ab\": " + std::to_string(s.length()) + " strokes, bow=1 x" + std::to_string(bows) +
              ", characters advanced " + std::to_string(order.size()) +
              (r.partial ? " (partial)" : "") + "; eoc stub: " +
              std::to_string(forced.strokes.length()) + " strokes"};
}

// 6 ----------------------------------------------------------------------------
Outcome recognizer() {
  const DeskData& d = desk_data();
  GeneratorConfig held;
  held.seed = 8;
  held.samples_per_author = 10;
  const std::vector<EncodedSequence> test =
      encode_corpus(split_corpus(generate_corpus(held)), d.stats);

  TrainConfig cfg;
  cfg.lr0 = 0.005;
  cfg.epochs = 30;
  cfg.batch_size = 16;
  cfg.seed = 3;
  double acc[2] = {0, 0};
  double secs[2] = {0, 0};
  for (int bi = 1; bi >= 0; --bi) {
    ClassifierConfig cc;
    cc.hidden_size = 32;
    cc.bidirectional = bi == 1;
    ClassifierModel model(cc, 1);
    const auto start = Clock::now();
    train_classifier(model, d.train, d.corpus.alphabet, d.stats, cfg, {});
    secs[bi] = seconds_since(start);
    acc[bi] = stroke_accuracy(model, test);
  }
  return {acc[1] >= 0.9 && acc[1] > acc[0] && secs[1] < 600,
          "held-out stroke accuracy bidirectional " + fmt("%.4f", acc[1]) + " (" +
              fmt("%.1f", secs[1]) + " s), unidirectional " + fmt("%.4f", acc[0]) + " on " +
              std::to_string(test.size()) + " sequences"};
}

// 7 ----------------------------------------------------------------------------
Outcome decoder_purity() {
  const CvrnnConfig cfg = desk_model_config();
  const CvrnnModel model(cfg, 11);
  Rng rng(7);
  std::size_t mismatches = 0;
  std::size_t leaks = 0;
  const int trials = 1000;
  for (int i = 0; i < trials; ++i) {
    std::vector<Real> z(cfg.latent_dim);
    std::vector<Real> phi(cfg.gmm_dim);
    for (auto& v : z) v = rng.normal();
    for (auto& v : phi) v = rng.normal();
    const bool bow = rng.uniform() < 0.5;
    const StepOutput ref = decode_step(model, z, phi, bow);

    Graph g(model.params());
    const CvrnnNet net = CvrnnNet::bind(g, model);
    CvrnnState state = CvrnnState::zeros(cfg);
    for (Real& v : state.latent_h.data()) v = rng.uniform(-1, 1);
    for (Real& v : state.latent_c.data()) v = rng.uniform(-3, 3);
    const CvrnnStateVars sv = state.bind(g);
    (void)prior_step(net, sv);
    const StepOutputVars out =
        decode_step(net, g.constant(Array::vector(z)), g.constant(Array::vector(phi)), bow);
    const bool same = out.mu.value()[0] == ref.coords.mu[0] &&
                      out.mu.value()[1] == ref.coords.mu[1] &&
                      out.sigma.value()[0] == ref.coords.sigma[0] &&
                      out.sigma.value()[1] == ref.coords.sigma[1] &&
                      out.rho.value()[0] == ref.coords.rho && out.pen.value()[0] == ref.pen.p() &&
                      out.eoc.value()[0] == ref.eoc.p();
    mismatches += !same;
    if (i % 100 == 0) {
      const Gradients grads =
          g.backward(sum(out.mu) + sum(out.sigma) + sum(out.rho) + sum(out.pen) + sum(out.eoc));
      for (std::size_t k = 0; k < model.params().size(); ++k) {
        if (model.params().name(k).rfind("output/", 0) == 0) continue;
        for (Real v : grads[k].data()) leaks += v != 0;
      }
    }
  }
  return {mismatches == 0 && leaks == 0,
          std::to_string(trials) + " latent-state perturbations, " + std::to_string(mismatches) +
              " output differences, " + std::to_string(leaks) +
              " nonzero gradients outside the decoder"};
}

// 8 ----------------------------------------------------------------------------
Outcome determinism_and_checkpoint() {
  const DeskData& d = desk_data();
  TrainConfig cfg;
  cfg.batch_size = 8;
  cfg.max_steps = 10;
  cfg.seed = 5;

  auto run = [&](const TrainConfig& c, CvrnnModel& m, const TrainOutputs& out,
                 const Checkpoint* resume) {
    return train_cvrnn(m, d.train, d.corpus.alphabet, d.stats, c, out, resume);
  };
  auto logs = [](const TrainResult& r) {
    std::string text;
    for (StepRecord rec : r.records) {
      rec.wall_ms = 0;
      text += metrics_line(rec);
    }
    return text;
  };
  CvrnnModel a(desk_model_config(), 1);
  CvrnnModel b(desk_model_config(), 1);
  const TrainResult ra = run(cfg, a, {}, nullptr);
  const TrainResult rb = run(cfg, b, {}, nullptr);
  const bool identical = ra.records.size() == 10 && logs(ra) == logs(rb);

  const fs::path dir = fs::temp_directory_path() / "ink_acceptance_ckpt";
  fs::create_directories(dir);
  TrainConfig head = cfg;
  head.max_steps = 5;
  CvrnnModel c(desk_model_config(), 1);
  const TrainOutputs out{(dir / "m.ckpt").string(), ""};
  run(head, c, out, nullptr);
  const Checkpoint ckpt = load_checkpoint(out.checkpoint_path);
  CvrnnModel resumed = cvrnn_from_checkpoint(ckpt);
  TrainConfig next = cfg;
  next.max_steps = 6;
  const TrainResult rr = run(next, resumed, {}, &ckpt);
  fs::remove_all(dir);
  const bool resumed_ok = rr.records.size() == 1 && rr.records[0].step == 5 &&
                          rr.records[0].loss == ra.records[5].loss;
  return {identical && resumed_ok,
          std::string("10-step logs ") + (identical ? "bit-identical" : "DIFFER") +
              "; step-5 loss after reload " + fmt("%.17g", rr.records.empty() ? NAN : rr.records[0].loss.total) +
              " vs uninterrupted " + fmt("%.17g", ra.records.size() > 5 ? ra.records[5].loss.total : NAN)};
}

// 9 ----------------------------------------------------------------------------
Outcome lr_schedule_values() {
  const TrainConfig cfg;
  const double a = lr_schedule(0, cfg);
  const double b = lr_schedule(1000, cfg);
  const double c = lr_schedule(2500, cfg);
  return {a == 0.001 && b == 0.00096 && c == 0.0009216,
          fmt("%.17g", a) + " / " + fmt("%.17g", b) + " / " + fmt("%.17g", c)};
}

// 10 ---------------------------------------------------------------------------
Outcome cli_pipeline() {
  const fs::path dir = fs::temp_directory_path() / "ink_acceptance_cli";
  fs::remove_all(dir);
  fs::create_directories(dir);
  auto p = [&](const char* name) { return (dir / name).string(); };
  const std::vector<std::string> steps = {
      "corpus-gen --alphabet abcde --authors 4 --samples 40 --seed 7 --out " + p("corpus.json"),
      "preprocess --corpus " + p("corpus.json") + " --out " + p("train.json") + " --stats-out " +
          p("stats.json"),
      "train --corpus " + p("train.json") + " --stats " + p("stats.json") + " --out " +
          p("model.ckpt") + " --metrics " + p("metrics.jsonl") + " --epochs 30",
      "sample --model " + p("model.ckpt") + " --text \"ab ab\" --seed 1 --out " + p("sample.json"),
      "render --input " + p("sample.json") + "#0 --out " + p("sample.svg"),
  };
  const auto start = Clock::now();
  for (const std::string& args : steps) {
    const std::string cmd = std::string(INK_CLI_PATH) + " " + args + " >" + p("log.txt") + " 2>&1";
    const int status = std::system(cmd.c_str());
    if (!WIFEXITED(status) || WEXITSTATUS(status) != 0) {
      return {false, "command failed: ink " + args.substr(0, args.find(' ')) + ": " +
                         read_file(p("log.txt"))};
    }
  }
  const double secs = seconds_since(start);
  const std::string svg = read_file(p("sample.svg"));
  std::size_t polylines = 0;
  for (auto at = svg.find("<polyline"); at != std::string::npos; at = svg.find("<polyline", at + 1)) {
    ++polylines;
  }
  const bool ok = xml_check::well_formed(svg) && polylines >= 1 && secs < 900;
  fs::remove_all(dir);
  return {ok, std::to_string(polylines) + " polylines in a " +
                  (xml_check::well_formed(svg) ? "well-formed" : "malformed") + " SVG, " +
                  fmt("%.1f", secs) + " s"};
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {"gradient integrity", gradient_integrity},
      {"KL correctness", kl_correctness},
      {"preprocessing exactness", preprocessing_exactness},
      {"overfit convergence", overfit_convergence},
      {"conditional sampling", sampling_contract},
      {"recognizer accuracy", recognizer},
      {"decoder purity", decoder_purity},
      {"determinism and checkpointing", determinism_and_checkpoint},
      {"learning-rate schedule", lr_schedule_values},
      {"end-to-end CLI", cli_pipeline},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.pass;
    std::printf("%s  %2zu %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].name,
                o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
