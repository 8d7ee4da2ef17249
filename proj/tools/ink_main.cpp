// Copyright 2026 The ink authors. Apache 2.0 License.
//
// `ink` command-line tool. Exit codes: 0 success, 1 usage, 2 data or schema
// error, 3 numeric failure. Failures print one line "error[<kind>]: ..." to
// stderr. Every output file is written to a temporary name and renamed.

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ink/core/error.hpp"
#include "ink/data/corpus_io.hpp"
#include "ink/data/preprocess.hpp"
#include "ink/data/report.hpp"
#include "ink/data/svg.hpp"
#include "ink/model/checkpoint.hpp"
#include "ink/model/classifier.hpp"
#include "ink/model/cvrnn.hpp"
#include "ink/synth/synth_corpus.hpp"
#include "ink/train/trainer.hpp"
#include "ink/verify/gradcheck_suite.hpp"

namespace {

using namespace ink;

struct UsageError : Error {
  using Error::Error;
};

void warn(const std::string& msg) { std::cerr << "warning: " << msg << "\n"; }

// "file.json#3" -> sample 3 of file.json; a bare path selects sample 0.
std::pair<Corpus, std::size_t> load_selected(const std::string& selector) {
  std::string path = selector;
  std::size_t index = 0;
  if (auto hash = selector.rfind('#'); hash != std::string::npos) {
    path = selector.substr(0, hash);
    const std::string digits = selector.substr(hash + 1);
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos) {
      throw UsageError("bad sample selector '" + selector + "' (expected file.json#index)");
    }
    index = std::stoul(digits);
  }
  Corpus corpus = load_corpus(path);
  if (index >= corpus.samples.size()) {
    throw DataError("sample index " + std::to_string(index) + " out of range for '" + path +
                    "' (" + std::to_string(corpus.samples.size()) + " samples)");
  }
  return {std::move(corpus), index};
}

void write_single(const std::string& path, const Alphabet& alphabet, InkSample sample) {
  Corpus out;
  out.alphabet = alphabet;
  out.samples.push_back(std::move(sample));
  save_corpus(out, path);
}

void check_alphabet(const Alphabet& model, const Alphabet& data) {
  if (!(model == data)) {
    throw DataError("alphabet mismatch: model '" + model.symbols() + "', data '" +
                    data.symbols() + "'");
  }
}

// ---------------------------------------------------------------------------

struct CorpusGenArgs {
  GeneratorConfig gen;
  std::string out;
};

int run_corpus_gen(const CorpusGenArgs& a) {
  save_corpus(generate_corpus(a.gen), a.out);
  return 0;
}

struct StatsArgs {
  std::string corpus;
  std::string out;
};

int run_stats(const StatsArgs& a) {
  const Corpus corpus = load_corpus(a.corpus);
  nlohmann::json report = report_to_json(corpus_report(corpus));
  if (!corpus.samples.empty()) {
    const StatsResult stats = compute_stats(corpus);
    if (stats.any_degenerate()) warn("degenerate delta axis; std raised to the floor");
    report["norm_stats"] = stats_to_json(stats.stats);
    if (!a.out.empty()) save_stats(stats.stats, a.out);
  } else if (!a.out.empty()) {
    throw DataError("cannot compute statistics of an empty corpus");
  }
  std::cout << report.dump(2) << "\n";
  return 0;
}

struct PreprocessArgs {
  std::string corpus;
  std::string out;
  std::string stats_out;
  std::size_t max_strokes = kMaxStrokes;
};

int run_preprocess(const PreprocessArgs& a) {
  const Corpus corpus = load_corpus(a.corpus);
  std::size_t hard = 0;
  const Corpus split = split_corpus(corpus, a.max_strokes, &hard);
  if (hard > 0) warn(std::to_string(hard) + " sample(s) cut without an end-of-character mark");
  const StatsResult stats = compute_stats(split);
  if (stats.any_degenerate()) warn("degenerate delta axis; std raised to the floor");
  save_corpus(split, a.out);
  save_stats(stats.stats, a.stats_out);
  std::cout << split.samples.size() << " samples (" << corpus.samples.size() << " before split)\n";
  return 0;
}

struct TrainArgs {
  std::string corpus;
  std::string stats;
  std::string out;
  std::string metrics;
  std::string resume;
  TrainConfig train;
  bool no_clip = false;
  std::size_t hidden = 32;
  std::size_t latent = 8;
  std::size_t gmm = 8;
  std::size_t ff = 32;
  std::size_t layers = 3;
  std::size_t projection = 16;
  bool unidirectional = false;
  std::string eval;
  std::uint64_t model_seed = 1;
};

struct LoadedData {
  Corpus corpus;
  NormStats stats;
  std::vector<EncodedSequence> encoded;
};

LoadedData load_training_data(const std::string& corpus_path, const std::string& stats_path) {
  LoadedData d;
  d.corpus = load_corpus(corpus_path);
  d.stats = load_stats(stats_path);
  d.encoded = encode_corpus(d.corpus, d.stats);
  return d;
}

TrainConfig resumed_config(const Checkpoint& ckpt, const TrainArgs& a, const CLI::App& cmd) {
  if (!ckpt.state.contains("train_config")) throw DataError("checkpoint has no training state");
  TrainConfig cfg = TrainConfig::from_json(ckpt.state.at("train_config"));
  if (cmd.count("--epochs") > 0) cfg.epochs = a.train.epochs;
  if (cmd.count("--max-steps") > 0) cfg.max_steps = a.train.max_steps;
  return cfg;
}

void print_summary(const TrainResult& r) {
  if (r.records.empty()) {
    std::cout << "no steps run\n";
    return;
  }
  std::printf("%llu steps, final total %.6g\n",
              static_cast<unsigned long long>(r.progress.step), r.records.back().loss.total);
}

int run_train(TrainArgs a, const CLI::App& cmd) {
  LoadedData d = load_training_data(a.corpus, a.stats);
  if (a.no_clip) a.train.clip_norm = 0;
  const TrainOutputs outputs{a.out, a.metrics};
  if (!a.resume.empty()) {
    const Checkpoint ckpt = load_checkpoint(a.resume);
    CvrnnModel model = cvrnn_from_checkpoint(ckpt);
    check_alphabet(ckpt.alphabet, d.corpus.alphabet);
    print_summary(train_cvrnn(model, d.encoded, ckpt.alphabet, ckpt.stats,
                              resumed_config(ckpt, a, cmd), outputs, &ckpt));
    return 0;
  }
  CvrnnConfig cfg;
  cfg.hidden_size = a.hidden;
  cfg.latent_dim = a.latent;
  cfg.gmm_dim = a.gmm;
  cfg.ff_width = a.ff;
  cfg.alphabet_size = d.corpus.alphabet.size();
  CvrnnModel model(cfg, a.model_seed);
  print_summary(train_cvrnn(model, d.encoded, d.corpus.alphabet, d.stats, a.train, outputs));
  return 0;
}

int run_train_classifier(TrainArgs a, const CLI::App& cmd) {
  LoadedData d = load_training_data(a.corpus, a.stats);
  if (a.no_clip) a.train.clip_norm = 0;
  const TrainOutputs outputs{a.out, a.metrics};
  std::optional<ClassifierModel> model;
  if (!a.resume.empty()) {
    const Checkpoint ckpt = load_checkpoint(a.resume);
    model.emplace(classifier_from_checkpoint(ckpt));
    check_alphabet(ckpt.alphabet, d.corpus.alphabet);
    print_summary(train_classifier(*model, d.encoded, ckpt.alphabet, ckpt.stats,
                                   resumed_config(ckpt, a, cmd), outputs, &ckpt));
  } else {
    ClassifierConfig cfg;
    cfg.hidden_size = a.hidden;
    cfg.layers = a.layers;
    cfg.projection_size = a.projection;
    cfg.alphabet_size = d.corpus.alphabet.size();
    cfg.bidirectional = !a.unidirectional;
    model.emplace(cfg, a.model_seed);
    print_summary(train_classifier(*model, d.encoded, d.corpus.alphabet, d.stats, a.train,
                                   outputs));
  }
  std::printf("train accuracy %.4f\n", stroke_accuracy(*model, d.encoded));
  if (!a.eval.empty()) {
    const Corpus eval = load_corpus(a.eval);
    check_alphabet(d.corpus.alphabet, eval.alphabet);
    std::printf("eval accuracy %.4f\n", stroke_accuracy(*model, encode_corpus(eval, d.stats)));
  }
  return 0;
}

struct SampleArgs {
  std::string model;
  std::string text;
  std::string out;
  std::string svg;
  std::string style_ref;
  SamplingConfig sampling;
};

int run_sample(const SampleArgs& a) {
  const Checkpoint ckpt = load_checkpoint(a.model);
  const CvrnnModel model = cvrnn_from_checkpoint(ckpt);
  CvrnnState initial = CvrnnState::zeros(model.config());
  if (!a.style_ref.empty()) {
    auto [ref, index] = load_selected(a.style_ref);
    check_alphabet(ckpt.alphabet, ref.alphabet);
    initial = style_state(model, to_model_space(ref.samples[index], ckpt.stats), a.sampling.seed);
  }
  const SampleResult r = sample_text(model, ckpt.alphabet, a.text, initial, a.sampling);
  if (r.partial) warn("a character hit the stroke cap; the result is partial");
  InkSample sample = from_model_space(r.strokes, ckpt.stats);
  sample.author = a.style_ref.empty() ? "sample" : "transfer";
  sample.text = text_from_labels(ckpt.alphabet, sample.y, sample.eoc, sample.bow);
  if (!a.svg.empty()) write_file_atomic(a.svg, render_svg(sample));
  write_single(a.out, ckpt.alphabet, std::move(sample));
  std::cout << r.strokes.length() << " points\n";
  return 0;
}

struct ReconstructArgs {
  std::string model;
  std::string input;
  std::string classifier;
  std::string out;
  std::string svg;
  bool greedy = false;
  std::uint64_t seed = 0;
};

int run_reconstruct(const ReconstructArgs& a) {
  const Checkpoint ckpt = load_checkpoint(a.model);
  const CvrnnModel model = cvrnn_from_checkpoint(ckpt);
  auto [corpus, index] = load_selected(a.input);
  check_alphabet(ckpt.alphabet, corpus.alphabet);
  const InkSample& src = corpus.samples[index];
  EncodedSequence seq = to_model_space(src, ckpt.stats);
  if (!a.classifier.empty()) {
    const Checkpoint cls_ckpt = load_checkpoint(a.classifier);
    const ClassifierModel cls = classifier_from_checkpoint(cls_ckpt);
    check_alphabet(cls_ckpt.alphabet, ckpt.alphabet);
    const auto dists = classify(cls, seq);
    for (std::size_t t = 0; t < dists.size(); ++t) seq.y[t] = static_cast<int>(dists[t].argmax());
  }
  const EncodedSequence rec = reconstruct(model, seq, a.greedy, a.seed);
  InkSample sample = from_model_space(rec, ckpt.stats, {src.points[0].u, src.points[0].v});
  sample.author = src.author;
  sample.text = text_from_labels(ckpt.alphabet, sample.y, sample.eoc, sample.bow);
  if (!a.svg.empty()) write_file_atomic(a.svg, render_svg(sample));
  write_single(a.out, ckpt.alphabet, std::move(sample));
  return 0;
}

struct RecognizeArgs {
  std::string model;
  std::string corpus;
  std::string out;
};

int run_recognize(const RecognizeArgs& a) {
  const Checkpoint ckpt = load_checkpoint(a.model);
  const ClassifierModel model = classifier_from_checkpoint(ckpt);
  const Corpus corpus = load_corpus(a.corpus);
  check_alphabet(ckpt.alphabet, corpus.alphabet);
  nlohmann::json samples = nlohmann::json::array();
  std::size_t hits = 0;
  std::size_t total = 0;
  for (std::size_t i = 0; i < corpus.samples.size(); ++i) {
    const InkSample& s = corpus.samples[i];
    if (s.length() == 0) continue;
    const auto dists = classify(model, to_model_space(s, ckpt.stats));
    std::vector<int> y;
    std::size_t correct = 0;
    for (std::size_t t = 0; t < dists.size(); ++t) {
      y.push_back(static_cast<int>(dists[t].argmax()));
      if (y.back() == s.y[t]) ++correct;
    }
    hits += correct;
    total += dists.size();
    const std::string text = text_from_labels(ckpt.alphabet, y, s.eoc, s.bow);
    std::cout << i << "\t" << s.text << "\t" << text << "\n";
    samples.push_back({{"index", i},
                       {"text", text},
                       {"y", y},
                       {"accuracy", static_cast<double>(correct) / static_cast<double>(dists.size())}});
  }
  const double acc = total == 0 ? 0.0 : static_cast<double>(hits) / static_cast<double>(total);
  std::printf("stroke accuracy %.4f\n", acc);
  if (!a.out.empty()) {
    write_file_atomic(a.out, nlohmann::json{{"accuracy", acc}, {"samples", samples}}.dump() + "\n");
  }
  return 0;
}

struct RenderArgs {
  std::string input;
  std::string out;
};

int run_render(const RenderArgs& a) {
  auto [corpus, index] = load_selected(a.input);
  write_file_atomic(a.out, render_svg(corpus.samples[index]));
  return 0;
}

struct GradcheckArgs {
  double tolerance = 1e-3;
  std::uint64_t seed = 0;
};

int run_gradcheck(const GradcheckArgs& a) {
  bool ok = true;
  for (const SuiteResult& r : gradcheck_suite(a.tolerance, a.seed)) {
    std::printf("%-22s max_rel_error %.3e  entries %4zu  %s\n", r.name.c_str(), r.max_rel_error,
                r.entries, r.passed ? "ok" : "FAIL");
    ok = ok && r.passed;
  }
  return ok ? 0 : 3;
}

void add_train_flags(CLI::App* cmd, TrainArgs& a) {
  cmd->add_option("--corpus", a.corpus, "Preprocessed corpus")->required();
  cmd->add_option("--stats", a.stats, "Normalization statistics")->required();
  cmd->add_option("--out", a.out, "Checkpoint path")->required();
  cmd->add_option("--metrics", a.metrics, "JSON-lines metrics path");
  cmd->add_option("--resume", a.resume, "Continue from this checkpoint");
  cmd->add_option("--epochs", a.train.epochs)->capture_default_str();
  cmd->add_option("--batch", a.train.batch_size)->capture_default_str();
  cmd->add_option("--lr", a.train.lr0)->capture_default_str();
  cmd->add_option("--decay-rate", a.train.decay_rate)->capture_default_str();
  cmd->add_option("--decay-interval", a.train.decay_interval)->capture_default_str();
  cmd->add_option("--clip", a.train.clip_norm, "Global gradient-norm bound")->capture_default_str();
  cmd->add_flag("--no-clip", a.no_clip, "Disable gradient clipping");
  cmd->add_option("--checkpoint-every", a.train.checkpoint_every, "Epochs between checkpoints");
  cmd->add_option("--max-steps", a.train.max_steps, "Stop after this many steps (0: no limit)");
  cmd->add_option("--seed", a.train.seed, "Shuffling and noise seed")->capture_default_str();
  cmd->add_option("--init-seed", a.model_seed, "Parameter initialization seed")
      ->capture_default_str();
  cmd->add_option("--hidden", a.hidden, "LSTM units")->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Handwriting synthesis, style transfer and recognition"};
  app.require_subcommand(1);

  CorpusGenArgs gen;
  auto* c_gen = app.add_subcommand("corpus-gen", "Generate a synthetic labelled corpus");
  c_gen->add_option("--alphabet", gen.gen.alphabet)->capture_default_str();
  c_gen->add_option("--authors", gen.gen.authors)->capture_default_str();
  c_gen->add_option("--samples", gen.gen.samples_per_author, "Samples per author")
      ->capture_default_str();
  c_gen->add_option("--points-per-glyph", gen.gen.points_per_glyph)->capture_default_str();
  c_gen->add_option("--max-word-length", gen.gen.max_word_length)->capture_default_str();
  c_gen->add_option("--max-words", gen.gen.max_words)->capture_default_str();
  c_gen->add_option("--seed", gen.gen.seed)->capture_default_str();
  c_gen->add_option("--out", gen.out)->required();

  StatsArgs stats;
  auto* c_stats = app.add_subcommand("stats", "Print corpus counts and delta statistics");
  c_stats->add_option("--corpus", stats.corpus)->required();
  c_stats->add_option("--out", stats.out, "Write normalization statistics here");

  PreprocessArgs pre;
  auto* c_pre = app.add_subcommand("preprocess", "Split long samples and compute statistics");
  c_pre->add_option("--corpus", pre.corpus)->required();
  c_pre->add_option("--out", pre.out, "Split corpus")->required();
  c_pre->add_option("--stats-out", pre.stats_out, "Normalization statistics")->required();
  c_pre->add_option("--max-strokes", pre.max_strokes)->capture_default_str();

  TrainArgs train;
  auto* c_train = app.add_subcommand("train", "Train the synthesis model");
  add_train_flags(c_train, train);
  c_train->add_option("--latent", train.latent, "Style latent size")->capture_default_str();
  c_train->add_option("--gmm", train.gmm, "Content embedding size")->capture_default_str();
  c_train->add_option("--ff", train.ff, "Feed-forward width")->capture_default_str();
  c_train->add_option("--kl-warmup", train.train.kl_warmup, "Linear KL warm-up steps")
      ->capture_default_str();

  TrainArgs train_cls;
  auto* c_cls = app.add_subcommand("train-classifier", "Train the character recognizer");
  add_train_flags(c_cls, train_cls);
  c_cls->add_option("--layers", train_cls.layers)->capture_default_str();
  c_cls->add_option("--projection", train_cls.projection)->capture_default_str();
  c_cls->add_flag("--unidirectional", train_cls.unidirectional, "Forward cells only");
  c_cls->add_option("--eval", train_cls.eval, "Held-out corpus to report accuracy on");

  SampleArgs sample;
  auto add_sample_flags = [](CLI::App* cmd, SampleArgs& a) {
    cmd->add_option("--model", a.model, "Synthesis checkpoint")->required();
    cmd->add_option("--text", a.text)->required();
    cmd->add_option("--out", a.out, "Output corpus JSON")->required();
    cmd->add_option("--svg", a.svg, "Also render to this SVG");
    cmd->add_option("--seed", a.sampling.seed)->capture_default_str();
    cmd->add_flag("--greedy", a.sampling.greedy, "Use distribution means");
    cmd->add_option("--eoc-threshold", a.sampling.eoc_threshold)->capture_default_str();
    cmd->add_option("--max-strokes-per-char", a.sampling.max_strokes_per_char)
        ->capture_default_str();
  };
  auto* c_sample = app.add_subcommand("sample", "Write text in a sampled style");
  add_sample_flags(c_sample, sample);
  c_sample->add_option("--style-ref", sample.style_ref, "Reference sample file.json#index");

  SampleArgs transfer;
  auto* c_transfer = app.add_subcommand("transfer", "Write text in a reference sample's style");
  add_sample_flags(c_transfer, transfer);
  c_transfer->add_option("--style-ref", transfer.style_ref, "Reference sample file.json#index")
      ->required();

  ReconstructArgs rec;
  auto* c_rec = app.add_subcommand("reconstruct", "Re-generate a sample from its own posterior");
  c_rec->add_option("--model", rec.model)->required();
  c_rec->add_option("--input", rec.input, "Sample file.json#index")->required();
  c_rec->add_option("--classifier", rec.classifier, "Take character labels from this recognizer");
  c_rec->add_option("--out", rec.out)->required();
  c_rec->add_option("--svg", rec.svg);
  c_rec->add_flag("--greedy", rec.greedy);
  c_rec->add_option("--seed", rec.seed)->capture_default_str();

  RecognizeArgs recog;
  auto* c_recog = app.add_subcommand("recognize", "Label every point of a corpus");
  c_recog->add_option("--model", recog.model, "Classifier checkpoint")->required();
  c_recog->add_option("--corpus", recog.corpus)->required();
  c_recog->add_option("--out", recog.out, "Predictions JSON");

  RenderArgs render;
  auto* c_render = app.add_subcommand("render", "Render one sample to SVG");
  c_render->add_option("--input", render.input, "Sample file.json#index")->required();
  c_render->add_option("--out", render.out)->required();

  GradcheckArgs gc;
  auto* c_gc = app.add_subcommand("gradcheck", "Finite-difference check of every operation");
  c_gc->add_option("--tolerance", gc.tolerance)->capture_default_str();
  c_gc->add_option("--seed", gc.seed)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error[usage]: " << e.what() << "\n";
    return 1;
  }

  try {
    if (*c_gen) return run_corpus_gen(gen);
    if (*c_stats) return run_stats(stats);
    if (*c_pre) return run_preprocess(pre);
    if (*c_train) return run_train(train, *c_train);
    if (*c_cls) return run_train_classifier(train_cls, *c_cls);
    if (*c_sample) return run_sample(sample);
    if (*c_transfer) return run_sample(transfer);
    if (*c_rec) return run_reconstruct(rec);
    if (*c_recog) return run_recognize(recog);
    if (*c_render) return run_render(render);
    if (*c_gc) return run_gradcheck(gc);
  } catch (const UsageError& e) {
    std::cerr << "error[usage]: " << e.what() << "\n";
    return 1;
  } catch (const ContractError& e) {
    std::cerr << "error[usage]: " << e.what() << "\n";
    return 1;
  } catch (const NumericError& e) {
    std::cerr << "error[numeric]: " << e.what() << "\n";
    return 3;
  } catch (const Error& e) {
    std::cerr << "error[data]: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error[data]: " << e.what() << "\n";
    return 2;
  }
  return 1;
}
