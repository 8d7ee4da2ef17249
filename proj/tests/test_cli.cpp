// Copyright 2026 The ink authors. Apache 2.0 License.
//
// Drives the `ink` binary end to end. INK_CLI_PATH is set by the build.

#include <sys/wait.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <string>

#include "doctest.h"
#include "ink/data/corpus_io.hpp"
#include "xml_check.hpp"

using namespace ink;
namespace fs = std::filesystem;

namespace {

const fs::path& workdir() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / "ink_cli_test";
    fs::remove_all(d);
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string at(const std::string& name) { return (workdir() / name).string(); }

int run(const std::string& args, const std::string& log = "last.log") {
  const std::string cmd = std::string(INK_CLI_PATH) + " " + args + " >" + at(log) + " 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string last_output(const std::string& log = "last.log") { return read_file(at(log)); }

// Shared small pipeline: corpus, preprocessing and a short training run.
void ensure_model() {
  static bool done = false;
  if (done) return;
  REQUIRE(run("corpus-gen --alphabet abcde --authors 2 --samples 6 --seed 7 --out " +
              at("c.json")) == 0);
  REQUIRE(run("preprocess --corpus " + at("c.json") + " --out " + at("p.json") + " --stats-out " +
              at("s.json")) == 0);
  REQUIRE(run("train --corpus " + at("p.json") + " --stats " + at("s.json") + " --out " +
              at("m.ckpt") + " --metrics " + at("m.jsonl") +
              " --epochs 3 --batch 4 --hidden 8 --latent 4 --gmm 4 --ff 8 --seed 1") == 0);
  done = true;
}

}  // namespace

TEST_CASE("corpus generation is byte-identical on rerun") {
  REQUIRE(run("corpus-gen --alphabet abcde --authors 4 --samples 40 --seed 7 --out " +
              at("a.json")) == 0);
  REQUIRE(run("corpus-gen --alphabet abcde --authors 4 --samples 40 --seed 7 --out " +
              at("b.json")) == 0);
  CHECK(read_file(at("a.json")) == read_file(at("b.json")));
  CHECK(load_corpus(at("a.json")).samples.size() == 160);
}

TEST_CASE("stats reports corpus counts") {
  ensure_model();
  REQUIRE(run("stats --corpus " + at("c.json")) == 0);
  const auto report = nlohmann::json::parse(last_output());
  CHECK(report.at("samples") == 12);
  CHECK(report.at("authors") == 2);
  CHECK(report.contains("norm_stats"));
}

TEST_CASE("training writes one metrics line per step") {
  ensure_model();
  const std::string metrics = read_file(at("m.jsonl"));
  // 12 samples in batches of 4 over 3 epochs.
  CHECK(std::count(metrics.begin(), metrics.end(), '\n') == 9);
  CHECK(fs::exists(at("m.ckpt")));
}

TEST_CASE("sampling two words marks two word starts") {
  ensure_model();
  REQUIRE(run("sample --model " + at("m.ckpt") + " --text \"ab ab\" --seed 1 --out " +
              at("out.json") + " --svg " + at("out.svg")) == 0);
  const Corpus out = load_corpus(at("out.json"));
  REQUIRE(out.samples.size() == 1);
  const InkSample& s = out.samples[0];
  CHECK(std::count(s.bow.begin(), s.bow.end(), 1) == 2);
  CHECK(std::count(s.eoc.begin(), s.eoc.end(), 1) == 4);
  const std::string svg = read_file(at("out.svg"));
  CHECK(xml_check::well_formed(svg));
  CHECK(svg.find("<polyline") != std::string::npos);

  REQUIRE(run("sample --model " + at("m.ckpt") + " --text \"ab ab\" --seed 1 --out " +
              at("out2.json")) == 0);
  CHECK(read_file(at("out2.json")) == read_file(at("out.json")));
}

TEST_CASE("style transfer, reconstruction and rendering") {
  ensure_model();
  CHECK(run("transfer --model " + at("m.ckpt") + " --text \"cab\" --style-ref " + at("c.json") +
            "#3 --out " + at("t.json")) == 0);
  CHECK(load_corpus(at("t.json")).samples.at(0).text == "cab");
  CHECK(run("reconstruct --model " + at("m.ckpt") + " --input " + at("c.json") + "#1 --greedy" +
            " --out " + at("r.json") + " --svg " + at("r.svg")) == 0);
  CHECK(load_corpus(at("r.json")).samples.at(0).length() ==
        load_corpus(at("c.json")).samples.at(1).length());
  CHECK(run("render --input " + at("c.json") + "#0 --out " + at("c0.svg")) == 0);
  CHECK(xml_check::well_formed(read_file(at("c0.svg"))));
}

TEST_CASE("recognizer training and recognition") {
  ensure_model();
  REQUIRE(run("train-classifier --corpus " + at("p.json") + " --stats " + at("s.json") +
              " --out " + at("cls.ckpt") + " --epochs 2 --batch 6 --hidden 6 --layers 1" +
              " --projection 4 --eval " + at("p.json")) == 0);
  REQUIRE(run("recognize --model " + at("cls.ckpt") + " --corpus " + at("p.json") + " --out " +
              at("pred.json")) == 0);
  CHECK(fs::exists(at("pred.json")));
  CHECK(run("reconstruct --model " + at("m.ckpt") + " --classifier " + at("cls.ckpt") +
            " --input " + at("p.json") + "#0 --out " + at("rc.json")) == 0);
}

TEST_CASE("gradcheck exit status") {
  CHECK(run("gradcheck") == 0);
  CHECK(last_output().find("cvrnn") != std::string::npos);
  CHECK(run("gradcheck --tolerance 1e-30") == 3);
}

TEST_CASE("error exit codes and prefixes") {
  CHECK(run("") == 1);
  CHECK(run("no-such-command") == 1);
  CHECK(run("render --input") == 1);
  CHECK(last_output().find("error[usage]:") != std::string::npos);

  CHECK(run("render --input " + at("missing.json") + " --out " + at("x.svg")) == 2);
  CHECK(last_output().find("error[data]:") != std::string::npos);
  CHECK(!fs::exists(at("x.svg")));

  ensure_model();
  CHECK(run("sample --model " + at("m.ckpt") + " --text \"abz\" --out " + at("bad.json")) == 2);
  CHECK(!fs::exists(at("bad.json")));
  CHECK(run("sample --model " + at("c.json") + " --text ab --out " + at("bad.json")) == 2);
  CHECK(run("render --input " + at("c.json") + "#x --out " + at("x.svg")) == 1);
}
