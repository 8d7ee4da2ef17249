// Copyright 2026 The ink authors. Apache 2.0 License.
//
// JSON corpus format (version 1):
//
//   { "version": 1, "alphabet": "<symbols>",
//     "samples": [ { "author": str, "text": str,
//                    "points": [[u, v, pen], ...],
//                    "y": [int, ...], "eoc": [0|1, ...], "bow": [0|1, ...] } ] }
//
// Output is canonical: sorted keys, no whitespace, shortest round-trip
// decimals, trailing newline.

#pragma once

#include <string>
#include <string_view>

#include "ink/data/ink.hpp"
#include "json.hpp"

namespace ink {

Corpus corpus_from_json(const nlohmann::json& doc);
nlohmann::json corpus_to_json(const Corpus& corpus);

Corpus parse_corpus(std::string_view text);
std::string serialize_corpus(const Corpus& corpus);

Corpus load_corpus(const std::string& path);
void save_corpus(const Corpus& corpus, const std::string& path);

nlohmann::json stats_to_json(const NormStats& stats);
NormStats stats_from_json(const nlohmann::json& doc);
NormStats load_stats(const std::string& path);
void save_stats(const NormStats& stats, const std::string& path);

/// Reads a whole file; throws DataError if it cannot be opened.
std::string read_file(const std::string& path);
/// Writes to a sibling temporary file and renames it over `path`.
void write_file_atomic(const std::string& path, std::string_view content);

}  // namespace ink
