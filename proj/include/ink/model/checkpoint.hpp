// Copyright 2026 The ink authors. Apache 2.0 License.
//
// Checkpoint container shared by every model kind:
//
//   bytes 0..7    magic "CVRNNCK1"
//   bytes 8..15   manifest length n, little-endian uint64
//   next n bytes  UTF-8 JSON manifest
//   remainder     little-endian binary64 tensor buffers in manifest order
//
// The manifest records the model kind and config, the alphabet, the
// normalization statistics, the LSTM gate order and, per tensor, its group
// ("params" or "optimizer"), name, shape and byte offset into the remainder.

#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "ink/core/param_store.hpp"
#include "ink/data/alphabet.hpp"
#include "ink/data/ink.hpp"
#include "json.hpp"

namespace ink {

inline constexpr std::string_view kCheckpointMagic = "CVRNNCK1";

struct Checkpoint {
  std::string kind;  // "cvrnn" or "classifier"
  nlohmann::json config = nlohmann::json::object();
  Alphabet alphabet;
  NormStats stats;
  ParamStore params;
  /// Optimizer moments, keyed "m/<param>" and "v/<param>". May be empty.
  ParamStore optimizer;
  /// Free-form training progress (step, epoch, ...).
  nlohmann::json state = nlohmann::json::object();
};

std::string encode_checkpoint(const Checkpoint& ckpt);
/// Throws DataError on a malformed container.
Checkpoint decode_checkpoint(std::string_view bytes);

void save_checkpoint(const Checkpoint& ckpt, const std::string& path);
Checkpoint load_checkpoint(const std::string& path);

}  // namespace ink
