// Copyright 2026 The ink authors. Apache 2.0 License.

#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <string_view>

namespace ink {

/// Digits, Latin letters and the punctuation set used for handwriting (K = 69).
inline constexpr std::string_view kFullAlphabet =
    "0123456789abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ'.,-()/";

/// Ordered symbol set with a char -> index map. Symbols are unique and drawn
/// from kFullAlphabet.
class Alphabet {
 public:
  Alphabet() : Alphabet(kFullAlphabet) {}
  explicit Alphabet(std::string_view symbols);

  std::size_t size() const { return symbols_.size(); }
  const std::string& symbols() const { return symbols_; }
  bool contains(char c) const { return index_[static_cast<unsigned char>(c)] >= 0; }
  /// Throws DataError for symbols outside the alphabet.
  std::size_t index(char c) const;
  char symbol(std::size_t i) const { return symbols_.at(i); }

  friend bool operator==(const Alphabet& a, const Alphabet& b) { return a.symbols_ == b.symbols_; }

 private:
  std::string symbols_;
  std::array<int, 256> index_{};
};

}  // namespace ink
