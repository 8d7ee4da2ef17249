// Copyright 2026 The ink authors. Apache 2.0 License.

#include "ink/data/alphabet.hpp"

#include "ink/core/error.hpp"

namespace ink {

Alphabet::Alphabet(std::string_view symbols) : symbols_(symbols) {
  index_.fill(-1);
  if (symbols_.empty()) {
    throw DataError("alphabet is empty");
  }
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    const char c = symbols_[i];
    if (kFullAlphabet.find(c) == std::string_view::npos) {
      throw DataError(std::string("alphabet symbol '") + c + "' is not supported");
    }
    int& slot = index_[static_cast<unsigned char>(c)];
    if (slot >= 0) {
      throw DataError(std::string("alphabet symbol '") + c + "' is repeated");
    }
    slot = static_cast<int>(i);
  }
}

std::size_t Alphabet::index(char c) const {
  const int i = index_[static_cast<unsigned char>(c)];
  if (i < 0) {
    throw DataError(std::string("character '") + c + "' is not in the alphabet \"" + symbols_ +
                    "\"");
  }
  return static_cast<std::size_t>(i);
}

}  // namespace ink
