// Copyright 2026 The ink authors. Apache 2.0 License.
//
// Minimal XML well-formedness checker for the renderer tests: balanced
// elements, quoted attributes, a single root, no stray markup characters.

#pragma once

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

namespace ink::xml_check {

inline bool well_formed(std::string_view doc) {
  std::size_t i = 0;
  const std::size_t n = doc.size();
  auto skip_ws = [&] {
    while (i < n && std::isspace(static_cast<unsigned char>(doc[i]))) ++i;
  };
  auto name = [&]() -> std::string {
    const std::size_t start = i;
    while (i < n && (std::isalnum(static_cast<unsigned char>(doc[i])) || doc[i] == '-' ||
                     doc[i] == ':' || doc[i] == '_' || doc[i] == '.')) {
      ++i;
    }
    return std::string(doc.substr(start, i - start));
  };

  if (doc.substr(0, 5) == "<?xml") {
    const auto end = doc.find("?>");
    if (end == std::string_view::npos) return false;
    i = end + 2;
  }
  std::vector<std::string> open;
  int roots = 0;
  while (true) {
    const std::size_t text_start = i;
    while (i < n && doc[i] != '<') {
      if (doc[i] == '>') return false;
      ++i;
    }
    if (open.empty()) {
      for (std::size_t k = text_start; k < i; ++k) {
        if (!std::isspace(static_cast<unsigned char>(doc[k]))) return false;
      }
    }
    if (i >= n) break;
    ++i;
    if (i < n && doc[i] == '/') {
      ++i;
      const std::string tag = name();
      skip_ws();
      if (i >= n || doc[i] != '>' || open.empty() || open.back() != tag) return false;
      ++i;
      open.pop_back();
      continue;
    }
    const std::string tag = name();
    if (tag.empty()) return false;
    if (open.empty() && ++roots > 1) return false;
    while (true) {
      skip_ws();
      if (i >= n) return false;
      if (doc[i] == '/') {
        if (i + 1 >= n || doc[i + 1] != '>') return false;
        i += 2;
        break;
      }
      if (doc[i] == '>') {
        ++i;
        open.push_back(tag);
        break;
      }
      if (name().empty()) return false;
      skip_ws();
      if (i >= n || doc[i] != '=') return false;
      ++i;
      skip_ws();
      if (i >= n || (doc[i] != '"' && doc[i] != '\'')) return false;
      const char quote = doc[i++];
      while (i < n && doc[i] != quote) {
        if (doc[i] == '<') return false;
        ++i;
      }
      if (i >= n) return false;
      ++i;
    }
  }
  return open.empty() && roots == 1;
}

}  // namespace ink::xml_check
