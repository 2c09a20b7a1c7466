#pragma once

#include <string>
#include <vector>

namespace descartes::testing {

// Minimal structural check: every tag closes in order, attributes are quoted,
// and no raw '<' or '&' appears in text. Enough for generated SVG.
inline bool well_formed_xml(const std::string& s) {
  std::vector<std::string> stack;
  std::size_t i = 0;
  bool root_seen = false;
  while (i < s.size()) {
    if (s[i] != '<') {
      if (s[i] == '&') {
        const auto semi = s.find(';', i);
        if (semi == std::string::npos || semi - i > 6) return false;
      }
      ++i;
      continue;
    }
    const auto close = s.find('>', i);
    if (close == std::string::npos) return false;
    std::string tag = s.substr(i + 1, close - i - 1);
    i = close + 1;
    if (tag.starts_with("?")) {
      if (!tag.ends_with("?")) return false;
      continue;
    }
    if (tag.starts_with("/")) {
      if (stack.empty() || stack.back() != tag.substr(1)) return false;
      stack.pop_back();
      continue;
    }
    const bool self_closing = tag.ends_with("/");
    if (self_closing) tag.pop_back();
    const auto space = tag.find(' ');
    const std::string name = tag.substr(0, space);
    if (name.empty()) return false;
    // Quotes must pair up inside the tag.
    std::size_t quotes = 0;
    for (char ch : tag) quotes += ch == '"';
    if (quotes % 2 != 0) return false;
    if (stack.empty()) {
      if (root_seen) return false;
      root_seen = true;
    }
    if (!self_closing) stack.push_back(name);
  }
  return root_seen && stack.empty();
}

}  // namespace descartes::testing
