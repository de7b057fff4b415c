#include "betaword/words.hpp"

#include <algorithm>
#include <cctype>
#include <cstring>
#include <stdexcept>

namespace betaword {

std::string to_display(WordView w) {
  bool wide = std::any_of(w.begin(), w.end(), [](Letter a) { return a > 9; });
  std::string out;
  if (!wide) {
    out.reserve(w.size());
    for (Letter a : w) out.push_back(static_cast<char>('0' + a));
    return out;
  }
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out.push_back(' ');
    out += std::to_string(static_cast<int>(w[i]));
  }
  return out;
}

Word word_from_display(const std::string& text) {
  Word w;
  if (text.find(' ') == std::string::npos) {
    w.reserve(text.size());
    for (char c : text) {
      if (!std::isdigit(static_cast<unsigned char>(c)))
        throw std::invalid_argument("bad word literal: " + text);
      w.push_back(static_cast<Letter>(c - '0'));
    }
    return w;
  }
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && text[i] == ' ') ++i;
    if (i >= text.size()) break;
    int value = 0;
    bool any = false;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      value = value * 10 + (text[i] - '0');
      any = true;
      ++i;
    }
    if (!any || value > static_cast<int>(kMaxAlphabet))
      throw std::invalid_argument("bad word literal: " + text);
    w.push_back(static_cast<Letter>(value));
  }
  return w;
}

bool starts_with(WordView w, WordView prefix) {
  return prefix.size() <= w.size() &&
         (prefix.empty() || std::memcmp(w.data(), prefix.data(), prefix.size()) == 0);
}

bool ends_with(WordView w, WordView suffix) {
  return suffix.size() <= w.size() &&
         (suffix.empty() ||
          std::memcmp(w.data() + (w.size() - suffix.size()), suffix.data(), suffix.size()) == 0);
}

std::vector<std::size_t> find_occurrences(WordView text, WordView pattern) {
  if (pattern.empty()) throw std::invalid_argument("empty pattern");
  std::vector<std::size_t> hits;
  if (pattern.size() > text.size()) return hits;
  const Letter first = pattern[0];
  const std::size_t last = text.size() - pattern.size();
  const Letter* base = text.data();
  for (std::size_t i = 0; i <= last; ++i) {
    if (base[i] != first) continue;
    if (std::memcmp(base + i, pattern.data(), pattern.size()) == 0) hits.push_back(i);
  }
  return hits;
}

Word concat(WordView a, WordView b) {
  Word out;
  out.reserve(a.size() + b.size());
  out.insert(out.end(), a.begin(), a.end());
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

}  // namespace betaword
