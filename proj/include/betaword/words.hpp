#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace betaword {

// Alphabet letters are small integers 0..A-1. A single byte is plenty for
// any expansion this library is meant for; construction rejects A > 255.
using Letter = std::uint8_t;
using Word = std::vector<Letter>;
using WordView = std::span<const Letter>;

inline constexpr std::size_t kMaxAlphabet = 255;

/// "0020001" when every letter is a single digit, "0 12 3" otherwise.
std::string to_display(WordView w);
/// Inverse of to_display (whitespace form detected by content).
Word word_from_display(const std::string& text);

bool starts_with(WordView w, WordView prefix);
bool ends_with(WordView w, WordView suffix);

/// All (possibly overlapping) occurrence start positions of `pattern` in `text`.
/// `pattern` must be nonempty.
std::vector<std::size_t> find_occurrences(WordView text, WordView pattern);

Word concat(WordView a, WordView b);

}  // namespace betaword
