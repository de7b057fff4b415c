#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "betaword/errors.hpp"
#include "betaword/numbers.hpp"
#include "betaword/words.hpp"

namespace betaword {

// Everything in this module is ground truth over a finite observation
// prefix: results are lower bounds / observed sets, never claims about the
// full infinite word. Each record carries the prefix length it was
// computed from. All functions are pure over an immutable prefix.

struct ExtensionRecord {
  Word factor;
  std::set<Letter> left_extensions;
  std::set<Letter> right_extensions;
  std::size_t observation_prefix_length = 0;
  // Some occurrence touches the prefix boundary, so the extension sets on
  // that side are possibly incomplete even observationally.
  bool touches_prefix_start = false;
  bool touches_prefix_end = false;
};

struct IndexRecord {
  Word factor;
  Word maximal_power;  // longest power of `factor` observed (may be cut by the prefix end)
  BigRat index;        // |maximal_power| / |factor|, exact
  std::size_t attained_at = 0;
  std::size_t observation_prefix_length = 0;
  bool truncated_by_prefix = false;
};

struct ReturnWordSet {
  Word target;
  std::set<Word> complete_returns;
  std::set<Word> left_returns;
  std::set<Word> right_returns;
  std::size_t observation_prefix_length = 0;
};

struct SpecialFactorLists {
  std::vector<Word> left_special;
  std::vector<Word> right_special;
  std::vector<Word> bispecial;
};

struct IndexTable {
  struct Row {
    std::size_t length = 0;
    std::size_t extension = 0;  // maximal power length = length + extension
    std::size_t witness_position = 0;
    BigRat index() const {
      return BigRat(BigInt(length + extension), BigInt(length));
    }
  };
  std::vector<Row> rows;  // rows[i] is for factor length i+1
  BigRat partial_critical_exponent{1};       // running sup over all lengths
  BigRat tail_partial_exponent{1};           // sup over the upper half of lengths
  std::size_t observation_prefix_length = 0;

  Word witness_factor(WordView prefix, std::size_t length) const;
};

std::set<Word> factors_of_length(WordView prefix, std::size_t n);

ExtensionRecord extensions(WordView prefix, WordView w);

SpecialFactorLists special_factors(WordView prefix, std::size_t n);

/// All observed bispecial factors of length <= max_len, via a pruned
/// left-special prefix tree (left-speciality is prefix-closed). Fast path;
/// differentially tested against special_factors.
std::vector<Word> bispecial_factors_up_to(WordView prefix, std::size_t max_len);

IndexRecord index_of(WordView prefix, WordView w);

/// Per-length maxima of index_of over all factors up to max_len
/// (max_len <= |prefix|/2). Naive period-aware scan, O(max_len * |prefix|).
IndexTable ind_n_table(WordView prefix, std::size_t max_len);

/// Complete return words between consecutive occurrences of w; requires at
/// least two occurrences. Monotone: a longer prefix can only add entries.
ReturnWordSet return_words(WordView prefix, WordView w);

/// Shortest word whose power v is: the prefix of v of length equal to v's
/// smallest period.
Word root_of(WordView w);
/// Distinct cyclic shifts S^k(w), in shift order (S moves the last letter to the front).
std::vector<Word> conjugates(WordView w);
bool is_primitive_word(WordView w);

std::string index_table_tsv(const IndexTable& table, WordView prefix);

}  // namespace betaword
