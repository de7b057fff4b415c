#include "betaword/factor_oracle.hpp"

#include <algorithm>
#include <cstring>
#include <numeric>

namespace betaword {

std::set<Word> factors_of_length(WordView prefix, std::size_t n) {
  if (n > prefix.size()) throw std::invalid_argument("factor length exceeds prefix length");
  std::set<Word> out;
  if (n == 0) {
    out.insert(Word{});
    return out;
  }
  for (std::size_t i = 0; i + n <= prefix.size(); ++i)
    out.insert(Word(prefix.begin() + static_cast<std::ptrdiff_t>(i),
                    prefix.begin() + static_cast<std::ptrdiff_t>(i + n)));
  return out;
}

ExtensionRecord extensions(WordView prefix, WordView w) {
  ExtensionRecord rec;
  rec.factor.assign(w.begin(), w.end());
  rec.observation_prefix_length = prefix.size();
  std::vector<std::size_t> occ;
  if (w.empty()) {
    occ.resize(prefix.size() + 1);
    std::iota(occ.begin(), occ.end(), std::size_t{0});
  } else {
    occ = find_occurrences(prefix, w);
    if (occ.empty()) throw AbsentFactor("factor does not occur in the prefix");
  }
  for (std::size_t i : occ) {
    if (i == 0)
      rec.touches_prefix_start = true;
    else
      rec.left_extensions.insert(prefix[i - 1]);
    if (i + w.size() == prefix.size())
      rec.touches_prefix_end = true;
    else
      rec.right_extensions.insert(prefix[i + w.size()]);
  }
  return rec;
}

SpecialFactorLists special_factors(WordView prefix, std::size_t n) {
  SpecialFactorLists out;
  const std::size_t L = prefix.size();
  if (n > L) throw std::invalid_argument("factor length exceeds prefix length");
  if (n == 0) {
    std::set<Letter> letters(prefix.begin(), prefix.end());
    if (letters.size() >= 2) {
      out.left_special.push_back(Word{});
      out.right_special.push_back(Word{});
      out.bispecial.push_back(Word{});
    }
    return out;
  }
  std::vector<std::size_t> idx(L - n + 1);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  const Letter* base = prefix.data();
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    int c = std::memcmp(base + a, base + b, n);
    return c < 0;
  });
  std::size_t group = 0;
  while (group < idx.size()) {
    std::size_t end = group + 1;
    while (end < idx.size() && std::memcmp(base + idx[group], base + idx[end], n) == 0) ++end;
    std::set<Letter> lext, rext;
    for (std::size_t k = group; k < end; ++k) {
      std::size_t i = idx[k];
      if (i > 0) lext.insert(prefix[i - 1]);
      if (i + n < L) rext.insert(prefix[i + n]);
    }
    Word w(prefix.begin() + static_cast<std::ptrdiff_t>(idx[group]),
           prefix.begin() + static_cast<std::ptrdiff_t>(idx[group] + n));
    if (lext.size() >= 2) out.left_special.push_back(w);
    if (rext.size() >= 2) out.right_special.push_back(w);
    if (lext.size() >= 2 && rext.size() >= 2) out.bispecial.push_back(w);
    group = end;
  }
  return out;
}

namespace {

void bispecial_scan(WordView prefix, std::size_t max_len, Word& path,
                    const std::vector<std::uint32_t>& occ, std::vector<Word>& out) {
  const std::size_t L = prefix.size();
  const std::size_t len = path.size();
  std::set<Letter> lext, rext;
  for (std::uint32_t i : occ) {
    if (i > 0) lext.insert(prefix[i - 1]);
    if (i + len < L) rext.insert(prefix[i + len]);
  }
  if (lext.size() < 2) return;  // left-speciality is prefix-closed: no descendant survives
  if (rext.size() >= 2) out.push_back(path);
  if (len == max_len) return;
  for (Letter a : rext) {
    std::vector<std::uint32_t> child;
    for (std::uint32_t i : occ)
      if (i + len < L && prefix[i + len] == a) child.push_back(i);
    if (child.size() < 2) continue;
    path.push_back(a);
    bispecial_scan(prefix, max_len, path, child, out);
    path.pop_back();
  }
}

}  // namespace

std::vector<Word> bispecial_factors_up_to(WordView prefix, std::size_t max_len) {
  std::vector<std::uint32_t> all(prefix.size() + 1);
  std::iota(all.begin(), all.end(), 0u);
  Word path;
  std::vector<Word> out;
  bispecial_scan(prefix, max_len, path, all, out);
  std::sort(out.begin(), out.end());
  return out;
}

IndexRecord index_of(WordView prefix, WordView w) {
  if (w.empty()) throw std::invalid_argument("index of the empty word is undefined");
  std::vector<std::size_t> occ = find_occurrences(prefix, w);
  if (occ.empty()) throw AbsentFactor("factor does not occur in the prefix");
  const std::size_t L = prefix.size();
  const std::size_t n = w.size();
  std::size_t best_ext = 0, best_pos = occ[0];
  bool truncated = false;
  for (std::size_t i : occ) {
    std::size_t e = 0;
    while (i + n + e < L && prefix[i + e] == prefix[i + n + e]) ++e;
    if (e > best_ext) {
      best_ext = e;
      best_pos = i;
      truncated = (i + n + e == L);
    }
  }
  IndexRecord rec;
  rec.factor.assign(w.begin(), w.end());
  rec.maximal_power.assign(prefix.begin() + static_cast<std::ptrdiff_t>(best_pos),
                           prefix.begin() + static_cast<std::ptrdiff_t>(best_pos + n + best_ext));
  rec.index = BigRat(BigInt(n + best_ext), BigInt(n));
  rec.attained_at = best_pos;
  rec.observation_prefix_length = L;
  rec.truncated_by_prefix = truncated;
  return rec;
}

IndexTable ind_n_table(WordView prefix, std::size_t max_len) {
  const std::size_t L = prefix.size();
  if (max_len > L / 2) throw std::invalid_argument("max_len must be at most |prefix|/2");
  IndexTable table;
  table.observation_prefix_length = L;
  table.rows.reserve(max_len);
  std::vector<std::uint32_t> lce(L + 1, 0);
  const Letter* base = prefix.data();
  for (std::size_t len = 1; len <= max_len; ++len) {
    lce[L - len] = 0;
    std::size_t best_ext = 0, best_pos = 0;
    for (std::size_t i = L - len; i-- > 0;) {
      lce[i] = (base[i] == base[i + len]) ? lce[i + 1] + 1 : 0;
      if (lce[i] > best_ext) {
        best_ext = lce[i];
        best_pos = i;
      }
    }
    table.rows.push_back(IndexTable::Row{len, best_ext, best_pos});
  }
  for (const IndexTable::Row& row : table.rows) {
    BigRat value = row.index();
    if (value > table.partial_critical_exponent) table.partial_critical_exponent = value;
    if (row.length > max_len / 2 && value > table.tail_partial_exponent)
      table.tail_partial_exponent = value;
  }
  return table;
}

Word IndexTable::witness_factor(WordView prefix, std::size_t length) const {
  const Row& row = rows.at(length - 1);
  return Word(prefix.begin() + static_cast<std::ptrdiff_t>(row.witness_position),
              prefix.begin() + static_cast<std::ptrdiff_t>(row.witness_position + length));
}

ReturnWordSet return_words(WordView prefix, WordView w) {
  if (w.empty()) throw std::invalid_argument("return words of the empty word are undefined");
  std::vector<std::size_t> occ = find_occurrences(prefix, w);
  if (occ.size() < 2) throw AbsentFactor("need at least two occurrences for return words");
  ReturnWordSet out;
  out.target.assign(w.begin(), w.end());
  out.observation_prefix_length = prefix.size();
  for (std::size_t k = 0; k + 1 < occ.size(); ++k) {
    std::size_t i = occ[k], j = occ[k + 1];
    Word crw(prefix.begin() + static_cast<std::ptrdiff_t>(i),
             prefix.begin() + static_cast<std::ptrdiff_t>(j + w.size()));
    out.complete_returns.insert(crw);
    out.left_returns.insert(Word(prefix.begin() + static_cast<std::ptrdiff_t>(i),
                                 prefix.begin() + static_cast<std::ptrdiff_t>(j)));
    out.right_returns.insert(Word(prefix.begin() + static_cast<std::ptrdiff_t>(i + w.size()),
                                  prefix.begin() + static_cast<std::ptrdiff_t>(j + w.size())));
  }
  return out;
}

Word root_of(WordView w) {
  if (w.empty()) throw std::invalid_argument("root of the empty word is undefined");
  const std::size_t n = w.size();
  std::vector<std::size_t> fail(n, 0);
  for (std::size_t i = 1; i < n; ++i) {
    std::size_t j = fail[i - 1];
    while (j > 0 && w[i] != w[j]) j = fail[j - 1];
    if (w[i] == w[j]) ++j;
    fail[i] = j;
  }
  std::size_t period = n - fail[n - 1];
  return Word(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(period));
}

std::vector<Word> conjugates(WordView w) {
  if (w.empty()) throw std::invalid_argument("conjugates of the empty word are undefined");
  std::vector<Word> out;
  std::set<Word> seen;
  const std::size_t n = w.size();
  for (std::size_t k = 0; k < n; ++k) {
    Word rot;
    rot.reserve(n);
    rot.insert(rot.end(), w.begin() + static_cast<std::ptrdiff_t>(n - k), w.end());
    rot.insert(rot.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(n - k));
    if (seen.insert(rot).second) out.push_back(std::move(rot));
  }
  return out;
}

bool is_primitive_word(WordView w) { return conjugates(w).size() == w.size(); }

std::string index_table_tsv(const IndexTable& table, WordView prefix) {
  std::string out = "length\tindex_num\tindex_den\twitness\n";
  for (const IndexTable::Row& row : table.rows) {
    BigRat q = row.index();
    out += std::to_string(row.length) + "\t" + rat_num(q).str() + "\t" + rat_den(q).str() +
           "\t" + to_display(table.witness_factor(prefix, row.length)) + "\n";
  }
  return out;
}

}  // namespace betaword
