#include <doctest.h>

#include <algorithm>
#include <random>

#include "betaword/factor_oracle.hpp"
#include "betaword/renyi.hpp"
#include "betaword/substitution.hpp"

using namespace betaword;

namespace {

Word u_prefix(const char* expansion, std::size_t n) {
  return fixed_point_prefix(build_substitution(parse_expansion(expansion)), n);
}

}  // namespace

TEST_CASE("factors of length") {
  Word prefix = word_from_display("00100101");
  std::set<Word> expect{word_from_display("00"), word_from_display("01"),
                        word_from_display("10")};
  CHECK(factors_of_length(prefix, 2) == expect);
  CHECK(factors_of_length(prefix, 0) == std::set<Word>{Word{}});
}

TEST_CASE("factor complexity stays under a fitted affine bound") {
  for (const char* text : {"221(12)", "2(1)"}) {
    RenyiExpansion e = parse_expansion(text);
    Word prefix = u_prefix(text, 50'000);
    const std::size_t slope =
        static_cast<std::size_t>(e.alphabet_size()) * static_cast<std::size_t>(e.alphabet_size());
    std::size_t prev = factors_of_length(prefix, 1).size();
    const std::size_t intercept = prev;
    for (std::size_t n = 2; n <= 60; ++n) {
      std::size_t count = factors_of_length(prefix, n).size();
      CHECK(count - prev <= slope);  // bounded first difference
      CHECK(count <= intercept + slope * n);
      prev = count;
    }
  }
}

TEST_CASE("extensions on observation prefixes") {
  Word prefix = u_prefix("2(1)", 2000);
  ExtensionRecord rec = extensions(prefix, word_from_display("0"));
  CHECK(rec.left_extensions == std::set<Letter>{0, 1});
  CHECK(rec.right_extensions == std::set<Letter>{0, 1});

  // left extensions of 0 cover the whole alphabet once the prefix is long
  RenyiExpansion e = parse_expansion("221(12)");
  Word p2 = u_prefix("221(12)", 10'000);
  ExtensionRecord rec2 = extensions(p2, word_from_display("0"));
  CHECK(rec2.left_extensions.size() == static_cast<std::size_t>(e.alphabet_size()));

  // the whole prefix as a factor: no right extension, flagged
  ExtensionRecord rec3 = extensions(p2, p2);
  CHECK(rec3.right_extensions.empty());
  CHECK(rec3.touches_prefix_end);
  CHECK(rec3.touches_prefix_start);

  CHECK_THROWS_AS(extensions(p2, word_from_display("44444")), AbsentFactor);
}

TEST_CASE("special factors") {
  Word prefix = u_prefix("2(1)", 5000);
  SpecialFactorLists lists = special_factors(prefix, 1);
  CHECK(std::count(lists.bispecial.begin(), lists.bispecial.end(), word_from_display("0")) == 1);
  for (std::size_t n = 0; n <= 12; ++n) {
    SpecialFactorLists l = special_factors(prefix, n);
    for (const Word& w : l.bispecial) {
      CHECK(std::count(l.left_special.begin(), l.left_special.end(), w) == 1);
      CHECK(std::count(l.right_special.begin(), l.right_special.end(), w) == 1);
    }
  }
}

TEST_CASE("a long composed factor is bispecial in 33(02)") {
  // 002 phi^2(0) phi^2(0) phi^2(1) minus the trailing 3
  RenyiExpansion e = parse_expansion("33(02)");
  Substitution s = build_substitution(e);
  Word v = word_from_display("002");
  Word p20 = apply_n(s, Word{0}, 2);
  v.insert(v.end(), p20.begin(), p20.end());
  v.insert(v.end(), p20.begin(), p20.end());
  Word p21 = apply_n(s, Word{1}, 2);
  v.insert(v.end(), p21.begin(), p21.end() - 1);
  CHECK(v.size() == 47);
  Word prefix = u_prefix("33(02)", 100'000);
  ExtensionRecord rec = extensions(prefix, v);
  CHECK(rec.left_extensions.size() >= 2);
  CHECK(rec.right_extensions.size() >= 2);
}

TEST_CASE("fast bispecial enumeration agrees with the per-length scan") {
  for (const char* text : {"221(12)", "22(01)", "2000(1)"}) {
    Word prefix = u_prefix(text, 30'000);
    std::vector<Word> fast = bispecial_factors_up_to(prefix, 14);
    std::vector<Word> slow;
    for (std::size_t n = 0; n <= 14; ++n) {
      SpecialFactorLists lists = special_factors(prefix, n);
      slow.insert(slow.end(), lists.bispecial.begin(), lists.bispecial.end());
    }
    std::sort(slow.begin(), slow.end());
    CHECK(fast == slow);
  }
}

TEST_CASE("index of frozen examples") {
  // max run of zeros in the 21^w word is 2
  Word prefix = u_prefix("2(1)", 4000);
  CHECK(index_of(prefix, word_from_display("0")).index == BigRat(2));

  // the whole prefix has index 1
  IndexRecord whole = index_of(prefix, prefix);
  CHECK(whole.index == BigRat(1));

  // 3 + 1/11 for the left return word of z^(4) in the 22(01)^w word
  Word p22 = u_prefix("22(01)", 10'000);
  IndexRecord rec = index_of(p22, word_from_display("02001001002"));
  CHECK(rec.index == BigRat(34, 11));
  CHECK(rec.maximal_power.size() == 34);

  CHECK_THROWS_AS(index_of(prefix, word_from_display("11")), AbsentFactor);
  CHECK_THROWS_AS(index_of(prefix, Word{}), std::invalid_argument);
}

TEST_CASE("index table: per-length maxima, monotone partial exponent") {
  Word prefix = u_prefix("221(12)", 4000);
  IndexTable table = ind_n_table(prefix, 12);
  // independent route: enumerate all factors of each length and take the max
  for (std::size_t n = 1; n <= 12; ++n) {
    BigRat best = 0;
    for (const Word& w : factors_of_length(prefix, n)) {
      BigRat idx = index_of(prefix, w).index;
      if (idx > best) best = idx;
    }
    CHECK(table.rows[n - 1].index() == best);
    CHECK(best >= BigRat(1));
  }
  BigRat running = 0;
  for (std::size_t cap = 2; cap <= 12; cap += 2) {
    IndexTable t = ind_n_table(prefix, cap);
    CHECK(t.partial_critical_exponent >= running);
    running = t.partial_critical_exponent;
  }
}

TEST_CASE("return words of the illustration word") {
  // 00 0 010 0 0100 0 01 0 01000 with the marked occurrences of 0010
  Word prefix = word_from_display("00001000100001001000");
  ReturnWordSet rws = return_words(prefix, word_from_display("0010"));
  std::set<Word> expect{word_from_display("0010"), word_from_display("00100"),
                        word_from_display("001")};
  CHECK(rws.left_returns == expect);
  for (const Word& crw : rws.complete_returns) {
    CHECK(starts_with(crw, word_from_display("0010")));
    CHECK(ends_with(crw, word_from_display("0010")));
    CHECK(find_occurrences(crw, word_from_display("0010")).size() == 2);
  }
}

TEST_CASE("exactly two occurrences give exactly one complete return word") {
  Word prefix = word_from_display("0102110210");
  ReturnWordSet rws = return_words(prefix, word_from_display("21"));
  CHECK(rws.complete_returns.size() == 1);
  CHECK_THROWS_AS(return_words(prefix, word_from_display("11")), AbsentFactor);
}

TEST_CASE("return word sets grow monotonically with the prefix") {
  Word prefix = u_prefix("221(12)", 60'000);
  Word target = word_from_display("03");
  ReturnWordSet half = return_words(WordView(prefix).subspan(0, 30'000), target);
  ReturnWordSet full = return_words(prefix, target);
  CHECK(std::includes(full.complete_returns.begin(), full.complete_returns.end(),
                      half.complete_returns.begin(), half.complete_returns.end()));
}

TEST_CASE("complete return words of 03 in the 221(12)^w word") {
  Word prefix = u_prefix("221(12)", 100'000);
  ReturnWordSet rws = return_words(prefix, word_from_display("03"));
  std::set<Word> expect{
      word_from_display("0300100100200100100200100103"),
      word_from_display("030010010020010010400100100200100100200100103"),
      word_from_display("030010010020010010020010400100100200100100200100103"),
      word_from_display("03001001002001003"),
      word_from_display("03001001002001001002001003"),
  };
  CHECK(rws.complete_returns == expect);
}

TEST_CASE("roots, conjugates, primitivity") {
  CHECK(root_of(word_from_display("010010")) == word_from_display("010"));
  CHECK_FALSE(is_primitive_word(word_from_display("0101")));
  CHECK(conjugates(word_from_display("0101")).size() == 2);
  // Fractional powers make root and primitivity distinct notions: 00100 has
  // 5 conjugates but root 001.
  CHECK(is_primitive_word(word_from_display("00100")));
  CHECK(root_of(word_from_display("00100")) == word_from_display("001"));

  // Brute-force oracle: the shortest prefix r with w a prefix of r^w.
  auto brute_root = [](const Word& w) {
    for (std::size_t r = 1; r <= w.size(); ++r) {
      bool ok = true;
      for (std::size_t i = r; i < w.size() && ok; ++i) ok = w[i] == w[i - r];
      if (ok) return Word(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(r));
    }
    return Word(w);
  };
  std::mt19937 rng(5);
  for (int trial = 0; trial < 400; ++trial) {
    Word w(1 + rng() % 9);
    for (Letter& a : w) a = static_cast<Letter>(rng() % 3);
    CHECK(root_of(w) == brute_root(w));
    // a square has root w exactly when w is primitive
    Word doubled = concat(w, w);
    CHECK((root_of(doubled) == w) == is_primitive_word(w));
  }
}

TEST_CASE("conjugates of a factor have nearby indices") {
  // A power of w of length q yields, for the shift-k conjugate, a power of
  // length at least q - max(k, |w|-k); interior powers make this observable.
  std::mt19937 rng(11);
  Word prefix = u_prefix("221(12)", 50'000);
  int tested = 0;
  for (int trial = 0; trial < 400 && tested < 120; ++trial) {
    std::size_t len = 2 + rng() % 9;
    std::size_t pos = rng() % (prefix.size() - len);
    Word w(prefix.begin() + static_cast<std::ptrdiff_t>(pos),
           prefix.begin() + static_cast<std::ptrdiff_t>(pos + len));
    IndexRecord base = index_of(prefix, w);
    if (base.attained_at == 0 || base.truncated_by_prefix) continue;
    std::vector<Word> rots = conjugates(w);
    ++tested;
    for (std::size_t k = 1; k < rots.size(); ++k) {
      if (find_occurrences(prefix, rots[k]).empty()) continue;
      IndexRecord other = index_of(prefix, rots[k]);
      BigRat slack(BigInt(std::max(k, w.size() - k)), BigInt(w.size()));
      CHECK(other.index >= base.index - slack);
    }
  }
  CHECK(tested >= 50);
}

TEST_CASE("maximal powers of conjugacy-maximal factors yield bispecial stages") {
  std::mt19937 rng(23);
  Word prefix = u_prefix("22(01)", 40'000);
  int exercised = 0;
  for (int trial = 0; trial < 600 && exercised < 60; ++trial) {
    std::size_t len = 2 + rng() % 8;
    std::size_t pos = 1 + rng() % (prefix.size() - len - 1);
    Word w(prefix.begin() + static_cast<std::ptrdiff_t>(pos),
           prefix.begin() + static_cast<std::ptrdiff_t>(pos + len));
    // pick the conjugate with the maximal observed index
    Word best = w;
    BigRat best_idx = 0;
    for (const Word& c : conjugates(w)) {
      if (find_occurrences(prefix, c).empty()) continue;
      BigRat idx = index_of(prefix, c).index;
      if (idx > best_idx) {
        best_idx = idx;
        best = c;
      }
    }
    if (best_idx <= BigRat(1)) continue;
    IndexRecord rec = index_of(prefix, best);
    if (rec.attained_at == 0 || rec.truncated_by_prefix) continue;
    if (rec.attained_at + rec.maximal_power.size() >= prefix.size()) continue;
    ++exercised;
    const std::size_t ell = rec.maximal_power.size() / best.size();
    const std::size_t rest = rec.maximal_power.size() % best.size();
    Word tail(best.begin(), best.begin() + static_cast<std::ptrdiff_t>(rest));
    Letter b = best.back();
    Letter a = best[rest];
    // (i) the maximal power extends by neither b on the left nor a on the right
    ExtensionRecord top = extensions(prefix, rec.maximal_power);
    CHECK_FALSE(top.left_extensions.count(b));
    CHECK_FALSE(top.right_extensions.count(a));
    // (ii) every shorter stage w^k tail is bispecial with b and a among its extensions
    for (std::size_t k = 0; k < ell; ++k) {
      Word stage;
      for (std::size_t i = 0; i < k; ++i) stage.insert(stage.end(), best.begin(), best.end());
      stage.insert(stage.end(), tail.begin(), tail.end());
      ExtensionRecord ext = extensions(prefix, stage);
      CHECK(ext.left_extensions.count(b));
      CHECK(ext.right_extensions.count(a));
      CHECK(ext.left_extensions.size() >= 2);
      CHECK(ext.right_extensions.size() >= 2);
    }
  }
  CHECK(exercised >= 20);
}

TEST_CASE("left-return root criterion on random power instances") {
  // If v is a power of w containing w at least twice, w~ is a prefix of v,
  // and w w~ holds exactly two occurrences of w~, then w is the root of v.
  std::mt19937 rng(31);
  int hypothesis_held = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    std::size_t wl = 1 + rng() % 8;
    Word w(wl);
    int alphabet = 2 + static_cast<int>(rng() % 3);
    for (Letter& a : w) a = static_cast<Letter>(rng() % alphabet);
    std::size_t vl = 2 * wl + rng() % (2 * wl + 1);
    Word v;
    while (v.size() < vl) {
      std::size_t take = std::min(wl, vl - v.size());
      v.insert(v.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(take));
    }
    std::size_t tl = 1 + rng() % v.size();
    Word wt(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(tl));
    Word crw = concat(w, wt);
    if (find_occurrences(crw, wt).size() != 2) continue;
    ++hypothesis_held;
    CHECK(root_of(v) == w);
  }
  CHECK(hypothesis_held >= 100);
}

TEST_CASE("index table TSV shape") {
  Word prefix = u_prefix("2(1)", 2000);
  IndexTable table = ind_n_table(prefix, 3);
  std::string tsv = index_table_tsv(table, prefix);
  CHECK(tsv.rfind("length\tindex_num\tindex_den\twitness\n", 0) == 0);
  CHECK(std::count(tsv.begin(), tsv.end(), '\n') == 4);
}
