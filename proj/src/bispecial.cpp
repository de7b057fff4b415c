#include "betaword/bispecial.hpp"

#include <algorithm>
#include <map>

#include "betaword/factor_oracle.hpp"

namespace betaword {

namespace {

void require_nonsimple_t1(const RenyiExpansion& e) {
  if (e.simple()) throw ValidationError("bispecial machinery requires a non-simple expansion");
  if (e.t1() < 2) throw ValidationError("bispecial machinery requires t_1 >= 2");
}

std::int64_t trailing_zeros(const std::vector<std::int64_t>& coeffs) {
  std::int64_t count = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend() && *it == 0; ++it) ++count;
  return count;
}

}  // namespace

TZ t_and_z(const RenyiExpansion& e) {
  require_nonsimple_t1(e);
  const int m = e.m(), p = e.p();
  std::int64_t tm = e.coeff(m), tmp = e.coeff(m + p);
  if (tm == tmp) throw std::logic_error("t_m == t_{m+p} on a canonical expansion (internal)");
  TZ out;
  out.t = std::min(tm, tmp);
  std::vector<std::int64_t> tail;
  if (tm > tmp) {
    for (int i = m + 1; i <= m + p; ++i) tail.push_back(e.coeff(i));
    for (int i = m + 1; i <= m + p - 1; ++i) tail.push_back(e.coeff(i));
  } else {
    for (int i = 1; i <= m - 1; ++i) tail.push_back(e.coeff(i));
  }
  out.z = static_cast<Letter>(1 + trailing_zeros(tail));
  return out;
}

Word marker_word(const RenyiExpansion& e) {
  TZ tz = t_and_z(e);
  Word w(static_cast<std::size_t>(tz.t), Letter{0});
  w.push_back(static_cast<Letter>(e.m()));
  return w;
}

std::set<Letter> left_extensions_of_letter(const RenyiExpansion& e, Letter a) {
  require_nonsimple_t1(e);
  const int m = e.m(), p = e.p();
  if (a >= e.alphabet_size()) throw std::invalid_argument("letter out of range");
  std::set<Letter> out;
  if (a == 0) {
    for (int x = 0; x < e.alphabet_size(); ++x) out.insert(static_cast<Letter>(x));
    return out;
  }
  std::vector<std::int64_t> head;
  for (int i = 1; i <= a; ++i) head.push_back(e.coeff(i));
  out.insert(static_cast<Letter>(trailing_zeros(head)));
  if (a >= m) {
    std::vector<std::int64_t> tail;
    for (int i = m + 1; i <= m + p; ++i) tail.push_back(e.coeff(i));
    if (a > m)
      for (int i = m + 1; i <= a; ++i) tail.push_back(e.coeff(i));
    out.insert(static_cast<Letter>(trailing_zeros(tail)));
  }
  return out;
}

ZWord z_word(const RenyiExpansion& e, int n, std::size_t cap) {
  require_nonsimple_t1(e);
  if (n < 0) throw std::invalid_argument("z_word requires n >= 0");
  const int m = e.m(), p = e.p();
  ZWord out;
  out.n = n;
  if (n < m) {
    out.branch = ZBranch::Empty;
    out.word = Word{};
    return out;
  }
  Substitution s = build_substitution(e);
  Word marker = marker_word(e);
  TZ tz = t_and_z(e);
  LengthTable table(s);
  if (tz.z % p == 0) {
    out.branch = ZBranch::Telescoped;
    const int k = n % m;
    const int l = n / m;
    std::vector<int> exponents;
    for (int j = 0; j < l; ++j) exponents.push_back(k + j * m);
    for (int d : exponents) out.length += table.word_length(d, marker);
    if (out.length <= cap) {
      Word w;
      w.reserve(static_cast<std::size_t>(out.length));
      for (int d : exponents) {
        Word part = apply_n(s, marker, d, cap);
        w.insert(w.end(), part.begin(), part.end());
      }
      out.word = std::move(w);
    }
  } else {
    out.branch = ZBranch::Single;
    out.length = table.word_length(n - m, marker);
    if (out.length <= cap) out.word = apply_n(s, marker, n - m, cap);
  }
  return out;
}

bool tail_leq(const RenyiExpansion& e, Letter c, Letter d) {
  const int horizon = e.m() + 2 * e.p() + 2;
  for (int j = 1; j <= horizon; ++j) {
    std::int64_t tc = t_oplus(c, j, e);
    std::int64_t td = t_oplus(d, j, e);
    if (tc != td) return tc < td;
  }
  return true;
}

BispecialFactor make_bispecial(const RenyiExpansion& e, Word word, Letter a, Letter b, Letter c,
                               Letter d, int iterations, int seed_zeros, std::size_t cap) {
  if (a == b || c == d) throw std::invalid_argument("extension pairs need distinct letters");
  BispecialFactor v;
  if (!tail_leq(e, c, d)) {
    std::swap(c, d);
    std::swap(a, b);  // keep the witness coupling (a-c, b-d)
  }
  v.a = a;
  v.b = b;
  v.c = c;
  v.d = d;
  v.iterations = iterations;
  v.seed_zeros = seed_zeros;
  v.length = static_cast<std::int64_t>(word.size());
  v.parikh_counts = parikh(word, e.alphabet_size());
  if (word.size() <= cap) v.word = std::move(word);
  return v;
}

BispecialFactor f_image(const BispecialFactor& v, const RenyiExpansion& e, std::size_t cap) {
  require_nonsimple_t1(e);
  const int m = e.m(), p = e.p();
  Substitution s = build_substitution(e);
  TZ tz = t_and_z(e);

  const bool wing_case =
      (std::min(v.a, v.b) == m - 1) && (std::max(v.a, v.b) == m + p - 1);
  Word left = wing_case ? marker_word(e) : Word{};
  std::int64_t tc = t_oplus(v.c, 1, e);
  std::int64_t td = t_oplus(v.d, 1, e);
  std::int64_t shared = std::min(tc, td);
  Word right(static_cast<std::size_t>(shared), Letter{0});

  BispecialFactor out;
  out.iterations = v.iterations + 1;
  out.seed_zeros = v.seed_zeros;
  if (wing_case) {
    out.a = 0;
    out.b = tz.z;
  } else {
    out.a = oplus(v.a, 1, m, p);
    out.b = oplus(v.b, 1, m, p);
  }
  Letter c_next = (tc > shared) ? Letter{0} : oplus(v.c, 1, m, p);
  Letter d_next = (td > shared) ? Letter{0} : oplus(v.d, 1, m, p);
  out.c = c_next;
  out.d = d_next;
  if (!tail_leq(e, out.c, out.d)) {
    std::swap(out.c, out.d);
    std::swap(out.a, out.b);
  }

  ParikhVector image_counts = s.incidence().apply_row(v.parikh_counts);
  ParikhVector total = parikh(left, e.alphabet_size());
  for (std::size_t i = 0; i < total.size(); ++i) total[i] += image_counts[i];
  total[0] += shared;
  out.parikh_counts = std::move(total);
  out.length = 0;
  for (const BigInt& x : out.parikh_counts) out.length += x;

  if (v.word && out.length <= cap) {
    Word w = left;
    Word mid = s.apply(*v.word);
    w.insert(w.end(), mid.begin(), mid.end());
    w.insert(w.end(), right.begin(), right.end());
    out.word = std::move(w);
  }
  return out;
}

BispecialFactor fn_image_closed_form(const BispecialFactor& seed, const RenyiExpansion& e, int n,
                                     std::size_t cap) {
  require_nonsimple_t1(e);
  if (!seed.word) throw std::invalid_argument("closed form needs a materialized seed");
  const int m = e.m(), p = e.p();
  Substitution s = build_substitution(e);

  Letter c = seed.c, d = seed.d;
  if (!tail_leq(e, c, d)) std::swap(c, d);

  // Pair evolution is cheap; run it symbolically to label the result.
  BispecialFactor labels = seed;
  labels.word = Word{};
  labels.parikh_counts.assign(static_cast<std::size_t>(e.alphabet_size()), 0);
  labels.length = 0;
  for (int i = 0; i < n; ++i) labels = f_image(labels, e, 0);

  bool has_wing = ((seed.a > seed.b ? seed.a - seed.b : seed.b - seed.a) % p) == 0;
  ZWord u1;
  if (has_wing) u1 = z_word(e, n + std::min(seed.a, seed.b), cap);

  LengthTable table(s);
  BigInt u2_len = table.length(n, c) - 1;
  BigInt mid_len = table.word_length(n, *seed.word);
  BigInt total_len = (has_wing ? u1.length : BigInt(0)) + mid_len + u2_len;

  BispecialFactor out;
  out.a = labels.a;
  out.b = labels.b;
  out.c = labels.c;
  out.d = labels.d;
  out.iterations = seed.iterations + n;
  out.seed_zeros = seed.seed_zeros;
  out.length = total_len;

  ParikhVector counts = parikh_n(s, *seed.word, n);
  ParikhVector u2_counts = parikh_n(s, Word{c}, n);
  u2_counts[oplus(c, n, m, p)] -= 1;
  for (std::size_t i = 0; i < counts.size(); ++i) counts[i] += u2_counts[i];
  if (has_wing) {
    ZWord u1_counts_src = z_word(e, n + std::min(seed.a, seed.b), kDefaultCap);
    // Parikh of z^(k): sum of image Parikhs of the marker word.
    ParikhVector zc(static_cast<std::size_t>(e.alphabet_size()), 0);
    Word marker = marker_word(e);
    int k = n + std::min(seed.a, seed.b);
    if (k >= m) {
      if (t_and_z(e).z % p == 0) {
        for (int j = k % m; j <= k - m; j += m) {
          ParikhVector part = parikh_n(s, marker, j);
          for (std::size_t i = 0; i < zc.size(); ++i) zc[i] += part[i];
        }
      } else {
        zc = parikh_n(s, marker, k - m);
      }
    }
    for (std::size_t i = 0; i < counts.size(); ++i) counts[i] += zc[i];
  }
  out.parikh_counts = std::move(counts);

  if (total_len <= cap && (!has_wing || u1.word)) {
    Word w = has_wing ? *u1.word : Word{};
    Word mid = apply_n(s, *seed.word, n, cap);
    w.insert(w.end(), mid.begin(), mid.end());
    Word u2 = apply_n(s, Word{c}, n, cap);
    u2.pop_back();
    w.insert(w.end(), u2.begin(), u2.end());
    out.word = std::move(w);
  }
  return out;
}

std::vector<BispecialFactor> initial_bispecials(const RenyiExpansion& e, WordView prefix) {
  require_nonsimple_t1(e);
  Substitution s = build_substitution(e);
  BigInt needed = 10 * image_length(s, Word{0}, e.m() + e.p());
  if (BigInt(prefix.size()) < needed)
    throw UnstableObservation("prefix too short for initial bispecial discovery");

  std::vector<BispecialFactor> out;
  for (std::int64_t k = 0; k < e.t1(); ++k) {
    std::set<std::pair<Letter, Letter>> pairs;
    if (k == 0) {
      for (std::size_t i = 1; i < prefix.size(); ++i) pairs.insert({prefix[i - 1], prefix[i]});
    } else {
      Word zeros(static_cast<std::size_t>(k), Letter{0});
      for (std::size_t i : find_occurrences(prefix, zeros)) {
        if (i == 0 || i + zeros.size() >= prefix.size()) continue;
        pairs.insert({prefix[i - 1], prefix[i + zeros.size()]});
      }
    }
    std::vector<std::pair<Letter, Letter>> ordered(pairs.begin(), pairs.end());
    for (std::size_t x = 0; x < ordered.size(); ++x)
      for (std::size_t y = x + 1; y < ordered.size(); ++y) {
        auto [a, c] = ordered[x];
        auto [b, d] = ordered[y];
        if (a == b || c == d) continue;
        out.push_back(make_bispecial(e, Word(static_cast<std::size_t>(k), Letter{0}), a, b, c, d,
                                     0, static_cast<int>(k)));
      }
  }
  return out;
}

std::vector<BispecialFactor> chain_elements(const BispecialFactor& seed, const RenyiExpansion& e,
                                            const BigInt& collect_len, int n_cap) {
  std::vector<BispecialFactor> out;
  BispecialFactor current = seed;
  for (int n = 0; n <= n_cap; ++n) {
    if (current.length > collect_len) break;  // |f(v)| >= |v|: no smaller elements later
    out.push_back(current);
    current = f_image(current, e, static_cast<std::size_t>(collect_len));
  }
  return out;
}

BigInt w_I_length(const RenyiExpansion& e, int n) {
  Substitution s = build_substitution(e);
  return image_length(s, Word{0}, n);
}

Word w_I_n(const RenyiExpansion& e, int n, std::size_t cap) {
  require_nonsimple_t1(e);
  Substitution s = build_substitution(e);
  Word full = apply_n(s, Word{0}, n, cap);
  ZWord z = z_word(e, n, cap);
  if (!z.word) throw CapExceeded("z^(n) exceeds materialization cap", z.length);
  if (!ends_with(full, *z.word))
    throw std::logic_error("z^(n) is not a suffix of phi^n(0) (internal)");
  Word out = *z.word;
  out.insert(out.end(), full.begin(), full.end() - static_cast<std::ptrdiff_t>(z.word->size()));
  return out;
}

BispecialFactor v_I_n(const RenyiExpansion& e, int n, std::size_t cap) {
  require_nonsimple_t1(e);
  BispecialFactor seed =
      make_bispecial(e, Word(static_cast<std::size_t>(e.t1() - 1), Letter{0}), 0,
                     static_cast<Letter>(e.p()), 1, 0, 0, 0, cap);
  return fn_image_closed_form(seed, e, n, cap);
}

namespace {

// All decompositions of `text` into a sequence of phi^q-images of letters.
void image_parse_rec(const std::vector<Word>& images, WordView text, std::size_t pos, Word& cur,
                     std::vector<Word>& out, std::size_t parse_cap) {
  if (out.size() >= parse_cap) return;
  if (pos == text.size()) {
    out.push_back(cur);
    return;
  }
  for (std::size_t a = 0; a < images.size(); ++a) {
    const Word& img = images[a];
    if (pos + img.size() > text.size()) continue;
    if (!starts_with(text.subspan(pos), img)) continue;
    cur.push_back(static_cast<Letter>(a));
    image_parse_rec(images, text, pos + img.size(), cur, out, parse_cap);
    cur.pop_back();
  }
}

std::vector<Word> image_parses(const Substitution& s, int q, WordView text) {
  std::vector<Word> images;
  images.reserve(static_cast<std::size_t>(s.alphabet_size()));
  for (int a = 0; a < s.alphabet_size(); ++a)
    images.push_back(apply_n(s, Word{static_cast<Letter>(a)}, q));
  std::vector<Word> out;
  Word cur;
  image_parse_rec(images, text, 0, cur, out, 50'000);
  return out;
}

// Word-level classification of the complete return words of the marker
// 0^t m, following the three derivational shapes:
//   (A) ends with phi^m(0);
//   (C) equals 0^t m phi^p(w') phi^p(m) where 0^t m w' m is itself an
//       observed CRW that is not of type (A) -- the phi^p-prolongation
//       orbit, which takes precedence over the (B) shape below;
//   (B) equals 0^t m phi^m(w) phi^m(y) with y a nonzero multiple of p, w
//       free of 0 and of multiples of p, and 0wy an observed factor.
std::map<Word, char> classify_marker_returns(const RenyiExpansion& e, const Substitution& s,
                                             const Word& marker, const std::set<Word>& crws,
                                             WordView prefix) {
  const int m = e.m(), p = e.p();
  Word phi_m0 = apply_n(s, Word{0}, m);
  Word phi_pm = apply_n(s, Word{static_cast<Letter>(m)}, p);

  std::map<Word, char> types;
  for (const Word& v : crws) {
    if (ends_with(v, phi_m0)) {
      types[v] = 'A';
      continue;
    }
    types[v] = '?';
    WordView body = WordView(v).subspan(marker.size());
    for (const Word& parse : image_parses(s, m, body)) {
      if (parse.empty()) continue;
      Letter y = parse.back();
      if (y == 0 || y % p != 0) continue;
      bool w_ok = true;
      for (std::size_t i = 0; i + 1 < parse.size() && w_ok; ++i)
        w_ok = parse[i] != 0 && parse[i] % p != 0;
      if (!w_ok) continue;
      Word zwy{Letter{0}};
      zwy.insert(zwy.end(), parse.begin(), parse.end());
      if (find_occurrences(prefix, zwy).empty()) continue;
      types[v] = 'B';
      break;
    }
  }

  // The prolongation orbit may reclassify a (B)-shaped word; iterate to a
  // fixpoint since preimages resolve in unpredictable order.
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto& [v, type] : types) {
      if (type == 'A' || type == 'C') continue;
      WordView body = WordView(v).subspan(marker.size());
      if (body.size() < phi_pm.size() || !ends_with(body, phi_pm)) continue;
      WordView middle = body.subspan(0, body.size() - phi_pm.size());
      bool is_c = false;
      for (const Word& parse : image_parses(s, p, middle)) {
        Word preimage = marker;
        preimage.insert(preimage.end(), parse.begin(), parse.end());
        preimage.push_back(static_cast<Letter>(m));
        if (preimage == v) continue;
        auto it = types.find(preimage);
        if (it != types.end() && (it->second == 'B' || it->second == 'C')) {
          is_c = true;
          break;
        }
      }
      if (is_c) {
        type = 'C';
        changed = true;
      }
    }
  }
  return types;
}

std::set<Word> stable_return_words(WordView prefix, const Word& target) {
  ReturnWordSet full = return_words(prefix, target);
  ReturnWordSet half = return_words(prefix.subspan(0, prefix.size() / 2), target);
  if (full.complete_returns != half.complete_returns)
    throw UnstableObservation("CRW set not yet stable; extend the prefix");
  return full.complete_returns;
}

}  // namespace

ReturnTypeReport classify_returns_zn(const RenyiExpansion& e, int n, WordView prefix,
                                     std::size_t cap) {
  require_nonsimple_t1(e);
  const int m = e.m();
  if (n < m) throw std::invalid_argument("return-word classification needs n >= m");
  ZWord z = z_word(e, n, cap);
  if (!z.word) throw CapExceeded("z^(n) exceeds materialization cap", z.length);
  Substitution s = build_substitution(e);
  Word marker = marker_word(e);

  std::set<Word> marker_crws = stable_return_words(prefix, marker);
  std::map<Word, char> marker_types =
      classify_marker_returns(e, s, marker, marker_crws, prefix);

  ReturnTypeReport report;
  report.n = n;
  report.z = *z.word;
  report.observation_prefix_length = prefix.size();

  if (n == m) {
    for (const auto& [w, t] : marker_types) {
      switch (t) {
        case 'A': report.type_a.insert(w); break;
        case 'B': report.type_b.insert(w); break;
        case 'C': report.type_c.insert(w); break;
        default: report.undetermined.insert(w); break;
      }
    }
    return report;
  }

  // Lift through phi^{n-m}: the CRW of z^(n) born from a marker-level CRW v'
  // is z^(n) phi^{n-m}(v' stripped of its marker prefix), same type.
  std::map<Word, char> lifted;
  for (const auto& [v, t] : marker_types) {
    Word body(v.begin() + static_cast<std::ptrdiff_t>(marker.size()), v.end());
    Word candidate = *z.word;
    Word image = apply_n(s, body, n - m, cap);
    candidate.insert(candidate.end(), image.begin(), image.end());
    lifted.emplace(std::move(candidate), t);
  }
  for (const Word& v : stable_return_words(prefix, *z.word)) {
    auto it = lifted.find(v);
    char t = (it == lifted.end()) ? '?' : it->second;
    switch (t) {
      case 'A': report.type_a.insert(v); break;
      case 'B': report.type_b.insert(v); break;
      case 'C': report.type_c.insert(v); break;
      default: report.undetermined.insert(v); break;
    }
  }
  return report;
}

}  // namespace betaword
