#include "betaword/renyi.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "betaword/substitution.hpp"
#include "betaword/words.hpp"

namespace betaword {

std::int64_t RenyiExpansion::coeff(std::int64_t k) const {
  if (k < 1) throw std::invalid_argument("coefficient index must be >= 1");
  if (k <= m()) return preperiod[static_cast<std::size_t>(k - 1)];
  if (simple()) return 0;
  return period[static_cast<std::size_t>((k - m() - 1) % p())];
}

std::string RenyiExpansion::to_string() const {
  auto digits_ok = [](const std::vector<std::int64_t>& v) {
    return std::all_of(v.begin(), v.end(), [](std::int64_t t) { return t <= 9; });
  };
  bool compact = digits_ok(preperiod) && digits_ok(period);
  auto render = [&](const std::vector<std::int64_t>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (!compact && i) out.push_back(',');
      out += std::to_string(v[i]);
    }
    return out;
  };
  std::string out = render(preperiod);
  if (!period.empty()) out += "(" + render(period) + ")";
  return out;
}

namespace {

std::vector<std::int64_t> parse_coeff_group(const std::string& text, std::size_t begin,
                                            std::size_t end) {
  if (begin >= end) throw SyntaxError("empty coefficient group", begin);
  std::string group = text.substr(begin, end - begin);
  std::vector<std::int64_t> out;
  if (group.find(',') == std::string::npos) {
    for (std::size_t i = 0; i < group.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(group[i])))
        throw SyntaxError("expected digit", begin + i);
      out.push_back(group[i] - '0');
    }
    return out;
  }
  std::size_t i = 0;
  while (true) {
    if (i >= group.size() || !std::isdigit(static_cast<unsigned char>(group[i])))
      throw SyntaxError("expected integer", begin + i);
    std::int64_t value = 0;
    while (i < group.size() && std::isdigit(static_cast<unsigned char>(group[i]))) {
      value = value * 10 + (group[i] - '0');
      if (value > 1'000'000'000'000LL) throw SyntaxError("coefficient too large", begin + i);
      ++i;
    }
    out.push_back(value);
    if (i == group.size()) break;
    if (group[i] != ',') throw SyntaxError("expected ','", begin + i);
    ++i;
  }
  return out;
}

// Smallest block whose repetition yields v (classic failure-function test).
std::size_t primitive_root_length(const std::vector<std::int64_t>& v) {
  const std::size_t n = v.size();
  std::vector<std::size_t> fail(n, 0);
  for (std::size_t i = 1; i < n; ++i) {
    std::size_t j = fail[i - 1];
    while (j > 0 && v[i] != v[j]) j = fail[j - 1];
    if (v[i] == v[j]) ++j;
    fail[i] = j;
  }
  std::size_t root = n - fail[n - 1];
  return (n % root == 0) ? root : n;
}

// Strict lexicographic Parry check on the canonical form. Both the whole
// sequence and any shift are eventually periodic with the same period, so
// m + 2p + 2 positions decide each comparison.
void check_parry(const RenyiExpansion& e) {
  const int horizon = e.m() + 2 * e.p() + 2;
  for (int shift = 2; shift <= e.m() + e.p(); ++shift) {
    int cmp = 0;
    for (int j = 0; j < horizon; ++j) {
      std::int64_t a = e.coeff(shift + j);
      std::int64_t b = e.coeff(1 + j);
      if (a != b) {
        cmp = a < b ? -1 : 1;
        break;
      }
    }
    if (cmp >= 0)
      throw ParryViolation("shifted coefficient sequence not strictly below the expansion", shift);
  }
}

}  // namespace

RenyiExpansion parse_expansion(const std::string& text) {
  std::size_t open = text.find('(');
  RenyiExpansion e;
  if (open == std::string::npos) {
    e.preperiod = parse_coeff_group(text, 0, text.size());
  } else {
    if (text.empty() || text.back() != ')')
      throw SyntaxError("expected ')' at end", text.size());
    if (text.find('(', open + 1) != std::string::npos)
      throw SyntaxError("unexpected '('", text.find('(', open + 1));
    if (text.find(')') != text.size() - 1) throw SyntaxError("unexpected ')'", text.find(')'));
    e.preperiod = parse_coeff_group(text, 0, open);
    e.period = parse_coeff_group(text, open + 1, text.size() - 1);
  }

  bool all_zero = std::all_of(e.preperiod.begin(), e.preperiod.end(),
                              [](std::int64_t t) { return t == 0; }) &&
                  std::all_of(e.period.begin(), e.period.end(),
                              [](std::int64_t t) { return t == 0; });
  if (all_zero) throw ValidationError("all-zero expansion");

  // A period of zeros is no period at all.
  if (!e.period.empty() &&
      std::all_of(e.period.begin(), e.period.end(), [](std::int64_t t) { return t == 0; }))
    e.period.clear();

  if (e.period.empty()) {
    while (!e.preperiod.empty() && e.preperiod.back() == 0) e.preperiod.pop_back();
  } else {
    e.period.resize(primitive_root_length(e.period));
    // Absorb duplicated tail coefficients: t_m == t_{m+p} means the same
    // sequence is expressible with a shorter preperiod and rotated period.
    while (!e.preperiod.empty() && e.preperiod.back() == e.period.back()) {
      e.period.insert(e.period.begin(), e.period.back());
      e.period.pop_back();
      e.preperiod.pop_back();
    }
    if (e.preperiod.empty())
      throw ParryViolation("purely periodic expansion equals its own shift", e.p() + 1);
  }

  if (e.preperiod.empty()) throw ValidationError("all-zero expansion");
  if (e.alphabet_size() > static_cast<int>(kMaxAlphabet))
    throw ValidationError("alphabet too large (m + p > 255)");

  check_parry(e);

  if (e.t1() < 1) throw ValidationError("t_1 must be at least 1");
  if (e.simple()) {
    std::int64_t sum = std::accumulate(e.preperiod.begin(), e.preperiod.end(), std::int64_t{0});
    if (sum <= 1) throw ValidationError("expansion encodes beta <= 1");
  }
  return e;
}

ParryClass classify(const RenyiExpansion& e) {
  return e.simple() ? ParryClass::Simple : ParryClass::NonSimple;
}

std::vector<BigInt> parry_polynomial(const RenyiExpansion& e) {
  const int m = e.m(), p = e.p();
  const int deg = m + p;
  std::vector<BigInt> c(static_cast<std::size_t>(deg) + 1, 0);  // c[i] multiplies x^{deg-i}
  c[0] = 1;
  for (int i = 1; i <= m + p; ++i) c[static_cast<std::size_t>(i)] -= e.coeff(i);
  if (!e.simple()) {
    c[static_cast<std::size_t>(p)] -= 1;
    for (int i = 1; i <= m; ++i) c[static_cast<std::size_t>(p + i)] += e.coeff(i);
  }
  return c;
}

namespace {

BigRat eval_poly(const std::vector<BigInt>& c, const BigRat& x) {
  BigRat acc = 0;
  for (const BigInt& ci : c) acc = acc * x + BigRat(ci);
  return acc;
}

}  // namespace

BetaValue compute_beta(const RenyiExpansion& e, const BigRat& eps) {
  if (eps <= 0) throw std::invalid_argument("eps must be positive");
  const std::vector<BigInt> poly = parry_polynomial(e);

  // On (1, inf) the polynomial has the same sign as 1 - sum t_i x^{-i},
  // which is strictly increasing with a single zero at beta, so the
  // bracket below contains exactly one root.
  BigRat lo = 1;
  BigRat hi = BigRat(e.t1() + 1);
  if (eval_poly(poly, lo) >= 0 || eval_poly(poly, hi) <= 0)
    throw ConvergenceError("Parry polynomial bracket failed (internal)");
  while (hi - lo > eps) {
    BigRat mid = (lo + hi) / 2;
    BigRat v = eval_poly(poly, mid);
    if (v == 0) {
      lo = mid;
      hi = mid;
      break;
    }
    (v < 0 ? lo : hi) = mid;
  }
  BetaValue beta{lo, hi, eps};

  // Cross-check: |phi^{n+1}(0)| / |phi^n(0)| approaches the dominant
  // eigenvalue of the incidence matrix.
  Substitution s = build_substitution(e);
  std::vector<BigInt> row(static_cast<std::size_t>(e.alphabet_size()), 0);
  row[0] = 1;
  BigInt prev_len = 1;
  const int cap = 20000;
  bool agreed = false;
  for (int n = 0; n < cap; ++n) {
    row = s.incidence().apply_row(row);
    BigInt len = std::accumulate(row.begin(), row.end(), BigInt{0});
    BigRat ratio(len, prev_len);
    prev_len = len;
    if (n >= 1) {
      BigRat err = ratio - beta.mid();
      if (err < 0) err = -err;
      if (err <= 2 * eps) {
        agreed = true;
        break;
      }
    }
  }
  if (!agreed)
    throw ConvergenceError("power iteration failed to confirm beta (internal)");
  return beta;
}

DistanceVector distances(const RenyiExpansion& e, const BetaValue& beta) {
  const int count = e.alphabet_size();
  RatInterval b = beta.interval();
  DistanceVector dv;
  dv.deltas.reserve(static_cast<std::size_t>(count));
  dv.deltas.emplace_back(BigRat(1));
  const BigRat max_width = rat_from_decimal("1e-6");
  for (int k = 1; k < count; ++k) {
    RatInterval d = b * dv.deltas.back() - RatInterval(BigRat(e.coeff(k)));
    if (d.lo <= 0)
      throw PrecisionError("distance enclosure lost positivity; increase beta precision");
    if (d.width() > max_width)
      throw PrecisionError("distance enclosure too wide; increase beta precision");
    dv.deltas.push_back(d);
  }

  // Independent route: truncated tail series at the enclosure midpoint.
  const int T = 200;
  BigRat bm = beta.mid();
  BigRat inv = 1 / bm;
  std::vector<BigRat> inv_pow(static_cast<std::size_t>(T) + 1, 1);
  for (int i = 1; i <= T; ++i) inv_pow[static_cast<std::size_t>(i)] = inv_pow[static_cast<std::size_t>(i - 1)] * inv;
  BigRat tol = inv_pow[static_cast<std::size_t>(T)] * BigRat(e.t1() + 1);
  for (int k = 0; k < count; ++k) {
    BigRat series = 0;
    for (int i = 1; i <= T; ++i)
      series += BigRat(e.coeff(i + k)) * inv_pow[static_cast<std::size_t>(i)];
    BigRat err = dv.deltas[static_cast<std::size_t>(k)].mid() - series;
    if (err < 0) err = -err;
    if (err > tol + dv.deltas[static_cast<std::size_t>(k)].width() + T * beta.radius())
      throw PrecisionError("distance recurrence disagrees with series truncation");
  }
  return dv;
}

}  // namespace betaword
