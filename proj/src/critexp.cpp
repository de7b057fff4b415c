#include "betaword/critexp.hpp"

#include <algorithm>

namespace betaword {

namespace {

void require_scope(const RenyiExpansion& e) {
  if (e.simple())
    throw ValidationError("critical-exponent machinery requires a non-simple expansion");
  if (e.t1() < 2) throw ValidationError("critical-exponent machinery requires t_1 >= 2");
}

// Shared length bookkeeping for one expansion.
struct LengthCtx {
  Substitution s;
  LengthTable table;
  TZ tz;
  Word marker;
  bool z_divisible;
  int m;
  std::int64_t t1;

  explicit LengthCtx(const RenyiExpansion& e)
      : s(build_substitution(e)),
        table(s),
        tz(t_and_z(e)),
        marker(marker_word(e)),
        z_divisible(tz.z % e.p() == 0),
        m(e.m()),
        t1(e.t1()) {}

  BigInt z_length(int n) {
    if (n < m) return 0;
    if (!z_divisible) return table.word_length(n - m, marker);
    BigInt total = 0;
    for (int j = n % m; j <= n - m; j += m) total += table.word_length(j, marker);
    return total;
  }

  BigRat term(int n) {
    BigInt num = z_length(n) + table.length(n, 1) - 1;
    return BigRat(t1) + BigRat(num, table.length(n, 0));
  }
};

LengthCtx make_ctx(const RenyiExpansion& e) { return LengthCtx(e); }

const BigRat& certificate_tolerance() {
  static const BigRat tol = rat_from_decimal("1e-9");
  return tol;
}

}  // namespace

std::string to_string(TheoremBranch b) {
  switch (b) {
    case TheoremBranch::MainTheorem: return "MainTheorem";
    case TheoremBranch::AffineCase: return "AffineCase";
    case TheoremBranch::EIIDominant: return "EIIDominant";
    case TheoremBranch::Undecided: return "Undecided";
  }
  return "?";
}

bool is_affine_complexity_case(const RenyiExpansion& e) {
  if (e.simple() || e.m() != 1) return false;
  const auto& per = e.period;
  for (std::size_t i = 0; i + 1 < per.size(); ++i)
    if (per[i] != 0) return false;
  return per.back() == e.t1() - 1;
}

BigRat e_I_term(const RenyiExpansion& e, int n) {
  require_scope(e);
  if (n < 0) throw std::invalid_argument("e_I_term requires n >= 0");
  LengthCtx ctx = make_ctx(e);
  return ctx.term(n);
}

EISupResult e_I_sup(const RenyiExpansion& e, int n_max, const BigRat& beta_precision) {
  require_scope(e);
  if (n_max < e.m() + 3) throw std::invalid_argument("n_max must be at least m + 3");
  LengthCtx ctx = make_ctx(e);
  EISupResult out;
  out.limit = ultimate_critical_exponent(e, beta_precision);
  const BigRat& tol = certificate_tolerance();
  if (out.limit.width() >= tol)
    throw PrecisionError("limit enclosure wider than the certificate tolerance");

  int consecutive = 0;
  const int hard_cap = 5000;
  bool done = false;
  for (int n = 0; n <= hard_cap; ++n) {
    BigRat term = ctx.term(n);
    if (n <= n_max) out.terms.emplace_back(n, term);
    if (n == 0 || term > out.finite_max) {
      out.finite_max = term;
      out.argmax = n;
    }
    bool inside = term < out.limit.hi + tol && term > out.limit.lo - tol;
    consecutive = inside ? consecutive + 1 : 0;
    if (n >= n_max && consecutive >= 5) {
      out.horizon = n;
      done = true;
      break;
    }
  }
  if (!done) throw ConvergenceError("type-(I) terms failed to stabilize near the limit");
  out.tail_certificate = true;
  out.attained = out.finite_max >= out.limit.hi + tol;
  out.near_tie = !out.attained && out.finite_max > out.limit.hi;
  return out;
}

int e_II_bound(const RenyiExpansion& e) {
  require_scope(e);
  TZ tz = t_and_z(e);
  return (tz.z % e.p() == 0) ? 4 : 3;
}

EIISpecialCase e_II_special_case(const RenyiExpansion& e, WordView prefix, int n_max) {
  require_scope(e);
  EIISpecialCase out;
  if (e.t1() != 2) return out;
  const int m = e.m(), p = e.p();
  const Letter letter_p = static_cast<Letter>(p);
  LengthCtx ctx = make_ctx(e);
  if (ctx.table.length(m, letter_p) != 1) return out;
  Word image = apply_n(ctx.s, Word{letter_p}, m, 4);
  if (image != Word{static_cast<Letter>(m)}) return out;
  Word zero_p{Letter{0}, letter_p};
  if (find_occurrences(prefix, zero_p).empty()) return out;
  for (int n = 1; n <= m - 1; ++n)
    if (ctx.table.length(n, static_cast<Letter>(m)) < ctx.table.length(n, 1)) return out;

  out.applies = true;
  for (int n = m; n <= n_max; ++n) {
    BigInt zl = ctx.z_length(n);
    out.witness_terms.emplace_back(
        n, BigRat(2) + BigRat(zl - 1, ctx.table.length(n, letter_p)));
  }
  if (ctx.tz.z % p != 0) {
    // Here t = 0 and phi^m(p) = m force |z^(n)| = |phi^n(p)|, so the witness
    // terms are 3 - 1/|z^(n)| and the type-(II) bound 3 is met in the limit.
    if (ctx.tz.t != 0)
      throw std::logic_error("phi^m(p) = m forces t = 0 (internal)");
    out.exact_value = BigRat(3);
  }
  return out;
}

CritExpReport critical_exponent(const RenyiExpansion& e, const RunLimits& limits) {
  require_scope(e);
  if (limits.prefix_length < 4 * limits.max_factor_length)
    throw std::invalid_argument("prefix_length must be at least 4 * max_factor_length");
  if (limits.max_factor_length == 0 || limits.n_max <= 0)
    throw std::invalid_argument("limits must be positive");

  CritExpReport report;
  report.expansion = e;
  TZ tz = t_and_z(e);
  report.t = tz.t;
  report.z = tz.z;

  Substitution s = build_substitution(e);
  Word prefix = fixed_point_prefix(s, limits.prefix_length);
  IndexTable table = ind_n_table(prefix, limits.max_factor_length);
  report.brute_force_floor = table.partial_critical_exponent;
  report.floor_prefix_length = limits.prefix_length;
  report.floor_max_factor_length = limits.max_factor_length;

  EISupResult eis = e_I_sup(e, limits.n_max, limits.beta_precision);
  report.e_I_terms = eis.terms;
  report.e_I_finite_max = eis.finite_max;
  report.e_I_argmax = eis.argmax;
  report.e_I_limit = eis.limit;
  report.e_I_attained = eis.attained;
  report.near_tie = eis.near_tie;
  report.tail_certificate = eis.tail_certificate;
  report.type2_bound = e_II_bound(e);
  report.e_star = eis.limit;

  EIISpecialCase special = e_II_special_case(e, prefix, limits.n_max);
  report.e_II_witness_terms = special.witness_terms;
  report.e_II_exact = special.exact_value;

  const bool main_hypothesis =
      e.t1() >= 4 || (e.t1() == 3 && tz.z % e.p() != 0);
  const BigRat& tol = certificate_tolerance();
  BigRat e_I_lower = std::max(eis.finite_max, eis.limit.lo);
  BigRat e_I_upper = std::max(eis.finite_max, BigRat(eis.limit.hi + tol));

  if (main_hypothesis) {
    report.branch = is_affine_complexity_case(e) ? TheoremBranch::AffineCase
                                                 : TheoremBranch::MainTheorem;
    if (eis.attained) {
      report.e_exact = eis.finite_max;
      report.e_enclosure = RatInterval(eis.finite_max);
    } else {
      report.e_enclosure = RatInterval(e_I_lower, e_I_upper);
    }
    report.e_star_unconditional = true;
  } else if (special.applies) {
    report.branch = TheoremBranch::EIIDominant;
    if (special.exact_value) {
      report.e_exact = *special.exact_value;
      report.e_enclosure = RatInterval(*special.exact_value);
    } else {
      BigRat lower = e_I_lower;
      for (const auto& [n, w] : special.witness_terms) lower = std::max(lower, w);
      lower = std::max(lower, report.brute_force_floor);
      report.e_enclosure = RatInterval(lower, BigRat(report.type2_bound));
    }
  } else {
    report.branch = TheoremBranch::Undecided;
    BigRat lower = std::max(e_I_lower, report.brute_force_floor);
    BigRat upper = std::max(e_I_upper, BigRat(report.type2_bound));
    report.e_enclosure = RatInterval(lower, upper);
  }
  return report;
}

RatInterval ultimate_critical_exponent(const RenyiExpansion& e, const BigRat& beta_precision) {
  require_scope(e);
  BetaValue beta = compute_beta(e, beta_precision);
  DistanceVector dv = distances(e, beta);
  TZ tz = t_and_z(e);
  const int m = e.m();
  RatInterval b = beta.interval();
  RatInterval numerator = RatInterval(BigRat(tz.t)) + dv.at(static_cast<std::size_t>(m));
  RatInterval denominator = interval_pow(b, static_cast<unsigned>(m));
  if (tz.z % e.p() == 0)
    denominator = denominator - RatInterval(BigRat(1));
  return b + numerator / denominator;
}

VerificationReport verify_critical_exponent(const RenyiExpansion& e, const RunLimits& limits) {
  require_scope(e);
  Substitution s = build_substitution(e);
  if (BigInt(limits.prefix_length) < image_length(s, Word{0}, e.m()))
    throw ValidationError("prefix too short");

  VerificationReport ver;
  auto fail = [&](std::string msg) {
    ver.passed = false;
    ver.failures.push_back(std::move(msg));
  };

  CritExpReport report = critical_exponent(e, limits);
  Word prefix = fixed_point_prefix(s, limits.prefix_length);
  IndexTable table = ind_n_table(prefix, limits.max_factor_length);
  ver.floor = table.partial_critical_exponent;
  const bool closed_form = report.branch == TheoremBranch::MainTheorem ||
                           report.branch == TheoremBranch::AffineCase;

  // (1) The observed floor must sit below the certified upper bound.
  if (ver.floor > report.e_enclosure.hi) {
    for (const IndexTable::Row& row : table.rows) {
      if (row.index() == ver.floor) {
        fail("oracle floor " + mixed_fraction(ver.floor) + " exceeds certified bound; witness " +
             to_display(table.witness_factor(prefix, row.length)) + " at position " +
             std::to_string(row.witness_position));
        break;
      }
    }
  }

  // (2) High per-length maxima must come from the two designed families.
  const BigRat threshold = BigRat(e.t1() + 1);
  std::vector<Word> phi_words;  // phi^n(0) for |phi^n(0)| <= max_factor_length
  {
    LengthTable lt(s);
    for (int n = 0;; ++n) {
      if (lt.length(n, 0) > limits.max_factor_length) break;
      phi_words.push_back(apply_n(s, Word{0}, n, limits.max_factor_length + 1));
    }
  }
  std::vector<Word> z_words;
  for (int n = e.m(); n <= e.m() + 200; ++n) {
    ZWord z = z_word(e, n, 8 * limits.max_factor_length);
    if (!z.word) break;
    z_words.push_back(*z.word);
  }
  auto is_lrw_of = [&](const Word& r, const Word& zw) {
    Word crw = concat(r, zw);
    if (!starts_with(crw, zw)) return false;
    std::vector<std::size_t> occ = find_occurrences(crw, zw);
    if (occ.size() != 2 || occ[0] != 0 || occ[1] != r.size()) return false;
    return !find_occurrences(prefix, crw).empty();
  };
  for (const IndexTable::Row& row : table.rows) {
    if (row.index() <= threshold) continue;
    ++ver.high_index_lengths_checked;
    Word power(prefix.begin() + static_cast<std::ptrdiff_t>(row.witness_position),
               prefix.begin() +
                   static_cast<std::ptrdiff_t>(row.witness_position + row.length + row.extension));
    Word r = root_of(power);
    bool explained = false;
    for (const Word& pw : phi_words) {
      if (pw.size() != r.size()) continue;
      Word doubled = concat(pw, pw);
      if (!find_occurrences(doubled, r).empty()) {
        explained = true;
        break;
      }
    }
    if (!explained)
      for (const Word& zw : z_words) {
        if (zw.size() > std::max<std::size_t>(8 * r.size(), 256)) break;
        if (is_lrw_of(r, zw)) {
          explained = true;
          break;
        }
      }
    if (!explained)
      fail("index " + mixed_fraction(row.index()) + " at length " + std::to_string(row.length) +
           " (root " + to_display(r) + ", position " + std::to_string(row.witness_position) +
           ") is outside both designed families");
  }

  // (3) Type-(I) terms whose maximal power fits must be attained exactly.
  for (int n = 0; n <= 5; ++n) {
    BigRat term = e_I_term(e, n);
    Word w, power;
    try {
      w = w_I_n(e, n, limits.materialization_cap);
      BispecialFactor v = v_I_n(e, n, limits.materialization_cap);
      if (!v.word) {
        ++ver.terms_skipped;
        continue;
      }
      power = concat(w, *v.word);
    } catch (const CapExceeded&) {
      ++ver.terms_skipped;
      continue;
    }
    if (power.size() > prefix.size() || find_occurrences(prefix, power).empty()) {
      ++ver.terms_skipped;
      continue;
    }
    IndexRecord rec = index_of(prefix, w);
    if (rec.index == term) {
      ++ver.terms_attained;
    } else if (rec.index < term) {
      fail("e_I_term(" + std::to_string(n) + ") = " + mixed_fraction(term) +
           " not reached although its power occurs");
    } else if (closed_form) {
      fail("oracle index of w_I^(" + std::to_string(n) + ") is " + mixed_fraction(rec.index) +
           ", above the term " + mixed_fraction(term));
    } else {
      ver.notes.push_back("index of w_I^(" + std::to_string(n) + ") exceeds its term (" +
                          mixed_fraction(rec.index) + " > " + mixed_fraction(term) +
                          "); expected only outside the closed-form branches");
    }
  }
  return ver;
}

}  // namespace betaword
