#include <doctest.h>

#include "betaword/critexp.hpp"
#include "betaword/json_io.hpp"

using namespace betaword;

namespace {

Word u_prefix(const char* expansion, std::size_t n) {
  return fixed_point_prefix(build_substitution(parse_expansion(expansion)), n);
}

RunLimits small_limits() {
  RunLimits limits;
  limits.prefix_length = 40'000;
  limits.max_factor_length = 80;
  limits.n_max = 12;
  return limits;
}

BigRat abs_rat(const BigRat& q) { return q < 0 ? BigRat(-q) : q; }

}  // namespace

TEST_CASE("type-(I) terms: base case and frozen value") {
  for (const char* text : {"221(12)", "22(01)", "41(2)", "21(1200)"})
    CHECK(e_I_term(parse_expansion(text), 0) == BigRat(parse_expansion(text).t1()));
  // 22(01), n = 4: |z^(4)| = 13, |phi^4(1)| = 54, |phi^4(0)| = 70
  CHECK(e_I_term(parse_expansion("22(01)"), 4) == BigRat(2) + BigRat(66, 70));
}

TEST_CASE("type-(I) terms exceed t_1 for n >= 1") {
  for (const char* text : {"221(12)", "22(01)", "41(2)", "2(1)", "33(02)"}) {
    RenyiExpansion e = parse_expansion(text);
    for (int n = 1; n <= 10; ++n) CHECK(e_I_term(e, n) > BigRat(e.t1()));
  }
}

TEST_CASE("affine-complexity detection and simplified terms") {
  CHECK(is_affine_complexity_case(parse_expansion("2(1)")));
  CHECK(is_affine_complexity_case(parse_expansion("4(0003)")));
  CHECK(is_affine_complexity_case(parse_expansion("3(2)")));
  CHECK_FALSE(is_affine_complexity_case(parse_expansion("41(2)")));
  CHECK_FALSE(is_affine_complexity_case(parse_expansion("22(01)")));
  for (const char* text : {"2(1)", "4(0003)", "3(2)"}) {
    RenyiExpansion e = parse_expansion(text);
    Substitution s = build_substitution(e);
    for (int n = 0; n <= 8; ++n) {
      // |z^(n)| = |phi^n(0)| - 1 collapses the term
      CHECK(z_word(e, n, 0).length == image_length(s, Word{0}, n) - 1);
      BigRat simplified = BigRat(e.t1() + 1) +
                          BigRat(image_length(s, Word{1}, n) - 2, image_length(s, Word{0}, n));
      CHECK(e_I_term(e, n) == simplified);
    }
  }
}

TEST_CASE("type-(I) supremum bookkeeping") {
  RenyiExpansion e = parse_expansion("41(2)");
  EISupResult sup = e_I_sup(e, 12);
  for (const auto& [n, term] : sup.terms) CHECK(term <= sup.finite_max);
  CHECK(sup.tail_certificate);
  CHECK(sup.horizon >= 12);
  // terms climb toward the limit here, so the sup is the limit itself
  CHECK_FALSE(sup.attained);
  CHECK(sup.finite_max < sup.limit.hi + rat_from_decimal("1e-9"));

  CHECK_THROWS_AS(e_I_sup(e, e.m()), std::invalid_argument);
}

TEST_CASE("21(1200): every type-(I) quantity stays strictly below 3") {
  RenyiExpansion e = parse_expansion("21(1200)");
  EISupResult sup = e_I_sup(e, 30);
  CHECK(sup.finite_max < BigRat(3));
  CHECK(sup.limit.hi < BigRat(3));
}

TEST_CASE("type-(II) bound from divisibility") {
  CHECK(e_II_bound(parse_expansion("22(01)")) == 4);   // p = 2 divides z = 2
  CHECK(e_II_bound(parse_expansion("221(12)")) == 3);  // p = 2, z = 1
  CHECK(e_II_bound(parse_expansion("21(1200)")) == 3);
  CHECK(e_II_bound(parse_expansion("41(2)")) == 4);    // p = 1 divides everything
}

TEST_CASE("type-(II) dominance case") {
  RenyiExpansion e = parse_expansion("21(1200)");
  Word prefix = u_prefix("21(1200)", 100'000);
  EIISpecialCase sc = e_II_special_case(e, prefix, 8);
  REQUIRE(sc.applies);
  REQUIRE(sc.exact_value);
  CHECK(*sc.exact_value == BigRat(3));
  // witness terms are 3 - 1/|z^(n)|
  for (const auto& [n, w] : sc.witness_terms) {
    BigInt zl = z_word(e, n, 0).length;
    CHECK(w == BigRat(3) - BigRat(BigInt(1), zl));
  }
  // oracle sanity on the first two witnesses: the roots z^(n) phi^n(p) (z^(n))^-1
  Substitution s = build_substitution(e);
  for (int n = 2; n <= 3; ++n) {
    Word z = *z_word(e, n).word;
    Word img = apply_n(s, Word{static_cast<Letter>(e.p())}, n);
    REQUIRE(ends_with(img, z));
    Word root = z;
    root.insert(root.end(), img.begin(), img.end() - static_cast<std::ptrdiff_t>(z.size()));
    IndexRecord rec = index_of(prefix, root);
    CHECK(rec.index == BigRat(3) - BigRat(BigInt(1), BigInt(z.size())));
  }

  // never fires when t_1 != 2
  Word p33 = u_prefix("33(02)", 20'000);
  CHECK_FALSE(e_II_special_case(parse_expansion("33(02)"), p33).applies);
  // t_1 = 2 but phi^m(p) != m
  Word p221 = u_prefix("221(12)", 20'000);
  CHECK_FALSE(e_II_special_case(parse_expansion("221(12)"), p221).applies);
}

TEST_CASE("branch dispatch: main theorem") {
  RunLimits limits = small_limits();
  CritExpReport r41 = critical_exponent(parse_expansion("41(2)"), limits);
  CHECK(r41.branch == TheoremBranch::MainTheorem);
  CHECK(r41.brute_force_floor <= r41.e_enclosure.hi);
  CHECK(r41.e_star_unconditional);
  // t_1 = 3 with p dividing z is not covered by the theorem
  CritExpReport r33 = critical_exponent(parse_expansion("33(02)"), limits);
  CHECK(r33.branch == TheoremBranch::Undecided);
  // t_1 = 3 with p not dividing z is
  CritExpReport r312 = critical_exponent(parse_expansion("3(12)"), limits);
  CHECK(r312.branch == TheoremBranch::MainTheorem);
  // affine shape with t_1 >= 4
  CritExpReport raff = critical_exponent(parse_expansion("4(0003)"), limits);
  CHECK(raff.branch == TheoremBranch::AffineCase);
}

TEST_CASE("branch dispatch: type-(II) dominance with E = 3 exactly") {
  CritExpReport report = critical_exponent(parse_expansion("21(1200)"), small_limits());
  CHECK(report.branch == TheoremBranch::EIIDominant);
  REQUIRE(report.e_exact);
  CHECK(*report.e_exact == BigRat(3));
  CHECK(report.e_I_finite_max < BigRat(3));
  CHECK(report.e_I_limit.hi < BigRat(3));
}

TEST_CASE("branch dispatch: undecided reports an honest interval") {
  RunLimits limits = small_limits();
  CritExpReport report = critical_exponent(parse_expansion("22(01)"), limits);
  CHECK(report.branch == TheoremBranch::Undecided);
  CHECK_FALSE(report.e_exact);
  // the 3 + 1/11 witness puts the floor above 3
  CHECK(report.brute_force_floor >= BigRat(34, 11));
  CHECK(report.e_enclosure.lo >= BigRat(34, 11));
  CHECK(report.e_enclosure.hi <= BigRat(4) + rat_from_decimal("1e-9"));
}

TEST_CASE("ultimate critical exponent is the limit of the terms") {
  for (const char* text : {"221(12)", "41(2)", "22(01)", "2(1)", "21(1200)"}) {
    RenyiExpansion e = parse_expansion(text);
    RatInterval star = ultimate_critical_exponent(e);
    CHECK(star.width() < rat_from_decimal("1e-10"));
    // find n with |phi^n(0)| > 10^10 and compare the exact term
    Substitution s = build_substitution(e);
    int n = 0;
    while (image_length(s, Word{0}, n) <= BigInt("10000000000")) ++n;
    BigRat term = e_I_term(e, n);
    CHECK(abs_rat(term - star.mid()) < rat_from_decimal("1e-7"));
  }
}

TEST_CASE("length-ratio components approach the distances") {
  RenyiExpansion e = parse_expansion("221(12)");
  Substitution s = build_substitution(e);
  BetaValue beta = compute_beta(e, rat_from_decimal("1e-14"));
  DistanceVector dv = distances(e, beta);
  int n = 0;
  while (image_length(s, Word{0}, n) <= BigInt("10000000000")) ++n;
  BigRat ratio1(image_length(s, Word{1}, n), image_length(s, Word{0}, n));
  CHECK(abs_rat(ratio1 - (beta.mid() - e.t1())) < rat_from_decimal("1e-8"));
  CHECK(abs_rat(ratio1 - dv.at(1).mid()) < rat_from_decimal("1e-8"));
  // z-ratio limit per divisibility (221(12): p does not divide z)
  BigRat zratio(z_word(e, n, 0).length, image_length(s, Word{0}, n));
  RatInterval expected = (RatInterval(BigRat(1)) + dv.at(3)) /
                         interval_pow(beta.interval(), 3);
  CHECK(abs_rat(zratio - expected.mid()) < rat_from_decimal("1e-8"));
}

TEST_CASE("verification harness") {
  RunLimits limits = small_limits();
  VerificationReport v41 = verify_critical_exponent(parse_expansion("41(2)"), limits);
  CHECK(v41.passed);
  CHECK(v41.terms_attained >= 2);
  VerificationReport v221 = verify_critical_exponent(parse_expansion("221(12)"), limits);
  CHECK(v221.passed);

  RunLimits tiny;
  tiny.prefix_length = 8;
  tiny.max_factor_length = 2;
  CHECK_THROWS_AS(verify_critical_exponent(parse_expansion("41(2)"), tiny), ValidationError);
}

TEST_CASE("report serialization carries exact terms") {
  CritExpReport report = critical_exponent(parse_expansion("21(1200)"), small_limits());
  Json j = critexp_to_json(report);
  CHECK(j["branch"] == "EIIDominant");
  CHECK(j["e_value"]["exact"] == "3/1");
  CHECK(j["e_terms"].size() == static_cast<std::size_t>(small_limits().n_max) + 1);
  CHECK(j["e_terms"][0][1] == "2");  // n = 0 term equals t_1 = 2
  CHECK(j["e_terms"][0][2] == "1");
  // deterministic dumps
  CHECK(j.dump() == critexp_to_json(critical_exponent(parse_expansion("21(1200)"),
                                                      small_limits()))
                        .dump());
}
