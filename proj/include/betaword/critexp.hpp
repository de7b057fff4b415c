#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "betaword/bispecial.hpp"
#include "betaword/factor_oracle.hpp"
#include "betaword/numbers.hpp"
#include "betaword/renyi.hpp"

namespace betaword {

enum class TheoremBranch { MainTheorem, AffineCase, EIIDominant, Undecided };

std::string to_string(TheoremBranch b);

/// d = t_1 (0...0 (t_1 - 1))^w, the only shape with affine factor complexity;
/// there |z^(n)| = |phi^n(0)| - 1 and the type-(I) terms simplify.
bool is_affine_complexity_case(const RenyiExpansion& e);

/// Index contribution of the type-(I) family at step n:
/// t_1 + (|z^(n)| + |phi^n(1)| - 1) / |phi^n(0)|, exact.
BigRat e_I_term(const RenyiExpansion& e, int n);

struct EISupResult {
  std::vector<std::pair<int, BigRat>> terms;  // n -> term, n = 0..n_max
  BigRat finite_max{0};
  int argmax = 0;
  int horizon = 0;             // terms were examined up to this n
  RatInterval limit;           // lim of the terms (the ultimate-exponent formula)
  bool attained = false;       // finite max certified >= limit
  bool near_tie = false;       // finite max within the certificate tolerance of the limit
  bool tail_certificate = false;  // 5 consecutive tail terms within 1e-9 of the limit
};

/// Terms up to n_max plus the exact limit; the scan continues past n_max
/// until the tail stabilization certificate holds (terms converge
/// geometrically since image lengths grow like beta^n).
EISupResult e_I_sup(const RenyiExpansion& e, int n_max,
                    const BigRat& beta_precision = rat_from_decimal("1e-14"));

/// Upper bound on indices realized by type-(II) pairs: 3 when p does not
/// divide z, 4 otherwise.
int e_II_bound(const RenyiExpansion& e);

struct EIISpecialCase {
  bool applies = false;
  std::optional<BigRat> exact_value;  // set when E_II is pinned exactly (= 3, p not | z)
  std::vector<std::pair<int, BigRat>> witness_terms;  // n -> 2 + (|z^(n)|-1)/|phi^n(p)|
};

/// Conditions under which the type-(II) family dominates: phi^m(p) = m,
/// 0p occurs (checked on the prefix), t_1 = 2, and |phi^n(m)| >= |phi^n(1)|
/// for n = 1..m-1. Witness roots are z^(n) phi^n(p) (z^(n))^{-1}.
EIISpecialCase e_II_special_case(const RenyiExpansion& e, WordView prefix, int n_max = 30);

struct CritExpReport {
  RenyiExpansion expansion;
  std::int64_t t = 0;
  Letter z = 0;
  TheoremBranch branch = TheoremBranch::Undecided;

  std::vector<std::pair<int, BigRat>> e_I_terms;
  BigRat e_I_finite_max{0};
  int e_I_argmax = 0;
  RatInterval e_I_limit;
  bool e_I_attained = false;
  bool near_tie = false;
  bool tail_certificate = false;

  int type2_bound = 0;
  std::optional<BigRat> e_II_exact;
  std::vector<std::pair<int, BigRat>> e_II_witness_terms;

  std::optional<BigRat> e_exact;  // E when exactly known and rational
  RatInterval e_enclosure;        // certified bounds on E (value or [lower, upper])

  BigRat brute_force_floor{1};
  std::size_t floor_prefix_length = 0;
  std::size_t floor_max_factor_length = 0;

  RatInterval e_star;
  bool e_star_unconditional = false;
};

struct RunLimits {
  int n_max = 30;
  std::size_t prefix_length = 1'000'000;
  std::size_t max_factor_length = 300;
  BigRat beta_precision = rat_from_decimal("1e-14");
  std::size_t materialization_cap = kDefaultCap;
};

/// Branch dispatch: the closed type-(I) supremum when t_1 >= 4 or
/// (t_1 = 3 and p does not divide z); the type-(II) dominance case when its
/// conditions fire; otherwise an honest [floor, upper] interval.
CritExpReport critical_exponent(const RenyiExpansion& e, const RunLimits& limits = {});

/// beta + (t + Delta_m)/(beta^m - 1) when p | z, beta + (t + Delta_m)/beta^m
/// otherwise. Unconditionally the limit of the type-(I) terms; equals the
/// ultimate critical exponent under the main-theorem hypothesis.
RatInterval ultimate_critical_exponent(const RenyiExpansion& e,
                                       const BigRat& beta_precision = rat_from_decimal("1e-14"));

struct VerificationReport {
  bool passed = true;
  std::vector<std::string> failures;
  std::vector<std::string> notes;
  BigRat floor{1};
  int high_index_lengths_checked = 0;
  int terms_attained = 0;
  int terms_skipped = 0;
};

/// (1) oracle floor must not exceed the certified E bounds, (2) every
/// per-length maximum above t_1 + 1 must have a root that is a conjugate of
/// some phi^n(0) or a left return word of some z^(n), (3) each type-(I)
/// term whose maximal power fits the prefix must be attained exactly.
VerificationReport verify_critical_exponent(const RenyiExpansion& e, const RunLimits& limits = {});

}  // namespace betaword
