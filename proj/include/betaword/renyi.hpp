#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "betaword/errors.hpp"
#include "betaword/numbers.hpp"

namespace betaword {

// Validated expansion of unity d_beta(1) = t_1 t_2 t_3 ... in canonical
// minimal (m, p) form. Immutable in spirit: construct through
// parse_expansion and treat as read-only.
struct RenyiExpansion {
  std::vector<std::int64_t> preperiod;  // t_1 .. t_m
  std::vector<std::int64_t> period;     // t_{m+1} .. t_{m+p}; empty means d ends in 0^w

  int m() const { return static_cast<int>(preperiod.size()); }
  int p() const { return static_cast<int>(period.size()); }
  bool simple() const { return period.empty(); }
  int alphabet_size() const { return m() + p(); }
  std::int64_t t1() const { return preperiod.front(); }

  /// t_k for k >= 1, following the eventually periodic tail (0 beyond m when simple).
  std::int64_t coeff(std::int64_t k) const;

  /// Canonical text form; parse_expansion(to_string()) reproduces *this.
  std::string to_string() const;

  bool operator==(const RenyiExpansion&) const = default;
};

enum class ParryClass { Simple, NonSimple };

/// Grammar: expansion := coeffs [ "(" coeffs ")" ],
///          coeffs    := digitstring | INT ("," INT)*.
/// The digit form is only legal while every coefficient is < 10.
/// Returns the canonical minimal form: period reduced to its primitive root,
/// preperiod shortened while the trailing coefficient duplicates the period's.
RenyiExpansion parse_expansion(const std::string& text);

ParryClass classify(const RenyiExpansion& e);

// Certified enclosure of beta, the dominant root of the Parry polynomial.
struct BetaValue {
  BigRat lo;
  BigRat hi;
  BigRat requested_precision;

  BigRat mid() const { return (lo + hi) / 2; }
  BigRat radius() const { return (hi - lo) / 2; }
  RatInterval interval() const { return RatInterval(lo, hi); }
  double to_double() const { return static_cast<double>(mid()); }
};

/// Exact-sign bisection on the integer Parry polynomial over (1, t_1 + 1],
/// cross-checked by power iteration on the incidence matrix; the two must
/// agree within 2*eps or a ConvergenceError is raised.
BetaValue compute_beta(const RenyiExpansion& e, const BigRat& eps);

/// Parry polynomial coefficients, highest degree first.
/// Non-simple: x^{m+p} - sum t_i x^{m+p-i} - x^m + sum_{i<=m} t_i x^{m-i}.
/// Simple:     x^m - sum t_i x^{m-i}.
std::vector<BigInt> parry_polynomial(const RenyiExpansion& e);

// Gap distances between consecutive beta-integers, as certified enclosures.
struct DistanceVector {
  std::vector<RatInterval> deltas;  // Delta_0 .. Delta_{A-1}

  const RatInterval& at(std::size_t k) const { return deltas.at(k); }
  std::size_t size() const { return deltas.size(); }
};

/// Delta_0 = 1, Delta_k = beta*Delta_{k-1} - t_k. The recurrence output is
/// checked against the truncated series sum_{i<=T} t_{i+k}/beta^i (T = 200);
/// disagreement beyond beta^{-T}(t_1+1) plus interval slack raises
/// PrecisionError, as do intervals that grow wide or lose positivity.
DistanceVector distances(const RenyiExpansion& e, const BetaValue& beta);

}  // namespace betaword
