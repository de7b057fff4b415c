#pragma once

#include <optional>
#include <set>
#include <vector>

#include "betaword/numbers.hpp"
#include "betaword/renyi.hpp"
#include "betaword/substitution.hpp"
#include "betaword/words.hpp"

namespace betaword {

// Symbolic bispecial machinery for non-simple expansions with t_1 >= 2.
// Everything here works on exact Parikh vectors, so lengths stay exact even
// once words pass the materialization cap and are no longer stored.

struct TZ {
  std::int64_t t = 0;  // min(t_m, t_{m+p}); zero-run of the marker word 0^t m
  Letter z = 0;        // the nonzero left extension of the marker word
};

TZ t_and_z(const RenyiExpansion& e);

/// The marker word 0^t m.
Word marker_word(const RenyiExpansion& e);

/// Left extensions of the single letter a from the trailing-zero formulas;
/// a = 0 takes the trivial path (the whole alphabet).
std::set<Letter> left_extensions_of_letter(const RenyiExpansion& e, Letter a);

enum class ZBranch { Empty, Telescoped, Single };

struct ZWord {
  int n = 0;
  ZBranch branch = ZBranch::Empty;
  BigInt length = 0;
  std::optional<Word> word;  // present when length <= cap
};

/// z^(n): empty below m; for n = l*m + k either the telescoped product
/// phi^k(0^t m) phi^{k+m}(0^t m) ... (p divides z) or the single image
/// phi^{n-m}(0^t m).
ZWord z_word(const RenyiExpansion& e, int n, std::size_t cap = kDefaultCap);

// An (a-c, b-d)-bispecial factor: a*word*c and b*word*d both occur.
// The right pair is kept in tail order: t_{c+1}t_{c+2}... <= t_{d+1}t_{d+2}...
struct BispecialFactor {
  std::optional<Word> word;  // dropped beyond the cap; length/parikh stay exact
  BigInt length = 0;
  ParikhVector parikh_counts;
  Letter a = 0, b = 0;  // left pair, a != b
  Letter c = 0, d = 0;  // right pair, c != d
  int iterations = 0;   // how many f-images away from the seed
  int seed_zeros = 0;   // the seed factor is 0^{seed_zeros}
};

/// Exact comparison of the eventually periodic tails t_{c+1}t_{c+2}... and
/// t_{d+1}t_{d+2}...; decidable within m + 2p + 2 terms.
bool tail_leq(const RenyiExpansion& e, Letter c, Letter d);

BispecialFactor make_bispecial(const RenyiExpansion& e, Word word, Letter a, Letter b, Letter c,
                               Letter d, int iterations, int seed_zeros,
                               std::size_t cap = kDefaultCap);

/// One step of v -> f_L(a,b) phi(v) f_R(c,d) with the extension-pair update.
BispecialFactor f_image(const BispecialFactor& v, const RenyiExpansion& e,
                        std::size_t cap = kDefaultCap);

/// n-fold image in closed form u1 phi^n(v) u2, u2 = phi^n(c)(c+n)^{-1} and
/// u1 = z^(n + min(a,b)) when p | (a-b), empty otherwise.
BispecialFactor fn_image_closed_form(const BispecialFactor& seed, const RenyiExpansion& e, int n,
                                     std::size_t cap = kDefaultCap);

/// All (a-c,b-d)-bispecial seeds 0^k, 0 <= k < t_1, with two-sided extension
/// pairs read off the observation prefix. Requires |prefix| >= 10*|phi^{m+p}(0)|.
std::vector<BispecialFactor> initial_bispecials(const RenyiExpansion& e, WordView prefix);

/// All f-chain elements of length <= collect_len reachable from `seed`.
std::vector<BispecialFactor> chain_elements(const BispecialFactor& seed, const RenyiExpansion& e,
                                            const BigInt& collect_len, int n_cap = 400);

/// Root of the type-(I) family: z^(n) phi^n(0) (z^(n))^{-1}, a conjugate of
/// phi^n(0). Throws CapExceeded when unmaterializable.
Word w_I_n(const RenyiExpansion& e, int n, std::size_t cap = kDefaultCap);
BigInt w_I_length(const RenyiExpansion& e, int n);

/// f^n-image of the (0-1, p-0)-bispecial factor 0^{t_1 - 1}.
BispecialFactor v_I_n(const RenyiExpansion& e, int n, std::size_t cap = kDefaultCap);

struct ReturnTypeReport {
  int n = 0;
  Word z;
  std::set<Word> type_a;  // end an occurrence of phi^n(0)
  std::set<Word> type_b;  // start inside one, end outside
  std::set<Word> type_c;  // both occurrences outside
  std::set<Word> undetermined;
  std::size_t observation_prefix_length = 0;

  std::size_t total() const {
    return type_a.size() + type_b.size() + type_c.size() + undetermined.size();
  }
};

/// Complete return words of z^(n) in the prefix, classified by whether each
/// of the two z^(n) occurrences terminates an occurrence of phi^n(0).
/// The CRW set must agree with the one from the half prefix (doubling check).
ReturnTypeReport classify_returns_zn(const RenyiExpansion& e, int n, WordView prefix,
                                     std::size_t cap = kDefaultCap);

}  // namespace betaword
