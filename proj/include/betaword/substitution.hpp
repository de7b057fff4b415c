#pragma once

#include <cstdint>
#include <vector>

#include "betaword/errors.hpp"
#include "betaword/numbers.hpp"
#include "betaword/renyi.hpp"
#include "betaword/words.hpp"

namespace betaword {

/// Default cap on materialized word length; image lengths grow like beta^n.
inline constexpr std::size_t kDefaultCap = 1'000'000;

using ParikhVector = std::vector<BigInt>;

ParikhVector parikh(WordView w, int alphabet_size);

// (M)_{a,b} = |phi(a)|_b. Immutable once built.
struct IncidenceMatrix {
  int n = 0;
  std::vector<std::int64_t> entries;  // row-major

  std::int64_t at(int a, int b) const { return entries[static_cast<std::size_t>(a) * n + b]; }
  std::vector<BigInt> apply_row(const std::vector<BigInt>& row) const;  // row * M
};

/// M^k over arbitrary-precision integers, by repeated squaring.
std::vector<std::vector<BigInt>> incidence_power(const IncidenceMatrix& M, unsigned k);

/// Entrywise-positive M^k for some k <= (n-1)^2 + 1.
bool is_primitive(const IncidenceMatrix& M);

// The canonical substitution attached to an expansion of unity:
//   phi(a) = 0^{t_{a+1}} (a+1) for a < A-1, and the last letter maps to
//   0^{t_m} (simple) or 0^{t_{m+p}} m (non-simple).
// Immutable after construction; safe to share across threads.
class Substitution {
 public:
  Substitution(std::vector<Word> images, bool simple);

  int alphabet_size() const { return static_cast<int>(images_.size()); }
  const Word& image(Letter a) const { return images_[a]; }
  const std::vector<Word>& images() const { return images_; }
  const IncidenceMatrix& incidence() const { return M_; }
  bool from_simple() const { return simple_; }
  std::size_t max_image_length() const;

  /// Morphism action: concatenation of the letter images.
  /// (Member rather than a free `apply` to stay clear of std::apply.)
  Word apply(WordView w) const;

 private:
  std::vector<Word> images_;
  IncidenceMatrix M_;
  bool simple_;
};

Substitution build_substitution(const RenyiExpansion& e);

/// Letter addition tracking last letters of phi^n images:
/// k + l below m + p, otherwise m + ((k + l - m) mod p).
Letter oplus(std::int64_t k, std::int64_t l, int m, int p);

/// Coefficient subscript t_{k (+) l}; requires k + l > 0. Note this wraps
/// differently from oplus: t_{m+p} is reachable, t_{m} only directly.
std::int64_t t_oplus(std::int64_t k, std::int64_t l, const RenyiExpansion& e);

/// phi^n(w), streamed letter-by-letter (intermediate images never built).
/// Throws CapExceeded before allocating when the result would outgrow `cap`.
Word apply_n(const Substitution& s, WordView w, int n, std::size_t cap = kDefaultCap);

/// Length-N prefix of the fixed point lim phi^n(0). O(N) memory.
Word fixed_point_prefix(const Substitution& s, std::size_t n_letters);

/// |phi^n(w)| = Psi(w) M^n e, exact.
BigInt image_length(const Substitution& s, WordView w, int n);
/// Psi(phi^n(w)) = Psi(w) M^n, exact.
ParikhVector parikh_n(const Substitution& s, WordView w, int n);

/// phi^n(a) must end with 0^{t_{a (+) n}} (a (+) n); non-simple only.
bool suffix_letter_check(const Substitution& s, const RenyiExpansion& e, Letter a, int n,
                         std::size_t cap = kDefaultCap);

// Cache of |phi^d(a)|, grown on demand. Not thread-safe; cheap to build
// per use site.
class LengthTable {
 public:
  explicit LengthTable(const Substitution& s);
  const BigInt& length(int depth, Letter a);
  BigInt word_length(int depth, WordView w);

 private:
  const Substitution* s_;
  std::vector<std::vector<BigInt>> rows_;
};

// Forward iterator over the letters of phi^depth(root) with O(depth) memory
// and arbitrary-position seek. Pure producer over immutable inputs.
class MorphismStream {
 public:
  MorphismStream(const Substitution& s, Word root, int depth);

  const BigInt& total_length();
  void seek(const BigInt& position);
  bool exhausted() const;
  Letter next();

 private:
  struct Frame {
    const Word* word;
    std::size_t idx;
    int depth;
  };

  const Substitution* s_;
  Word root_;
  int depth_;
  LengthTable table_;
  BigInt total_{-1};
  std::vector<Frame> stack_;
};

}  // namespace betaword
