#include "betaword/substitution.hpp"

#include <algorithm>
#include <numeric>

namespace betaword {

ParikhVector parikh(WordView w, int alphabet_size) {
  ParikhVector counts(static_cast<std::size_t>(alphabet_size), 0);
  for (Letter a : w) counts.at(a) += 1;
  return counts;
}

std::vector<BigInt> IncidenceMatrix::apply_row(const std::vector<BigInt>& row) const {
  std::vector<BigInt> out(static_cast<std::size_t>(n), 0);
  for (int a = 0; a < n; ++a) {
    if (row[static_cast<std::size_t>(a)] == 0) continue;
    for (int b = 0; b < n; ++b) {
      std::int64_t m = at(a, b);
      if (m != 0) out[static_cast<std::size_t>(b)] += row[static_cast<std::size_t>(a)] * m;
    }
  }
  return out;
}

namespace {

using BigMatrix = std::vector<std::vector<BigInt>>;

BigMatrix big_identity(int n) {
  BigMatrix I(static_cast<std::size_t>(n), std::vector<BigInt>(static_cast<std::size_t>(n), 0));
  for (int i = 0; i < n; ++i) I[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
  return I;
}

BigMatrix big_mul(const BigMatrix& x, const BigMatrix& y) {
  const std::size_t n = x.size();
  BigMatrix out(n, std::vector<BigInt>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (x[i][k] == 0) continue;
      for (std::size_t j = 0; j < n; ++j)
        if (y[k][j] != 0) out[i][j] += x[i][k] * y[k][j];
    }
  return out;
}

}  // namespace

std::vector<std::vector<BigInt>> incidence_power(const IncidenceMatrix& M, unsigned k) {
  BigMatrix base(static_cast<std::size_t>(M.n), std::vector<BigInt>(static_cast<std::size_t>(M.n)));
  for (int i = 0; i < M.n; ++i)
    for (int j = 0; j < M.n; ++j) base[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = M.at(i, j);
  BigMatrix out = big_identity(M.n);
  while (k > 0) {
    if (k & 1u) out = big_mul(out, base);
    base = big_mul(base, base);
    k >>= 1u;
  }
  return out;
}

bool is_primitive(const IncidenceMatrix& M) {
  const int n = M.n;
  std::vector<char> reach(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n * n; ++i) reach[static_cast<std::size_t>(i)] = M.entries[static_cast<std::size_t>(i)] > 0;
  const int bound = (n - 1) * (n - 1) + 1;
  auto all_positive = [&]() {
    return std::all_of(reach.begin(), reach.end(), [](char c) { return c != 0; });
  };
  std::vector<char> next(static_cast<std::size_t>(n) * n);
  for (int step = 1; step <= bound; ++step) {
    if (all_positive()) return true;
    std::fill(next.begin(), next.end(), 0);
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k) {
        if (!reach[static_cast<std::size_t>(i) * n + k]) continue;
        for (int j = 0; j < n; ++j)
          if (M.at(k, j) > 0) next[static_cast<std::size_t>(i) * n + j] = 1;
      }
    reach.swap(next);
  }
  return all_positive();
}

Substitution::Substitution(std::vector<Word> images, bool simple)
    : images_(std::move(images)), simple_(simple) {
  const int n = static_cast<int>(images_.size());
  M_.n = n;
  M_.entries.assign(static_cast<std::size_t>(n) * n, 0);
  for (int a = 0; a < n; ++a) {
    if (images_[static_cast<std::size_t>(a)].empty())
      throw ValidationError("substitution images must be nonempty");
    for (Letter b : images_[static_cast<std::size_t>(a)])
      M_.entries[static_cast<std::size_t>(a) * n + b] += 1;
  }
}

std::size_t Substitution::max_image_length() const {
  std::size_t best = 0;
  for (const Word& w : images_) best = std::max(best, w.size());
  return best;
}

Substitution build_substitution(const RenyiExpansion& e) {
  const int m = e.m(), p = e.p();
  const int n = e.alphabet_size();
  std::vector<Word> images(static_cast<std::size_t>(n));
  auto block = [&](std::int64_t zeros, int last, bool with_last) {
    Word w(static_cast<std::size_t>(zeros), Letter{0});
    if (with_last) w.push_back(static_cast<Letter>(last));
    return w;
  };
  for (int a = 0; a + 1 < n; ++a) images[static_cast<std::size_t>(a)] = block(e.coeff(a + 1), a + 1, true);
  if (e.simple()) {
    images[static_cast<std::size_t>(n - 1)] = block(e.coeff(m), 0, false);
  } else {
    images[static_cast<std::size_t>(n - 1)] = block(e.coeff(m + p), m, true);
  }
  Substitution s(std::move(images), e.simple());
  if (!is_primitive(s.incidence()))
    throw std::logic_error("canonical substitution must be primitive (internal)");
  return s;
}

Letter oplus(std::int64_t k, std::int64_t l, int m, int p) {
  if (k < 0 || l < 0) throw std::invalid_argument("oplus arguments must be nonnegative");
  std::int64_t sum = k + l;
  if (sum < m + p) return static_cast<Letter>(sum);
  if (p == 0) throw std::invalid_argument("oplus overflow on a simple-shape alphabet");
  return static_cast<Letter>(m + (sum - m) % p);
}

std::int64_t t_oplus(std::int64_t k, std::int64_t l, const RenyiExpansion& e) {
  std::int64_t sum = k + l;
  if (sum <= 0) throw std::invalid_argument("t_oplus requires k + l > 0");
  const int m = e.m(), p = e.p();
  if (sum < m + p + 1) return e.coeff(sum);
  if (p == 0) return 0;
  return e.coeff(m + 1 + (sum - m - 1) % p);
}

Word Substitution::apply(WordView w) const {
  std::size_t total = 0;
  for (Letter a : w) total += image(a).size();
  Word out;
  out.reserve(total);
  for (Letter a : w) {
    const Word& img = image(a);
    out.insert(out.end(), img.begin(), img.end());
  }
  return out;
}

Word apply_n(const Substitution& s, WordView w, int n, std::size_t cap) {
  if (n < 0) throw std::invalid_argument("apply_n requires n >= 0");
  BigInt total = image_length(s, w, n);
  if (total > cap) throw CapExceeded("phi^n image exceeds materialization cap", total);
  Word out;
  const std::size_t count = static_cast<std::size_t>(total);
  out.reserve(count);
  MorphismStream stream(s, Word(w.begin(), w.end()), n);
  for (std::size_t i = 0; i < count; ++i) out.push_back(stream.next());
  return out;
}

Word fixed_point_prefix(const Substitution& s, std::size_t n_letters) {
  Word out;
  if (n_letters == 0) return out;
  out.reserve(n_letters + s.max_image_length());
  const Word& seed = s.image(0);
  if (seed.empty() || seed[0] != 0)
    throw std::logic_error("fixed point requires phi(0) = 0... (internal)");
  out.insert(out.end(), seed.begin(), seed.end());
  std::size_t read = 1;
  while (out.size() < n_letters) {
    if (read >= out.size()) throw std::logic_error("fixed point generation stalled (internal)");
    const Word& img = s.image(out[read]);
    out.insert(out.end(), img.begin(), img.end());
    ++read;
  }
  out.resize(n_letters);
  return out;
}

BigInt image_length(const Substitution& s, WordView w, int n) {
  LengthTable table(s);
  return table.word_length(n, w);
}

ParikhVector parikh_n(const Substitution& s, WordView w, int n) {
  ParikhVector row = parikh(w, s.alphabet_size());
  for (int i = 0; i < n; ++i) row = s.incidence().apply_row(row);
  return row;
}

bool suffix_letter_check(const Substitution& s, const RenyiExpansion& e, Letter a, int n,
                         std::size_t cap) {
  if (e.simple()) throw std::invalid_argument("suffix_letter_check is for non-simple shapes");
  // At n = 0 the image is the bare letter; the zero-run claim starts at n = 1.
  std::int64_t zeros = (n == 0) ? 0 : t_oplus(a, n, e);
  Word expected(static_cast<std::size_t>(zeros), Letter{0});
  expected.push_back(oplus(a, n, e.m(), e.p()));
  Word image = apply_n(s, Word{a}, n, cap);
  return ends_with(image, expected);
}

LengthTable::LengthTable(const Substitution& s) : s_(&s) {
  rows_.emplace_back(static_cast<std::size_t>(s.alphabet_size()), BigInt{1});
}

const BigInt& LengthTable::length(int depth, Letter a) {
  while (static_cast<int>(rows_.size()) <= depth) {
    const std::vector<BigInt>& prev = rows_.back();
    std::vector<BigInt> row(prev.size());
    for (std::size_t letter = 0; letter < row.size(); ++letter) {
      BigInt total = 0;
      for (Letter b : s_->image(static_cast<Letter>(letter))) total += prev[b];
      row[letter] = std::move(total);
    }
    rows_.push_back(std::move(row));
  }
  return rows_[static_cast<std::size_t>(depth)][a];
}

BigInt LengthTable::word_length(int depth, WordView w) {
  BigInt total = 0;
  for (Letter a : w) total += length(depth, a);
  return total;
}

MorphismStream::MorphismStream(const Substitution& s, Word root, int depth)
    : s_(&s), root_(std::move(root)), depth_(depth), table_(s) {
  stack_.push_back(Frame{&root_, 0, depth_});
}

const BigInt& MorphismStream::total_length() {
  if (total_ < 0) total_ = table_.word_length(depth_, root_);
  return total_;
}

void MorphismStream::seek(const BigInt& position) {
  stack_.clear();
  stack_.push_back(Frame{&root_, 0, depth_});
  BigInt remaining = position;
  while (remaining > 0) {
    Frame& frame = stack_.back();
    bool descended = false;
    while (frame.idx < frame.word->size() && remaining > 0) {
      Letter a = (*frame.word)[frame.idx];
      const BigInt& sub = table_.length(frame.depth, a);
      if (remaining < sub) {
        // depth > 0 here: at depth 0 each letter has length 1 and a positive
        // remainder below it is impossible.
        ++frame.idx;
        stack_.push_back(Frame{&s_->image(a), 0, frame.depth - 1});
        descended = true;
        break;
      }
      remaining -= sub;
      ++frame.idx;
    }
    if (!descended && remaining > 0)
      throw std::out_of_range("seek past end of expansion");
  }
}

bool MorphismStream::exhausted() const {
  for (const Frame& f : stack_)
    if (f.idx < f.word->size()) return false;
  return true;
}

Letter MorphismStream::next() {
  while (!stack_.empty()) {
    Frame& frame = stack_.back();
    if (frame.idx >= frame.word->size()) {
      stack_.pop_back();
      continue;
    }
    Letter a = (*frame.word)[frame.idx];
    if (frame.depth == 0) {
      ++frame.idx;
      return a;
    }
    ++frame.idx;
    stack_.push_back(Frame{&s_->image(a), 0, frame.depth - 1});
  }
  throw std::out_of_range("stream exhausted");
}

}  // namespace betaword
