#pragma once

#include <string>
#include <vector>

namespace ybe {

/// Permutation of {0..n-1} stored as an image table.
///
/// All operations are pure; values are immutable after construction and
/// safe to share between threads.  Composition uses the "apply right
/// factor first" convention: compose(p, q)(i) = p(q(i)).
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(int degree);  // identity
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int degree) { return Permutation(degree); }
  // Cycles are given 0-based; points not mentioned are fixed.
  static Permutation from_cycles(int degree,
                                 const std::vector<std::vector<int>>& cycles);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[i]; }
  const std::vector<int>& images() const { return images_; }

  bool is_identity() const;
  Permutation inverse() const;
  unsigned long long order() const;  // lcm of cycle lengths

  // Disjoint cycle decomposition: each cycle starts at its minimal
  // element, cycles sorted by minimal element, fixed points omitted.
  std::vector<std::vector<int>> cycles() const;

  friend bool operator==(const Permutation& a, const Permutation& b) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) = default;

 private:
  std::vector<int> images_;
};

// compose(p, q)(i) = p(q(i)); degrees must match.
Permutation compose(const Permutation& p, const Permutation& q);

// Conjugate of p by the translation i -> i + offset on its support; points
// outside the shifted support are fixed.  Every non-fixed point i of p must
// satisfy i + offset < new_degree.
Permutation shift(const Permutation& p, int offset, int new_degree);

// Interleave of two disjoint single cycles of equal length k, both written
// from their minimal element: (r0 s0 r1 s1 ... ).  The square of the result
// is compose(rho, sigma).
Permutation vee(const Permutation& rho, const Permutation& sigma);

// Cycle-notation text I/O.  Points are 1-based labels "x1".."xn" or bare
// 1-based integers; whitespace-insensitive; "" parses as the identity.
// Printing is canonical (see cycles()) so text comparison is deterministic.
Permutation parse_cycles(const std::string& text, int degree);
Permutation parse_cycles(const std::string& text,
                         const std::vector<std::string>& labels);
std::string format_cycles(const Permutation& p);
std::string format_cycles(const Permutation& p,
                          const std::vector<std::string>& labels);

}  // namespace ybe
