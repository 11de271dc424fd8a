#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ybe/perm.hpp"

namespace ybe {

/// A finite quadratic set (X, r): X = {0..n-1} together with the pair map
/// r(x, y) = (left[x][y], right[x][y]) = (x acting on y, x acted on by y).
///
/// Only totality is an invariant; nondegeneracy, involutivity and the braid
/// relation are checked properties (see classify).  Immutable by convention
/// after construction.
struct QuadraticSet {
  int n = 0;
  std::vector<int> left;               // n*n row-major: left[x*n+y]
  std::vector<int> right;              // n*n row-major: right[x*n+y]
  std::vector<std::string> labels;     // empty means default x1..xn
  bool lri_derived = false;            // right was derived as row inverse of left

  int lact(int x, int y) const { return left[x * n + y]; }   // ^x y
  int ract(int x, int y) const { return right[x * n + y]; }  // x ^ y

  std::vector<std::string> label_vec() const;  // labels or default x1..xn
  friend bool operator==(const QuadraticSet& a, const QuadraticSet& b) {
    return a.n == b.n && a.left == b.left && a.right == b.right;
  }
};

/// Verification verdicts for a quadratic set, each established by exhaustive
/// scan.  For every failed flag the lexicographically least witness tuple is
/// recorded under the flag's name.
struct PropertyFlags {
  bool nondegenerate = false;
  bool involutive = false;
  bool braided = false;
  bool l1 = false;
  bool r1 = false;
  bool lr3 = false;
  bool square_free = false;
  bool lri = false;
  bool cl1 = false, cl2 = false, cr1 = false, cr2 = false;
  std::map<std::string, std::vector<int>> first_witness;

  bool is_solution() const { return nondegenerate && braided; }
  bool is_symmetric_set() const { return nondegenerate && braided && involutive; }
  bool is_square_free_solution() const {
    return nondegenerate && involutive && braided && square_free;
  }
  // Remark-level consistency: for nondegenerate sets the direct braid scan
  // must agree with l1 & r1 & lr3.
  bool consistent() const {
    return !nondegenerate || braided == (l1 && r1 && lr3);
  }
};

// Build (X, r) from the left action alone: left[x][y] = rows[x](y) and
// right[x][y] = rows[y]^{-1}(x), i.e. the lri pairing.
QuadraticSet from_left_action(const std::vector<Permutation>& rows);

PropertyFlags classify(const QuadraticSet& q);

// nondegenerate + involutive + square-free + braided.
bool is_square_free_solution(const QuadraticSet& q);

// The three conditions of the left-action characterization of square-free
// solutions, and the two-condition cyclic-set variant; both must agree with
// the direct checks for any left-action-derived set.
bool alternative_def_holds(const QuadraticSet& q);
bool cyclic_set_def_holds(const QuadraticSet& q);

Permutation left_perm(const QuadraticSet& q, int x);   // y -> ^x y
Permutation right_perm(const QuadraticSet& q, int x);  // y -> y ^ x

bool is_r_invariant(const QuadraticSet& q, const std::vector<int>& subset);
bool is_G_invariant(const QuadraticSet& q, const std::vector<int>& subset);

// For symmetric sets with lri: subset is G-invariant iff its complement is
// iff both are r-invariant.
bool invariant_subset_lemma_holds(const QuadraticSet& q,
                                  const std::vector<int>& subset);

// Relabels the subset by increasing original index; requires r-invariance.
QuadraticSet restrict(const QuadraticSet& q, const std::vector<int>& subset);

/// Split maps of an extension Z = X_part ∪ Y_part: f moves the Y-over-X
/// action, g the X-over-Y action; both are encoded as pair maps in the same
/// table layout as QuadraticSet.
struct SplitReport {
  QuadraticSet f;  // X-split map
  QuadraticSet g;  // Y-split map
  bool f_involutive = false;
  bool g_involutive = false;
  bool composition_equals_r = false;  // r == f ∘ tau ∘ g
  bool f_is_solution = false;         // (Z, f) square-free solution
  bool g_is_solution = false;
  bool f_stu_condition = false;  // ^(alpha^y) x == ^alpha x  (x,y in X, alpha in Y)
  bool g_stu_condition = false;  // ^(x^beta) alpha == ^x alpha
  bool f_iff_holds() const { return f_is_solution == f_stu_condition; }
  bool g_iff_holds() const { return g_is_solution == g_stu_condition; }
};

std::pair<QuadraticSet, QuadraticSet> split_maps(const QuadraticSet& q,
                                                 const std::vector<int>& x_part,
                                                 const std::vector<int>& y_part);
SplitReport check_split_identity(const QuadraticSet& q,
                                 const std::vector<int>& x_part,
                                 const std::vector<int>& y_part);

}  // namespace ybe
