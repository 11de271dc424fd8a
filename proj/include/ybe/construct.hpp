#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ybe/perm.hpp"
#include "ybe/qset.hpp"

namespace ybe {

// Flip solution on n >= 1 elements.
QuadraticSet trivial_solution(int n);

// Disjoint union with the flip across the parts; part 1 occupies indices
// 0..n1-1.
QuadraticSet trivial_extension(const QuadraticSet& q1, const QuadraticSet& q2);

/// Cross actions of a strong twisted union: one permutation of part B per
/// element of part A and vice versa.  Missing entries in a constructor call
/// mean "acts trivially".
struct StuActions {
  std::vector<Permutation> a_on_b;  // size n1, each of degree n2
  std::vector<Permutation> b_on_a;  // size n2, each of degree n1
};

struct StuResult {
  QuadraticSet set;
  bool is_solution = false;  // assembled sets need not be braided
  PropertyFlags flags;
};

// Assembles r on the union of two symmetric sets from the four action
// blocks.  Throws if the actions are malformed or if they violate the stu
// laws / restricted-automorphism criterion; an assembled set that fails the
// braid check is NOT an error and is returned with is_solution = false.
StuResult stu_union(const QuadraticSet& q1, const QuadraticSet& q2,
                    const StuActions& actions);

struct StuCheck {
  bool ok = false;
  std::vector<int> witness;  // (i, j, x) of the first failing pair criterion
  explicit operator bool() const { return ok; }
};

// Pairwise restricted-automorphism criterion over G-invariant parts.
StuCheck is_stu_decomposition(const QuadraticSet& q,
                              const std::vector<std::vector<int>>& parts);

// One new element alpha with L_alpha = tau in Aut(Q); all old elements fix
// alpha.  When tau is outside the YB group and mpl is finite the level grows
// by exactly one (checked for |Q| >= 2).
QuadraticSet extend_by_automorphism(const QuadraticSet& q, const Permutation& tau);

// Z = X natural_0 X' natural {alpha}, L_alpha the copy swap; |Z| = 2n+1.
QuadraticSet canonical_doubling(const QuadraticSet& q);

// |Y| copies of X0 trivially extended, Y permuting the copies through its
// own left action.  Cell (alpha, x) sits at index alpha*|X0|+x, Y appended.
QuadraticSet wreath_product(const QuadraticSet& x0, const QuadraticSet& y,
                            int size_budget = 4096);

// The sigma_m / Y_m / X_m recursion: sigma_{m+1} = sigma_m v sigma_m[2^m].
Permutation gi_sigma(int m, int depth_budget = 12);
QuadraticSet gi_Y(int m, int depth_budget = 12);
QuadraticSet gi_X(int m, int depth_budget = 12);

// Recursive doubling family: X_1 trivial on 2 points, X_2 = X_1 with a
// swapping top, X_{m+1} = (X_m nat_0 X_m') nat {top} with the full swap.
QuadraticSet easy_family(int m, int depth_budget = 12);

// X = H u {a_1..a_r} with H = prod C_{d_i} regular and a_i translating by
// the i-th standard generator; mpl 2 and Gcal isomorphic to H.
QuadraticSet abelian_mpl2(const std::vector<std::uint64_t>& invariants);

struct LinearParams {
  std::uint64_t modulus = 2;  // N >= 2
  std::uint64_t unit = 1;     // omega, coprime to N
  unsigned rank = 1;          // k, module (Z/N)^k
};

// nullopt when valid; otherwise the obstruction (1-omega)^2 mod N.
std::optional<std::uint64_t> linear_obstruction(const LinearParams& p);

// L_a(x) = omega x + (1-omega) a componentwise on (Z/N)^k in mixed-radix
// order.  Throws when omega is not a unit or the obstruction is nonzero.
QuadraticSet linear_solution(const LinearParams& p);

// One-sided extension r(alpha, x) = (^alpha x, alpha): Y acts on X through
// the given automorphisms, X acts trivially on Y.
StuResult semidirect_extension(const QuadraticSet& q1, const QuadraticSet& q2,
                               const std::vector<Permutation>& action);

}  // namespace ybe
