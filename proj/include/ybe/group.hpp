#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ybe/bigint.hpp"
#include "ybe/perm.hpp"
#include "ybe/qset.hpp"

namespace ybe {

/// Finite permutation group given by generators, with a base and strong
/// generating set built eagerly (deterministic Schreier-Sims).  Frozen after
/// construction; all queries are const.
class PermGroup {
 public:
  PermGroup(int degree, std::vector<Permutation> generators);
  static PermGroup trivial(int degree) { return PermGroup(degree, {}); }

  int degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return gens_; }
  const BigUint& order() const { return order_; }
  bool is_trivial() const { return order_ == BigUint(1); }
  bool contains(const Permutation& p) const;
  bool is_abelian() const;

  // Explicit element list via closure; throws std::length_error beyond cap.
  std::vector<Permutation> elements(std::size_t cap = 1000000) const;

 private:
  struct Level {
    int base_point = -1;
    std::vector<int> orbit;            // in discovery order
    std::vector<Permutation> transversal;  // degree-sized sparse: by point
    std::vector<char> in_orbit;
    std::vector<Permutation> gens;     // strong generators fixing earlier base points
    // Schreier pairs (orbit index, gen index) below these marks are done;
    // close_level only ever has to walk the new L-shaped region.
    std::size_t done_orbit = 0, done_gens = 0;
  };
  int degree_ = 0;
  std::vector<Permutation> gens_;
  std::vector<Level> levels_;
  BigUint order_ = BigUint(1);

  void build();
  void extend_level_orbit(std::size_t idx);
  // Returns the part of p that survives sifting (identity iff member).
  Permutation sift(const Permutation& p, std::size_t from_level,
                   std::size_t* stop_level) const;
  // Sift from `from`; a surviving remainder joins every level it is valid
  // for, and the touched levels are re-closed bottom-up.
  void add_strong_generator(std::size_t from, const Permutation& h);
  void close_level(std::size_t level);
};

struct OrbitPartition {
  std::vector<int> orbit_of;             // element -> orbit id
  std::vector<std::vector<int>> orbits;  // ordered by least member
};

OrbitPartition orbits(const PermGroup& g);
OrbitPartition orbits_of_generators(int degree, const std::vector<Permutation>& gens);

PermGroup derived_subgroup(const PermGroup& g);
// G > G' > G'' > ... until trivial or stabilization; the input group is the
// first entry.
std::vector<PermGroup> derived_series(const PermGroup& g);
// Length of the derived series down to the trivial group; nullopt when the
// series stabilizes above it.  The trivial group has length 0.
std::optional<int> solvable_length(const PermGroup& g);

// Group generated by the left translations of a nondegenerate quadratic set.
PermGroup yb_group(const QuadraticSet& q);

// sol G = sol Gcal + 1 for square-free solutions of finite order; throws if
// Gcal is not solvable or q is not a square-free solution.
int yb_group_solvable_length_G(const QuadraticSet& q);

// All sigma with sigma L_x sigma^-1 = L_{sigma(x)}, found by backtracking
// with forced-image propagation.  max_n guards runaway inputs.
PermGroup automorphism_group(const QuadraticSet& q, int max_n = 10);

struct RetractHomReport {
  bool homomorphism = false;  // L_x -> L_[x] extends to the whole group
  bool surjective = false;
  std::uint64_t group_order = 0;   // |Gcal|
  std::uint64_t image_order = 0;   // |Gcal(Ret)|
  std::uint64_t kernel_order = 0;
  bool kernel_abelian = false;
};

// The canonical epimorphism Gcal -> Gcal(Ret), verified by full element
// enumeration (bounded).
RetractHomReport retract_hom(const QuadraticSet& q, std::size_t cap = 1000000);

// Ordered product-set check: Gcal == Gcal(Y_1) Gcal(Y_2) ... Gcal(Y_s).
bool check_group_product(const QuadraticSet& q,
                         const std::vector<std::vector<int>>& parts,
                         std::size_t cap = 1000000);

// Invariant factors d_1 | d_2 | ... of an abelian group, from the element
// table (p-torsion counting).  Empty for the trivial group.
std::vector<std::uint64_t> abelian_invariants(const PermGroup& g,
                                              std::size_t cap = 1000000);

}  // namespace ybe
