#pragma once

#include <optional>
#include <vector>

#include "ybe/qset.hpp"

namespace ybe {

/// One retraction step: the class map X -> [X] and the induced solution on
/// the classes.  Classes are indexed by their least original member, in
/// increasing order, so towers are canonical across runs.
struct RetractStep {
  std::vector<int> class_of;
  QuadraticSet quotient;
};

enum class TowerStatus {
  terminated,        // Ret^level has one element; level == mpl
  stabilized,        // no class merging at Ret^level, more than one element
  budget_exhausted,  // max_levels reached first
};

struct RetractTower {
  std::vector<RetractStep> levels;
  TowerStatus status = TowerStatus::budget_exhausted;
  int level = 0;
  // Composite class map X -> Ret^k, k <= levels.size().
  std::vector<int> map_to_level(int k) const;
};

// Quotient by the relation "identical left rows"; requires a symmetric set
// (nondegenerate, involutive, braided).  Throws logic_error if the induced
// action were representative-dependent, which the retract lemma rules out.
RetractStep retract(const QuadraticSet& q);

RetractTower retract_tower(const QuadraticSet& q, int max_levels);

// Multipermutation level; nullopt when the tower stabilizes above one
// element (irretractable at that level).
std::optional<int> mpl(const QuadraticSet& q);

// Left-nested action towers: dropping the top actor from every m-fold tower
// never changes the result.  Holds exactly when mpl <= m.
bool tower_identity_holds(const QuadraticSet& q, int m);

// Independent route to the level: minimal m <= n with the tower identity.
std::optional<int> mpl_via_tower(const QuadraticSet& q);

// L constant on every G-orbit; equivalent to mpl <= 2.
bool check_mpl_le2(const QuadraticSet& q);

// L_(^beta x) == L_(^alpha x) whenever alpha, beta share a G-orbit;
// equivalent to mpl <= 3.  Implemented as the stated condition only.
bool check_mpl_le3_condition(const QuadraticSet& q);

struct RetractClassInfo {
  std::vector<int> members;
  bool g_invariant = false;
  std::optional<int> mpl_of_restriction;
  bool union_of_orbits = false;
};

struct RetractClassDecomposition {
  int level = 0;  // classes are the fibres of X -> Ret^level
  std::vector<RetractClassInfo> classes;
};

// Partition of X by the (mpl-1)-retract classes (level 1 when mpl <= 1).
// Requires finite mpl >= 1; for mpl >= 2 every class must be G-invariant
// with restricted level <= mpl-1, and a violation throws logic_error.
RetractClassDecomposition retract_class_decomposition(const QuadraticSet& q);

}  // namespace ybe
