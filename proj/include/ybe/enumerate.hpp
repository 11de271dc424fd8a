#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "ybe/qset.hpp"

namespace ybe {

struct EnumerateOptions {
  bool up_to_iso = false;
  int shards = 1;          // depth-2 prefix sharding; output order is
                           // prefix order, independent of the shard count
  int hard_cap = 7;        // raise explicitly to go to 8
};

// Exhaustive backtracking over left-action rows L_x fixing x, pruned by the
// pair and triple laws of the left-action characterization; every emitted
// set passes the full classify.  Deterministic order (lexicographic by row
// image tuples).  When up_to_iso only canonical representatives are kept.
std::vector<QuadraticSet> enumerate_square_free(int n,
                                                const EnumerateOptions& opts = {});
// Streaming variant; return false from the callback to stop early.
void enumerate_square_free(int n, const EnumerateOptions& opts,
                           const std::function<bool(const QuadraticSet&)>& emit);

// Brute-force isomorphism search with forced-image propagation; returns a
// witness bijection when one exists.
std::optional<Permutation> is_isomorphic(const QuadraticSet& a,
                                         const QuadraticSet& b, int max_n = 10);

// Lexicographically least left table over all relabelings; idempotent and
// isomorphism-invariant.
QuadraticSet canonical_form(const QuadraticSet& q, int max_n = 10);

// Smallest n <= max_n admitting a square-free solution with mpl == target.
std::optional<int> min_order_scan(int target_mpl, int max_n,
                                  const EnumerateOptions& opts = {});

struct CensusRow {
  int n = 0;
  std::uint64_t count = 0;              // isomorphism classes
  std::map<int, std::uint64_t> by_mpl;  // level -> count
  std::map<std::uint64_t, std::uint64_t> by_group_order;
  std::uint64_t abelian_count = 0;
  std::uint64_t irretractable = 0;  // any nonzero entry is a loud event
};

std::vector<CensusRow> census(int max_n, const EnumerateOptions& opts = {});

}  // namespace ybe
