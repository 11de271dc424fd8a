#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ybe/qset.hpp"

namespace ybe {

struct AnalyzeOptions {
  std::size_t max_group = 1000000;  // element-enumeration bound
};

/// Everything `analyze` reports about one solution.
struct SolutionReport {
  int n = 0;
  PropertyFlags flags;
  bool lri_derived = false;
  std::vector<std::vector<int>> orbits;

  std::optional<int> mpl;
  std::optional<int> irretractable_at;  // tower stabilization level

  std::string group_order;  // decimal
  bool group_abelian = false;
  std::optional<int> sol_gcal;
  std::optional<int> sol_g;  // sol(Gcal)+1 for square-free solutions
  std::optional<std::vector<std::uint64_t>> abelian_invs;  // when abelian and small

  struct ClassSummary {
    int size = 0;
    std::optional<int> mpl;
    bool g_invariant = false;
  };
  std::vector<ClassSummary> retract_classes;  // (mpl-1)-classes when mpl defined

  // mpl == 1 forces the trivial group and similar cross-checks.
  bool consistent() const;
};

SolutionReport analyze(const QuadraticSet& q, const AnalyzeOptions& opts = {});

std::string report_text(const SolutionReport& rep, const QuadraticSet& q);
std::string report_json(const SolutionReport& rep, const QuadraticSet& q);

}  // namespace ybe
