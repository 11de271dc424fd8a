#include "ybe/retract.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>

namespace ybe {

std::vector<int> RetractTower::map_to_level(int k) const {
  if (k < 0 || k > static_cast<int>(levels.size()))
    throw std::invalid_argument("map_to_level: no such level");
  if (levels.empty() || k == 0) {
    std::vector<int> id(k == 0 && !levels.empty() ? levels[0].class_of.size() : 0);
    std::iota(id.begin(), id.end(), 0);
    return id;
  }
  std::vector<int> m = levels[0].class_of;
  for (int i = 1; i < k; ++i)
    for (int& c : m) c = levels[i].class_of[c];
  return m;
}

RetractStep retract(const QuadraticSet& q) {
  PropertyFlags f = classify(q);
  if (!f.is_symmetric_set())
    throw std::invalid_argument("retract: input is not a symmetric set");

  const int n = q.n;
  RetractStep step;
  step.class_of.assign(n, -1);
  std::vector<int> reps;  // least member of each class, in increasing order
  for (int x = 0; x < n; ++x) {
    if (step.class_of[x] >= 0) continue;
    int cls = static_cast<int>(reps.size());
    step.class_of[x] = cls;
    reps.push_back(x);
    for (int y = x + 1; y < n; ++y) {
      if (step.class_of[y] >= 0) continue;
      bool same = true;
      for (int z = 0; z < n; ++z)
        if (q.lact(x, z) != q.lact(y, z)) {
          same = false;
          break;
        }
      if (same) step.class_of[y] = cls;
    }
  }

  const int m = static_cast<int>(reps.size());
  QuadraticSet& quo = step.quotient;
  quo.n = m;
  quo.left.resize(std::size_t(m) * m);
  quo.right.resize(std::size_t(m) * m);
  quo.lri_derived = q.lri_derived;
  auto labels = q.label_vec();
  quo.labels.reserve(m);
  for (int r : reps) quo.labels.push_back(labels[r]);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      quo.left[std::size_t(a) * m + b] = step.class_of[q.lact(reps[a], reps[b])];
      quo.right[std::size_t(a) * m + b] = step.class_of[q.ract(reps[a], reps[b])];
    }
  // Induced action must not depend on representatives.
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int ca = step.class_of[a], cb = step.class_of[b];
      if (step.class_of[q.lact(a, b)] != quo.left[std::size_t(ca) * m + cb] ||
          step.class_of[q.ract(a, b)] != quo.right[std::size_t(ca) * m + cb])
        throw std::logic_error("retract: induced action is representative-dependent");
    }
  return step;
}

RetractTower retract_tower(const QuadraticSet& q, int max_levels) {
  RetractTower tower;
  QuadraticSet cur = q;
  for (int k = 0;; ++k) {
    if (cur.n == 1) {
      tower.status = TowerStatus::terminated;
      tower.level = k;
      return tower;
    }
    if (k >= max_levels) {
      tower.status = TowerStatus::budget_exhausted;
      tower.level = k;
      return tower;
    }
    RetractStep step = retract(cur);
    if (step.quotient.n == cur.n) {
      tower.status = TowerStatus::stabilized;
      tower.level = k;
      return tower;
    }
    cur = step.quotient;
    tower.levels.push_back(std::move(step));
  }
}

std::optional<int> mpl(const QuadraticSet& q) {
  RetractTower tower = retract_tower(q, q.n + 1);
  if (tower.status == TowerStatus::terminated) return tower.level;
  return std::nullopt;
}

bool tower_identity_holds(const QuadraticSet& q, int m) {
  if (m < 1) throw std::invalid_argument("tower_identity_holds: m >= 1 required");
  const int n = q.n;
  if (n == 1) return true;
  // Enumerate (y_m, ..., y_1); compare the left rows of the two folds.
  std::vector<int> tuple(m, 0);
  for (;;) {
    int with = tuple[0];  // y_m at position 0
    for (int i = 1; i < m; ++i) with = q.lact(with, tuple[i]);
    int without;
    if (m == 1) {
      without = -1;  // empty fold acts as the identity
    } else {
      without = tuple[1];
      for (int i = 2; i < m; ++i) without = q.lact(without, tuple[i]);
    }
    for (int x = 0; x < n; ++x) {
      int lhs = q.lact(with, x);
      int rhs = without < 0 ? x : q.lact(without, x);
      if (lhs != rhs) return false;
    }
    int pos = m - 1;
    while (pos >= 0 && tuple[pos] == n - 1) tuple[pos--] = 0;
    if (pos < 0) return true;
    ++tuple[pos];
  }
}

std::optional<int> mpl_via_tower(const QuadraticSet& q) {
  if (q.n == 1) return 0;
  for (int m = 1; m <= q.n; ++m)
    if (tower_identity_holds(q, m)) return m;
  return std::nullopt;
}

namespace {

// G-orbit ids under the left action, without building a PermGroup.
std::vector<int> left_orbit_ids(const QuadraticSet& q) {
  std::vector<int> parent(q.n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (int a = 0; a < q.n; ++a)
    for (int y = 0; y < q.n; ++y) {
      int u = find(y), v = find(q.lact(a, y));
      if (u != v) parent[std::max(u, v)] = std::min(u, v);
    }
  std::vector<int> id(q.n);
  std::map<int, int> renumber;
  for (int x = 0; x < q.n; ++x) {
    int root = find(x);
    auto [it, fresh] = renumber.emplace(root, renumber.size());
    id[x] = it->second;
    (void)fresh;
  }
  return id;
}

bool rows_equal(const QuadraticSet& q, int x, int y) {
  for (int z = 0; z < q.n; ++z)
    if (q.lact(x, z) != q.lact(y, z)) return false;
  return true;
}

}  // namespace

bool check_mpl_le2(const QuadraticSet& q) {
  auto orbit = left_orbit_ids(q);
  for (int x = 0; x < q.n; ++x)
    for (int y = x + 1; y < q.n; ++y)
      if (orbit[x] == orbit[y] && !rows_equal(q, x, y)) return false;
  return true;
}

bool check_mpl_le3_condition(const QuadraticSet& q) {
  auto orbit = left_orbit_ids(q);
  for (int a = 0; a < q.n; ++a)
    for (int b = a + 1; b < q.n; ++b) {
      if (orbit[a] != orbit[b]) continue;
      for (int x = 0; x < q.n; ++x)
        if (!rows_equal(q, q.lact(a, x), q.lact(b, x))) return false;
    }
  return true;
}

RetractClassDecomposition retract_class_decomposition(const QuadraticSet& q) {
  auto level_opt = mpl(q);
  if (!level_opt)
    throw std::invalid_argument(
        "retract_class_decomposition: multipermutation level undefined");
  const int m = *level_opt;
  RetractClassDecomposition out;
  out.level = std::max(m - 1, 1);

  RetractTower tower = retract_tower(q, q.n + 1);
  std::vector<int> cls = tower.map_to_level(std::min<int>(out.level, tower.levels.size()));
  if (q.n == 1) cls.assign(1, 0);

  int nclasses = cls.empty() ? 0 : *std::max_element(cls.begin(), cls.end()) + 1;
  out.classes.resize(nclasses);
  for (int x = 0; x < q.n; ++x) out.classes[cls[x]].members.push_back(x);

  auto orbit = left_orbit_ids(q);
  for (auto& info : out.classes) {
    info.g_invariant = is_G_invariant(q, info.members);
    info.union_of_orbits = true;
    std::vector<char> in(q.n, 0);
    for (int v : info.members) in[v] = 1;
    for (int v : info.members)
      for (int x = 0; x < q.n; ++x)
        if (orbit[x] == orbit[v] && !in[x]) info.union_of_orbits = false;
    QuadraticSet sub = restrict(q, info.members);
    info.mpl_of_restriction = mpl(sub);
    if (m >= 2) {
      if (!info.g_invariant)
        throw std::logic_error("retract_class_decomposition: class not G-invariant");
      if (!info.mpl_of_restriction || *info.mpl_of_restriction > m - 1)
        throw std::logic_error(
            "retract_class_decomposition: restricted level exceeds mpl-1");
    }
  }
  return out;
}

}  // namespace ybe
