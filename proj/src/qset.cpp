#include "ybe/qset.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace ybe {

std::vector<std::string> QuadraticSet::label_vec() const {
  if (!labels.empty()) return labels;
  std::vector<std::string> out(n);
  for (int i = 0; i < n; ++i) out[i] = "x" + std::to_string(i + 1);
  return out;
}

QuadraticSet from_left_action(const std::vector<Permutation>& rows) {
  const int n = static_cast<int>(rows.size());
  for (const auto& p : rows)
    if (p.degree() != n)
      throw std::invalid_argument("from_left_action: ragged row list");
  QuadraticSet q;
  q.n = n;
  q.left.resize(std::size_t(n) * n);
  q.right.resize(std::size_t(n) * n);
  q.lri_derived = true;
  std::vector<Permutation> inv(n);
  for (int x = 0; x < n; ++x) inv[x] = rows[x].inverse();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      q.left[std::size_t(x) * n + y] = rows[x](y);
      q.right[std::size_t(x) * n + y] = inv[y](x);
    }
  return q;
}

namespace {

bool row_bijective(const QuadraticSet& q, int x) {
  std::vector<char> seen(q.n, 0);
  for (int y = 0; y < q.n; ++y) {
    int v = q.lact(x, y);
    if (seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

bool rcol_bijective(const QuadraticSet& q, int x) {
  std::vector<char> seen(q.n, 0);
  for (int y = 0; y < q.n; ++y) {
    int v = q.ract(y, x);  // R_x(y) = y^x
    if (seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

}  // namespace

PropertyFlags classify(const QuadraticSet& q) {
  PropertyFlags f;
  const int n = q.n;
  auto fail = [&](bool& flag, const char* name, std::initializer_list<int> w) {
    flag = false;
    f.first_witness.emplace(name, std::vector<int>(w));
  };

  f.nondegenerate = true;
  for (int x = 0; x < n && f.nondegenerate; ++x)
    if (!row_bijective(q, x) || !rcol_bijective(q, x))
      fail(f.nondegenerate, "nondegenerate", {x});

  f.involutive = true;
  for (int x = 0; x < n && f.involutive; ++x)
    for (int y = 0; y < n; ++y) {
      int u = q.lact(x, y), v = q.ract(x, y);
      if (q.lact(u, v) != x || q.ract(u, v) != y) {
        fail(f.involutive, "involutive", {x, y});
        break;
      }
    }

  f.square_free = true;
  for (int x = 0; x < n && f.square_free; ++x)
    if (q.lact(x, x) != x || q.ract(x, x) != x)
      fail(f.square_free, "square_free", {x});

  f.lri = true;
  for (int x = 0; x < n && f.lri; ++x)
    for (int y = 0; y < n; ++y)
      if (q.ract(q.lact(x, y), x) != y || q.lact(x, q.ract(y, x)) != y) {
        fail(f.lri, "lri", {x, y});
        break;
      }

  struct PairLaw {
    bool PropertyFlags::*flag;
    const char* name;
    bool (*check)(const QuadraticSet&, int, int);
  };
  const PairLaw pair_laws[] = {
      {&PropertyFlags::cl1, "cl1",
       [](const QuadraticSet& s, int x, int y) {
         return s.lact(s.ract(y, x), x) == s.lact(y, x);
       }},
      {&PropertyFlags::cl2, "cl2",
       [](const QuadraticSet& s, int x, int y) {
         return s.lact(s.lact(x, y), x) == s.lact(y, x);
       }},
      {&PropertyFlags::cr1, "cr1",
       [](const QuadraticSet& s, int x, int y) {
         return s.ract(x, s.lact(x, y)) == s.ract(x, y);
       }},
      {&PropertyFlags::cr2, "cr2",
       [](const QuadraticSet& s, int x, int y) {
         return s.ract(x, s.ract(y, x)) == s.ract(x, y);
       }},
  };
  for (const auto& law : pair_laws) {
    f.*(law.flag) = true;
    for (int x = 0; x < n && f.*(law.flag); ++x)
      for (int y = 0; y < n; ++y)
        if (!law.check(q, x, y)) {
          fail(f.*(law.flag), law.name, {x, y});
          break;
        }
  }

  // Triple scans.  Witnesses are the lexicographically least failing
  // (x, y, z); the scans are independent so each flag gets its own.
  f.l1 = f.r1 = f.lr3 = f.braided = true;
  for (int x = 0; x < n && f.l1; ++x)
    for (int y = 0; y < n && f.l1; ++y)
      for (int z = 0; z < n; ++z)
        if (q.lact(x, q.lact(y, z)) !=
            q.lact(q.lact(x, y), q.lact(q.ract(x, y), z))) {
          fail(f.l1, "l1", {x, y, z});
          break;
        }
  for (int x = 0; x < n && f.r1; ++x)
    for (int y = 0; y < n && f.r1; ++y)
      for (int z = 0; z < n; ++z)
        if (q.ract(q.ract(x, y), z) !=
            q.ract(q.ract(x, q.lact(y, z)), q.ract(y, z))) {
          fail(f.r1, "r1", {x, y, z});
          break;
        }
  for (int x = 0; x < n && f.lr3; ++x)
    for (int y = 0; y < n && f.lr3; ++y)
      for (int z = 0; z < n; ++z)
        if (q.ract(q.lact(x, y), q.lact(q.ract(x, y), z)) !=
            q.lact(q.ract(x, q.lact(y, z)), q.ract(y, z))) {
          fail(f.lr3, "lr3", {x, y, z});
          break;
        }
  for (int x = 0; x < n && f.braided; ++x)
    for (int y = 0; y < n && f.braided; ++y)
      for (int z = 0; z < n; ++z) {
        // r12 r23 r12 versus r23 r12 r23 on (x, y, z)
        int a = q.lact(x, y), b = q.ract(x, y), c = z;
        int t = q.lact(b, c), u = q.ract(b, c);
        int p1 = q.lact(a, t), p2 = q.ract(a, t), p3 = u;
        int d = q.lact(y, z), e = q.ract(y, z);
        int s1 = q.lact(x, d), s2 = q.ract(x, d);
        int q1 = s1, q2 = q.lact(s2, e), q3 = q.ract(s2, e);
        if (p1 != q1 || p2 != q2 || p3 != q3) {
          fail(f.braided, "braided", {x, y, z});
          break;
        }
      }

  return f;
}

bool alternative_def_holds(const QuadraticSet& q) {
  const int n = q.n;
  std::vector<Permutation> inv(n);
  for (int x = 0; x < n; ++x) {
    if (!row_bijective(q, x)) return false;
    inv[x] = left_perm(q, x).inverse();
  }
  for (int x = 0; x < n; ++x)
    if (q.lact(x, x) != x) return false;  // (i)
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (q.lact(inv[x](y), x) != q.lact(y, x)) return false;  // (ii)
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (q.lact(x, q.lact(y, z)) !=
            q.lact(q.lact(x, y), q.lact(inv[y](x), z)))
          return false;  // (iii), with x^y taken as L_y^{-1}(x)
  return true;
}

bool cyclic_set_def_holds(const QuadraticSet& q) {
  const int n = q.n;
  for (int x = 0; x < n; ++x) {
    if (!row_bijective(q, x)) return false;
    if (q.lact(x, x) != x) return false;
  }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (q.lact(q.lact(y, x), q.lact(y, z)) !=
            q.lact(q.lact(x, y), q.lact(x, z)))
          return false;
  return true;
}

bool is_square_free_solution(const QuadraticSet& q) {
  PropertyFlags f = classify(q);
  bool result = f.is_square_free_solution();
#ifndef NDEBUG
  // The left-action characterizations must agree with the direct checks
  // whenever the right table is the row inverse of the left table.
  if (q.n > 0) {
    bool lri_paired = true;
    for (int x = 0; x < q.n && lri_paired; ++x) {
      if (!row_bijective(q, x)) { lri_paired = false; break; }
      for (int y = 0; y < q.n; ++y)
        if (q.lact(x, q.ract(y, x)) != y) { lri_paired = false; break; }
    }
    if (lri_paired) {
      assert(alternative_def_holds(q) == result);
      assert(cyclic_set_def_holds(q) == result);
    }
  }
#endif
  return result;
}

Permutation left_perm(const QuadraticSet& q, int x) {
  if (x < 0 || x >= q.n) throw std::invalid_argument("left_perm: index out of range");
  std::vector<int> img(q.n);
  for (int y = 0; y < q.n; ++y) img[y] = q.lact(x, y);
  return Permutation(std::move(img));
}

Permutation right_perm(const QuadraticSet& q, int x) {
  if (x < 0 || x >= q.n) throw std::invalid_argument("right_perm: index out of range");
  std::vector<int> img(q.n);
  for (int y = 0; y < q.n; ++y) img[y] = q.ract(y, x);
  return Permutation(std::move(img));
}

namespace {

std::vector<char> member_mask(int n, const std::vector<int>& subset) {
  std::vector<char> in(n, 0);
  for (int v : subset) {
    if (v < 0 || v >= n) throw std::invalid_argument("subset: element out of range");
    in[v] = 1;
  }
  return in;
}

}  // namespace

bool is_r_invariant(const QuadraticSet& q, const std::vector<int>& subset) {
  auto in = member_mask(q.n, subset);
  for (int x : subset)
    for (int y : subset)
      if (!in[q.lact(x, y)] || !in[q.ract(x, y)]) return false;
  return true;
}

bool is_G_invariant(const QuadraticSet& q, const std::vector<int>& subset) {
  auto in = member_mask(q.n, subset);
  for (int a = 0; a < q.n; ++a)
    for (int y : subset)
      if (!in[q.lact(a, y)]) return false;
  return true;
}

bool invariant_subset_lemma_holds(const QuadraticSet& q,
                                  const std::vector<int>& subset) {
  auto in = member_mask(q.n, subset);
  std::vector<int> complement;
  for (int i = 0; i < q.n; ++i)
    if (!in[i]) complement.push_back(i);
  bool a = is_G_invariant(q, subset);
  bool b = is_G_invariant(q, complement);
  bool c = is_r_invariant(q, subset) && is_r_invariant(q, complement);
  return a == b && b == c;
}

QuadraticSet restrict(const QuadraticSet& q, const std::vector<int>& subset) {
  if (subset.empty()) throw std::invalid_argument("restrict: empty subset");
  if (!is_r_invariant(q, subset))
    throw std::invalid_argument("restrict: subset is not r-invariant");
  std::vector<int> sorted = subset;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<int> new_index(q.n, -1);
  for (std::size_t i = 0; i < sorted.size(); ++i) new_index[sorted[i]] = int(i);
  QuadraticSet out;
  out.n = static_cast<int>(sorted.size());
  out.left.resize(std::size_t(out.n) * out.n);
  out.right.resize(std::size_t(out.n) * out.n);
  out.lri_derived = q.lri_derived;
  auto src_labels = q.label_vec();
  out.labels.reserve(sorted.size());
  for (int v : sorted) out.labels.push_back(src_labels[v]);
  for (int i = 0; i < out.n; ++i)
    for (int j = 0; j < out.n; ++j) {
      out.left[std::size_t(i) * out.n + j] = new_index[q.lact(sorted[i], sorted[j])];
      out.right[std::size_t(i) * out.n + j] = new_index[q.ract(sorted[i], sorted[j])];
    }
  return out;
}

std::pair<QuadraticSet, QuadraticSet> split_maps(const QuadraticSet& q,
                                                 const std::vector<int>& x_part,
                                                 const std::vector<int>& y_part) {
  const int n = q.n;
  std::vector<int> side(n, -1);
  for (int v : x_part) side.at(v) = 0;
  for (int v : y_part) {
    if (side.at(v) == 0)
      throw std::invalid_argument("split_maps: parts are not disjoint");
    side[v] = 1;
  }
  for (int v = 0; v < n; ++v)
    if (side[v] < 0) throw std::invalid_argument("split_maps: parts do not cover X");
  if (!is_r_invariant(q, x_part) || !is_r_invariant(q, y_part))
    throw std::invalid_argument("split_maps: parts are not r-invariant");

  QuadraticSet f, g;
  f.n = g.n = n;
  f.left.assign(std::size_t(n) * n, 0);
  f.right.assign(std::size_t(n) * n, 0);
  g.left = f.left;
  g.right = f.right;
  f.labels = g.labels = q.label_vec();
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) {
      std::size_t at = std::size_t(u) * n + v;
      if (side[u] == side[v]) {
        // f keeps r on both diagonal blocks, g flips there
        f.left[at] = q.lact(u, v);
        f.right[at] = q.ract(u, v);
        g.left[at] = v;
        g.right[at] = u;
      } else if (side[u] == 1) {  // u = alpha in Y, v = x in X
        f.left[at] = q.lact(u, v);  // f(alpha, x) = (^alpha x, alpha)
        f.right[at] = u;
        g.left[at] = v;  // g(alpha, x) = (x, alpha^x)
        g.right[at] = q.ract(u, v);
      } else {  // u = x in X, v = alpha in Y
        f.left[at] = v;  // f(x, alpha) = (alpha, x^alpha)
        f.right[at] = q.ract(u, v);
        g.left[at] = q.lact(u, v);  // g(x, alpha) = (^x alpha, x)
        g.right[at] = u;
      }
    }
  return {std::move(f), std::move(g)};
}

namespace {

bool pair_map_involutive(const QuadraticSet& m) {
  for (int x = 0; x < m.n; ++x)
    for (int y = 0; y < m.n; ++y) {
      int u = m.lact(x, y), v = m.ract(x, y);
      if (m.lact(u, v) != x || m.ract(u, v) != y) return false;
    }
  return true;
}

}  // namespace

SplitReport check_split_identity(const QuadraticSet& q,
                                 const std::vector<int>& x_part,
                                 const std::vector<int>& y_part) {
  SplitReport rep;
  std::tie(rep.f, rep.g) = split_maps(q, x_part, y_part);
  rep.f_involutive = pair_map_involutive(rep.f);
  rep.g_involutive = pair_map_involutive(rep.g);

  rep.composition_equals_r = true;
  for (int u = 0; u < q.n && rep.composition_equals_r; ++u)
    for (int v = 0; v < q.n; ++v) {
      int a = rep.g.lact(u, v), b = rep.g.ract(u, v);
      std::swap(a, b);  // the flip between g and f
      int fa = rep.f.lact(a, b), fb = rep.f.ract(a, b);
      if (fa != q.lact(u, v) || fb != q.ract(u, v)) {
        rep.composition_equals_r = false;
        break;
      }
    }

  rep.f_is_solution = classify(rep.f).is_square_free_solution();
  rep.g_is_solution = classify(rep.g).is_square_free_solution();

  rep.f_stu_condition = true;
  for (int x : x_part)
    for (int y : x_part)
      for (int a : y_part)
        if (q.lact(q.ract(a, y), x) != q.lact(a, x)) rep.f_stu_condition = false;
  rep.g_stu_condition = true;
  for (int x : x_part)
    for (int a : y_part)
      for (int b : y_part)
        if (q.lact(q.ract(x, b), a) != q.lact(x, a)) rep.g_stu_condition = false;
  return rep;
}

}  // namespace ybe
