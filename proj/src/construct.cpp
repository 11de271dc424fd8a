#include "ybe/construct.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "ybe/group.hpp"
#include "ybe/retract.hpp"

namespace ybe {

namespace {

// Full verification is cubic; above this size constructors fall back to a
// fixed sample of triples.
constexpr int kFullCheckLimit = 512;

bool solution_check(const QuadraticSet& q) {
  if (q.n <= kFullCheckLimit) return is_square_free_solution(q);
  PropertyFlags f;  // sampled braid check on a deterministic grid
  const int step = q.n / 97 + 1;
  for (int x = 0; x < q.n; ++x) {
    if (q.lact(x, x) != x || q.ract(x, x) != x) return false;
    for (int y = 0; y < q.n; y += step)
      for (int z = 0; z < q.n; z += step)
        if (q.lact(x, q.lact(y, z)) !=
            q.lact(q.lact(x, y), q.lact(q.ract(x, y), z)))
          return false;
  }
  (void)f;
  return true;
}

void require_solution(const QuadraticSet& q, const char* who) {
  if (!solution_check(q))
    throw std::logic_error(std::string(who) + ": output failed the solution check");
}

Permutation extend_degree(const Permutation& p, int degree) {
  std::vector<int> img(degree);
  std::iota(img.begin(), img.end(), 0);
  for (int i = 0; i < p.degree(); ++i) img[i] = p(i);
  return Permutation(std::move(img));
}

bool is_automorphism_of(const QuadraticSet& q, const Permutation& sigma) {
  if (sigma.degree() != q.n) return false;
  for (int x = 0; x < q.n; ++x)
    for (int y = 0; y < q.n; ++y)
      if (sigma(q.lact(x, y)) != q.lact(sigma(x), sigma(y))) return false;
  return true;
}

}  // namespace

QuadraticSet trivial_solution(int n) {
  if (n < 1) throw std::invalid_argument("trivial_solution: n >= 1 required");
  return from_left_action(std::vector<Permutation>(n, Permutation(n)));
}

QuadraticSet trivial_extension(const QuadraticSet& q1, const QuadraticSet& q2) {
  const int n1 = q1.n, n2 = q2.n, n = n1 + n2;
  QuadraticSet out;
  out.n = n;
  out.left.resize(std::size_t(n) * n);
  out.right.resize(std::size_t(n) * n);
  out.lri_derived = q1.lri_derived && q2.lri_derived;
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) {
      int &l = out.left[std::size_t(u) * n + v], &r = out.right[std::size_t(u) * n + v];
      if (u < n1 && v < n1) {
        l = q1.lact(u, v);
        r = q1.ract(u, v);
      } else if (u >= n1 && v >= n1) {
        l = q2.lact(u - n1, v - n1) + n1;
        r = q2.ract(u - n1, v - n1) + n1;
      } else {
        l = v;
        r = u;
      }
    }
  return out;
}

StuResult stu_union(const QuadraticSet& q1, const QuadraticSet& q2,
                    const StuActions& actions) {
  const int n1 = q1.n, n2 = q2.n;
  if (!classify(q1).is_symmetric_set() || !classify(q2).is_symmetric_set())
    throw std::invalid_argument("stu_union: parts must be symmetric sets");

  std::vector<Permutation> a_on_b = actions.a_on_b;
  std::vector<Permutation> b_on_a = actions.b_on_a;
  if (a_on_b.empty()) a_on_b.assign(n1, Permutation(n2));
  if (b_on_a.empty()) b_on_a.assign(n2, Permutation(n1));
  if (static_cast<int>(a_on_b.size()) != n1 ||
      static_cast<int>(b_on_a.size()) != n2)
    throw std::invalid_argument("stu_union: malformed actions (wrong count)");
  for (const auto& p : a_on_b)
    if (p.degree() != n2)
      throw std::invalid_argument("stu_union: malformed actions (degree)");
  for (const auto& p : b_on_a)
    if (p.degree() != n1)
      throw std::invalid_argument("stu_union: malformed actions (degree)");

  // stu law: deforming the actor inside its own part must not change its
  // action on the other part (both the plain and the inverse deformations).
  for (int y = 0; y < n1; ++y)
    for (int a = 0; a < n2; ++a) {
      if (b_on_a[a_on_b[y](a)] != b_on_a[a] ||
          b_on_a[a_on_b[y].inverse()(a)] != b_on_a[a])
        throw std::invalid_argument("stu_union: stu law violated (B actor)");
    }
  for (int b = 0; b < n2; ++b)
    for (int x = 0; x < n1; ++x) {
      if (a_on_b[b_on_a[b](x)] != a_on_b[x] ||
          a_on_b[b_on_a[b].inverse()(x)] != a_on_b[x])
        throw std::invalid_argument("stu_union: stu law violated (A actor)");
    }
  // restricted-automorphism criterion
  for (int x = 0; x < n1; ++x)
    if (!is_automorphism_of(q2, a_on_b[x]))
      throw std::invalid_argument(
          "stu_union: action image is not an automorphism of the other part");
  for (int a = 0; a < n2; ++a)
    if (!is_automorphism_of(q1, b_on_a[a]))
      throw std::invalid_argument(
          "stu_union: action image is not an automorphism of the other part");

  const int n = n1 + n2;
  std::vector<Permutation> a_on_b_inv, b_on_a_inv;
  for (const auto& p : a_on_b) a_on_b_inv.push_back(p.inverse());
  for (const auto& p : b_on_a) b_on_a_inv.push_back(p.inverse());
  StuResult res;
  res.set.n = n;
  res.set.left.resize(std::size_t(n) * n);
  res.set.right.resize(std::size_t(n) * n);
  res.set.lri_derived = q1.lri_derived && q2.lri_derived;
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) {
      int &l = res.set.left[std::size_t(u) * n + v];
      int &r = res.set.right[std::size_t(u) * n + v];
      if (u < n1 && v < n1) {
        l = q1.lact(u, v);
        r = q1.ract(u, v);
      } else if (u >= n1 && v >= n1) {
        l = q2.lact(u - n1, v - n1) + n1;
        r = q2.ract(u - n1, v - n1) + n1;
      } else if (u < n1) {  // x acting on alpha; alpha deformed by x from the right
        l = a_on_b[u](v - n1) + n1;
        r = b_on_a_inv[v - n1](u);
      } else {  // alpha acting on x
        l = b_on_a[u - n1](v);
        r = a_on_b_inv[v](u - n1) + n1;
      }
    }
  res.flags = classify(res.set);
  res.is_solution = res.flags.is_symmetric_set();
  return res;
}

StuCheck is_stu_decomposition(const QuadraticSet& q,
                              const std::vector<std::vector<int>>& parts) {
  for (const auto& part : parts)
    if (!is_G_invariant(q, part))
      throw std::invalid_argument("is_stu_decomposition: part is not G-invariant");

  std::vector<QuadraticSet> restricted;
  std::vector<std::vector<int>> pos(parts.size(), std::vector<int>(q.n, -1));
  for (std::size_t j = 0; j < parts.size(); ++j) {
    restricted.push_back(restrict(q, parts[j]));
    std::vector<int> sorted = parts[j];
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t k = 0; k < sorted.size(); ++k) pos[j][sorted[k]] = int(k);
  }

  StuCheck check;
  for (std::size_t i = 0; i < parts.size(); ++i)
    for (std::size_t j = 0; j < parts.size(); ++j) {
      if (i == j) continue;
      for (int x : parts[i]) {
        std::vector<int> img(restricted[j].n);
        for (int v : parts[j]) img[pos[j][v]] = pos[j][q.lact(x, v)];
        if (!is_automorphism_of(restricted[j], Permutation(img))) {
          check.ok = false;
          check.witness = {static_cast<int>(i), static_cast<int>(j), x};
          return check;
        }
      }
    }
  check.ok = true;
  return check;
}

QuadraticSet extend_by_automorphism(const QuadraticSet& q, const Permutation& tau) {
  if (!is_automorphism_of(q, tau))
    throw std::invalid_argument("extend_by_automorphism: tau is not an automorphism");
  const int n = q.n;
  std::vector<Permutation> rows;
  rows.reserve(n + 1);
  for (int x = 0; x < n; ++x) rows.push_back(extend_degree(left_perm(q, x), n + 1));
  rows.push_back(extend_degree(tau, n + 1));
  QuadraticSet z = from_left_action(rows);
  require_solution(z, "extend_by_automorphism");
  if (n >= 2 && !tau.is_identity()) {
    auto base = mpl(q);
    if (base && !yb_group(q).contains(tau)) {
      auto lifted = mpl(z);
      if (!lifted || *lifted != *base + 1)
        throw std::logic_error(
            "extend_by_automorphism: level did not rise by one");
    }
  }
  return z;
}

QuadraticSet canonical_doubling(const QuadraticSet& q) {
  if (!classify(q).is_square_free_solution())
    throw std::invalid_argument("canonical_doubling: input is not a square-free solution");
  QuadraticSet base = trivial_extension(q, q);
  std::vector<std::vector<int>> swap_cycles;
  for (int i = 0; i < q.n; ++i) swap_cycles.push_back({i, i + q.n});
  Permutation alpha = Permutation::from_cycles(2 * q.n, swap_cycles);
  QuadraticSet z = extend_by_automorphism(base, alpha);
  if (q.n >= 2) {
    auto base_mpl = mpl(q), z_mpl = mpl(z);
    if (base_mpl && (!z_mpl || *z_mpl != *base_mpl + 1))
      throw std::logic_error("canonical_doubling: level did not rise by one");
  }
  return z;
}

QuadraticSet wreath_product(const QuadraticSet& x0, const QuadraticSet& y,
                            int size_budget) {
  if (!classify(x0).is_square_free_solution() ||
      !classify(y).is_square_free_solution())
    throw std::invalid_argument("wreath_product: inputs must be square-free solutions");
  const int nx = x0.n, ny = y.n;
  const long long total = 1LL * nx * ny + ny;
  if (total > size_budget)
    throw std::length_error("wreath_product: size budget exceeded");
  const int n = static_cast<int>(total);
  auto cell = [&](int a, int x) { return a * nx + x; };
  std::vector<Permutation> rows;
  rows.reserve(n);
  for (int a = 0; a < ny; ++a)
    for (int x = 0; x < nx; ++x) {
      std::vector<int> img(n);
      std::iota(img.begin(), img.end(), 0);
      for (int z = 0; z < nx; ++z) img[cell(a, z)] = cell(a, x0.lact(x, z));
      rows.push_back(Permutation(std::move(img)));
    }
  for (int b = 0; b < ny; ++b) {
    std::vector<int> img(n);
    for (int a = 0; a < ny; ++a)
      for (int x = 0; x < nx; ++x) img[cell(a, x)] = cell(y.lact(b, a), x);
    for (int c = 0; c < ny; ++c) img[nx * ny + c] = nx * ny + y.lact(b, c);
    rows.push_back(Permutation(std::move(img)));
  }
  QuadraticSet z = from_left_action(rows);
  require_solution(z, "wreath_product");
  return z;
}

Permutation gi_sigma(int m, int depth_budget) {
  if (m < 0 || m > depth_budget)
    throw std::invalid_argument("gi_sigma: depth out of range");
  if (m == 0) return Permutation(1);
  Permutation sigma = Permutation::from_cycles(2, {{0, 1}});
  for (int k = 1; k < m; ++k) {
    int half = 1 << k, full = half << 1;
    sigma = vee(extend_degree(sigma, full), shift(sigma, half, full));
  }
  return sigma;
}

QuadraticSet gi_Y(int m, int depth_budget) {
  if (m < 0 || m > depth_budget)
    throw std::invalid_argument("gi_Y: depth out of range");
  if (m == 0) return trivial_solution(1);
  std::vector<Permutation> rows(2, Permutation(2));
  for (int k = 1; k < m; ++k) {
    const int half = 1 << k, full = half << 1;
    Permutation sigma = gi_sigma(k, depth_budget);
    Permutation low_action = shift(sigma, half, full);   // Y_k acts on the copy
    Permutation high_action = extend_degree(sigma, full);  // the copy acts on Y_k
    std::vector<Permutation> next(full);
    for (int z = 0; z < half; ++z) {
      std::vector<int> img = low_action.images();
      for (int i = 0; i < half; ++i) img[i] = rows[z](i);
      next[z] = Permutation(std::move(img));
      std::vector<int> img2 = high_action.images();
      for (int i = 0; i < half; ++i) img2[i + half] = rows[z](i) + half;
      next[z + half] = Permutation(std::move(img2));
    }
    rows = std::move(next);
  }
  return from_left_action(rows);
}

QuadraticSet gi_X(int m, int depth_budget) {
  if (m < 0 || m > depth_budget)
    throw std::invalid_argument("gi_X: depth out of range");
  if (m == 0) return trivial_solution(1);
  if (m == 1) return trivial_solution(2);
  return extend_by_automorphism(gi_Y(m - 1, depth_budget),
                                gi_sigma(m - 1, depth_budget));
}

QuadraticSet easy_family(int m, int depth_budget) {
  if (m < 0 || m > depth_budget)
    throw std::invalid_argument("easy_family: depth out of range");
  if (m == 0) return trivial_solution(1);
  if (m == 1) return trivial_solution(2);
  if (m == 2)
    return extend_by_automorphism(trivial_solution(2),
                                  Permutation::from_cycles(2, {{0, 1}}));
  return canonical_doubling(easy_family(m - 1, depth_budget));
}

QuadraticSet abelian_mpl2(const std::vector<std::uint64_t>& invariants) {
  if (invariants.empty())
    throw std::invalid_argument("abelian_mpl2: empty invariant list");
  std::uint64_t h = 1;
  for (std::uint64_t d : invariants) {
    if (d < 2) throw std::invalid_argument("abelian_mpl2: invariants must be >= 2");
    h *= d;
    if (h > 100000) throw std::length_error("abelian_mpl2: group too large");
  }
  const int r = static_cast<int>(invariants.size());
  const int nh = static_cast<int>(h);
  const int n = nh + r;

  // mixed-radix order, last coordinate fastest
  auto translate = [&](int idx, int coord) {
    std::uint64_t stride = 1;
    for (int j = r - 1; j > coord; --j) stride *= invariants[j];
    std::uint64_t d = invariants[coord];
    std::uint64_t digit = (idx / stride) % d;
    return static_cast<int>(idx - digit * stride + ((digit + 1) % d) * stride);
  };

  std::vector<Permutation> rows;
  rows.reserve(n);
  for (int i = 0; i < nh; ++i) rows.push_back(Permutation(n));
  for (int i = 0; i < r; ++i) {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 0);
    for (int x = 0; x < nh; ++x) img[x] = translate(x, i);
    rows.push_back(Permutation(std::move(img)));
  }
  QuadraticSet q = from_left_action(rows);
  require_solution(q, "abelian_mpl2");
  return q;
}

std::optional<std::uint64_t> linear_obstruction(const LinearParams& p) {
  if (p.modulus < 2) throw std::invalid_argument("linear: modulus >= 2 required");
  std::uint64_t w = p.unit % p.modulus;
  if (std::gcd(w, p.modulus) != 1)
    throw std::invalid_argument("linear: omega is not a unit");
  std::uint64_t d = (p.modulus + 1 - w) % p.modulus;  // 1 - omega
  std::uint64_t obstruction = (d * d) % p.modulus;
  if (obstruction == 0) return std::nullopt;
  return obstruction;
}

QuadraticSet linear_solution(const LinearParams& p) {
  auto obstruction = linear_obstruction(p);
  if (obstruction)
    throw std::invalid_argument("linear: (1-omega)^2 = " +
                                std::to_string(*obstruction) + " mod " +
                                std::to_string(p.modulus) + " is nonzero");
  if (p.rank < 1) throw std::invalid_argument("linear: rank >= 1 required");
  std::uint64_t total = 1;
  for (unsigned i = 0; i < p.rank; ++i) {
    total *= p.modulus;
    if (total > 4096) throw std::length_error("linear: size budget exceeded");
  }
  const int n = static_cast<int>(total);
  const std::uint64_t N = p.modulus, w = p.unit % N;

  auto digits = [&](int idx) {
    std::vector<std::uint64_t> d(p.rank);
    for (int j = static_cast<int>(p.rank) - 1; j >= 0; --j) {
      d[j] = idx % N;
      idx = static_cast<int>(idx / N);
    }
    return d;
  };
  auto index = [&](const std::vector<std::uint64_t>& d) {
    std::uint64_t idx = 0;
    for (unsigned j = 0; j < p.rank; ++j) idx = idx * N + d[j];
    return static_cast<int>(idx);
  };

  std::vector<Permutation> rows;
  rows.reserve(n);
  for (int a = 0; a < n; ++a) {
    auto da = digits(a);
    std::vector<int> img(n);
    for (int x = 0; x < n; ++x) {
      auto dx = digits(x);
      std::vector<std::uint64_t> dy(p.rank);
      for (unsigned j = 0; j < p.rank; ++j)
        dy[j] = (w * dx[j] + (N + 1 - w) % N * da[j]) % N;
      img[x] = index(dy);
    }
    rows.push_back(Permutation(std::move(img)));
  }
  QuadraticSet q = from_left_action(rows);
  require_solution(q, "linear_solution");
  return q;
}

StuResult semidirect_extension(const QuadraticSet& q1, const QuadraticSet& q2,
                               const std::vector<Permutation>& action) {
  const int n1 = q1.n, n2 = q2.n;
  if (static_cast<int>(action.size()) != n2)
    throw std::invalid_argument("semidirect_extension: one action per Y element required");
  for (const auto& p : action)
    if (p.degree() != n1)
      throw std::invalid_argument("semidirect_extension: action degree mismatch");

  const int n = n1 + n2;
  std::vector<Permutation> action_inv;
  for (const auto& p : action) action_inv.push_back(p.inverse());
  StuResult res;
  res.set.n = n;
  res.set.left.resize(std::size_t(n) * n);
  res.set.right.resize(std::size_t(n) * n);
  res.set.lri_derived = q1.lri_derived && q2.lri_derived;
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) {
      int &l = res.set.left[std::size_t(u) * n + v];
      int &r = res.set.right[std::size_t(u) * n + v];
      if (u < n1 && v < n1) {
        l = q1.lact(u, v);
        r = q1.ract(u, v);
      } else if (u >= n1 && v >= n1) {
        l = q2.lact(u - n1, v - n1) + n1;
        r = q2.ract(u - n1, v - n1) + n1;
      } else if (u >= n1) {  // r(alpha, x) = (^alpha x, alpha)
        l = action[u - n1](v);
        r = u;
      } else {  // r(x, alpha) = (alpha, x^alpha)
        l = v;
        r = action_inv[v - n1](u);
      }
    }
  res.flags = classify(res.set);
  res.is_solution = res.flags.is_symmetric_set();
  return res;
}

}  // namespace ybe
