#include "ybe/group.hpp"

#include "ybe/retract.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace ybe {

namespace {

struct VecHash {
  std::size_t operator()(const std::vector<int>& v) const {
    std::size_t h = 1469598103934665603ULL;
    for (int x : v) {
      h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ULL;
      h *= 1099511628211ULL;
    }
    return h;
  }
};

}  // namespace

PermGroup::PermGroup(int degree, std::vector<Permutation> generators)
    : degree_(degree) {
  std::set<std::vector<int>> seen;
  for (auto& g : generators) {
    if (g.degree() != degree)
      throw std::invalid_argument("PermGroup: generator degree mismatch");
    if (g.is_identity()) continue;
    if (seen.insert(g.images()).second) gens_.push_back(std::move(g));
  }
  build();
}

void PermGroup::extend_level_orbit(std::size_t idx) {
  // Incremental: existing orbit entries and transversals keep their
  // positions, so the close_level done marks stay valid.
  Level& lv = levels_[idx];
  if (lv.orbit.empty()) {
    lv.transversal.assign(degree_, Permutation());
    lv.in_orbit.assign(degree_, 0);
    lv.orbit.push_back(lv.base_point);
    lv.in_orbit[lv.base_point] = 1;
    lv.transversal[lv.base_point] = Permutation(degree_);
  }
  for (std::size_t i = 0; i < lv.orbit.size(); ++i) {
    int p = lv.orbit[i];
    for (const auto& s : lv.gens) {
      int q = s(p);
      if (!lv.in_orbit[q]) {
        lv.in_orbit[q] = 1;
        lv.orbit.push_back(q);
        lv.transversal[q] = compose(s, lv.transversal[p]);
      }
    }
  }
}

Permutation PermGroup::sift(const Permutation& p, std::size_t from_level,
                            std::size_t* stop_level) const {
  Permutation h = p;
  for (std::size_t i = from_level; i < levels_.size(); ++i) {
    int image = h(levels_[i].base_point);
    if (!levels_[i].in_orbit[image]) {
      if (stop_level) *stop_level = i;
      return h;
    }
    h = compose(levels_[i].transversal[image].inverse(), h);
  }
  if (stop_level) *stop_level = levels_.size();
  return h;
}

void PermGroup::add_strong_generator(std::size_t from, const Permutation& h) {
  // h fixes the base points of all levels below `drop`, so it is a valid
  // strong generator for every level in from..drop.
  std::size_t drop = 0;
  Permutation rem = sift(h, from, &drop);
  if (rem.is_identity()) return;
  if (drop == levels_.size()) {
    Level lv;
    for (int i = 0; i < degree_; ++i)
      if (rem(i) != i) {
        lv.base_point = i;
        break;
      }
    levels_.push_back(std::move(lv));
  }
  for (std::size_t l = from; l <= drop; ++l) {
    // skip exact duplicates already present at this level
    bool dup = false;
    for (const auto& g : levels_[l].gens)
      if (g == rem) {
        dup = true;
        break;
      }
    if (!dup) levels_[l].gens.push_back(rem);
  }
  for (std::size_t l = from; l <= drop; ++l) extend_level_orbit(l);
  for (std::size_t l = drop + 1; l-- > from;) {
    close_level(l);
    if (l == 0) break;
  }
}

void PermGroup::close_level(std::size_t level) {
  // Make every Schreier generator of this level sift through the deeper
  // chain.  Additions land strictly deeper, so this level's own orbit and
  // generator list stay fixed during the pass; recursion may grow the level
  // vector, so use indices, never references.  Pairs below the done marks
  // were handled by an earlier pass.
  const std::size_t n_orbit = levels_[level].orbit.size();
  const std::size_t n_gens = levels_[level].gens.size();
  const std::size_t done_orbit = levels_[level].done_orbit;
  const std::size_t done_gens = levels_[level].done_gens;
  levels_[level].done_orbit = n_orbit;
  levels_[level].done_gens = n_gens;
  for (std::size_t oi = 0; oi < n_orbit; ++oi) {
    for (std::size_t si = 0; si < n_gens; ++si) {
      if (oi < done_orbit && si < done_gens) continue;
      int pt = levels_[level].orbit[oi];
      const Permutation s = levels_[level].gens[si];
      Permutation sg = compose(levels_[level].transversal[s(pt)].inverse(),
                               compose(s, levels_[level].transversal[pt]));
      if (sg.is_identity()) continue;
      add_strong_generator(level + 1, sg);
    }
  }
}

void PermGroup::build() {
  for (const auto& g : gens_) add_strong_generator(0, g);
  order_ = BigUint(1);
  for (const auto& lv : levels_) order_ *= BigUint(lv.orbit.size());
}

bool PermGroup::contains(const Permutation& p) const {
  if (p.degree() != degree_) return false;
  return sift(p, 0, nullptr).is_identity();
}

bool PermGroup::is_abelian() const {
  for (std::size_t i = 0; i < gens_.size(); ++i)
    for (std::size_t j = i + 1; j < gens_.size(); ++j)
      if (compose(gens_[i], gens_[j]) != compose(gens_[j], gens_[i]))
        return false;
  return true;
}

std::vector<Permutation> PermGroup::elements(std::size_t cap) const {
  std::vector<Permutation> out;
  std::unordered_set<std::vector<int>, VecHash> seen;
  out.push_back(Permutation(degree_));
  seen.insert(out[0].images());
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (const auto& s : gens_) {
      Permutation next = compose(out[i], s);
      if (seen.insert(next.images()).second) {
        if (out.size() >= cap)
          throw std::length_error("PermGroup::elements: cap exceeded");
        out.push_back(std::move(next));
      }
    }
  }
  return out;
}

OrbitPartition orbits_of_generators(int degree,
                                    const std::vector<Permutation>& gens) {
  std::vector<int> parent(degree);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (const auto& g : gens)
    for (int x = 0; x < degree; ++x) {
      int a = find(x), b = find(g(x));
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  OrbitPartition part;
  part.orbit_of.assign(degree, -1);
  std::map<int, int> renumber;
  for (int x = 0; x < degree; ++x) {
    int root = find(x);
    auto [it, fresh] = renumber.emplace(root, renumber.size());
    if (fresh) part.orbits.emplace_back();
    part.orbit_of[x] = it->second;
    part.orbits[it->second].push_back(x);
  }
  return part;
}

OrbitPartition orbits(const PermGroup& g) {
  return orbits_of_generators(g.degree(), g.generators());
}

PermGroup derived_subgroup(const PermGroup& g) {
  const auto& gens = g.generators();
  std::set<std::vector<int>> seen;
  std::vector<Permutation> hgens;
  auto push = [&](const Permutation& p) {
    if (!p.is_identity() && seen.insert(p.images()).second) hgens.push_back(p);
  };
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      Permutation c = compose(compose(gens[i], gens[j]),
                              compose(gens[i].inverse(), gens[j].inverse()));
      push(c);
    }
  PermGroup h(g.degree(), hgens);
  // normal closure under conjugation by the generators of g
  for (;;) {
    bool grew = false;
    std::vector<Permutation> fresh;
    for (const auto& x : hgens)
      for (const auto& a : gens) {
        Permutation c = compose(compose(a, x), a.inverse());
        if (!h.contains(c)) {
          fresh.push_back(c);
          grew = true;
        }
      }
    if (!grew) break;
    for (auto& c : fresh) push(c);
    h = PermGroup(g.degree(), hgens);
  }
  return h;
}

std::vector<PermGroup> derived_series(const PermGroup& g) {
  std::vector<PermGroup> series;
  series.push_back(g);
  while (!series.back().is_trivial()) {
    PermGroup next = derived_subgroup(series.back());
    if (next.order() == series.back().order()) break;  // stabilized above 1
    series.push_back(std::move(next));
  }
  return series;
}

std::optional<int> solvable_length(const PermGroup& g) {
  auto series = derived_series(g);
  if (!series.back().is_trivial()) return std::nullopt;
  return static_cast<int>(series.size()) - 1;
}

PermGroup yb_group(const QuadraticSet& q) {
  PropertyFlags f = classify(q);
  if (!f.nondegenerate)
    throw std::invalid_argument("yb_group: quadratic set is degenerate");
  std::vector<Permutation> rows;
  rows.reserve(q.n);
  for (int x = 0; x < q.n; ++x) rows.push_back(left_perm(q, x));
  return PermGroup(q.n, std::move(rows));
}

int yb_group_solvable_length_G(const QuadraticSet& q) {
  if (!is_square_free_solution(q))
    throw std::invalid_argument(
        "yb_group_solvable_length_G: not a square-free solution");
  auto sl = solvable_length(yb_group(q));
  if (!sl)
    throw std::invalid_argument(
        "yb_group_solvable_length_G: permutation group is not solvable");
  return *sl + 1;
}

namespace {

// Backtracking search for all sigma with sigma L_x sigma^-1 = L_{sigma x};
// assigned pairs force images of ^x y, which prunes hard.
class AutSearch {
 public:
  explicit AutSearch(const QuadraticSet& q) : q_(q), n_(q.n) {
    sigma_.assign(n_, -1);
    used_.assign(n_, 0);
  }

  std::vector<Permutation> run() {
    dfs();
    return std::move(results_);
  }

 private:
  const QuadraticSet& q_;
  int n_;
  std::vector<int> sigma_, trail_;
  std::vector<char> used_;
  std::vector<Permutation> results_;

  bool set_image(int x, int v) {
    if (sigma_[x] >= 0) return sigma_[x] == v;
    if (used_[v]) return false;
    sigma_[x] = v;
    used_[v] = 1;
    trail_.push_back(x);
    // propagate over pairs with both endpoints assigned
    for (int y = 0; y < n_; ++y) {
      if (sigma_[y] < 0) continue;
      if (!set_image(q_.lact(x, y), q_.lact(v, sigma_[y]))) return false;
      if (!set_image(q_.lact(y, x), q_.lact(sigma_[y], v))) return false;
    }
    return true;
  }

  void dfs() {
    int x = -1;
    for (int i = 0; i < n_; ++i)
      if (sigma_[i] < 0) {
        x = i;
        break;
      }
    if (x < 0) {
      results_.push_back(Permutation(sigma_));
      return;
    }
    for (int v = 0; v < n_; ++v) {
      if (used_[v]) continue;
      std::size_t mark = trail_.size();
      if (set_image(x, v)) dfs();
      while (trail_.size() > mark) {
        int t = trail_.back();
        trail_.pop_back();
        used_[sigma_[t]] = 0;
        sigma_[t] = -1;
      }
    }
  }
};

}  // namespace

PermGroup automorphism_group(const QuadraticSet& q, int max_n) {
  if (q.n > max_n)
    throw std::invalid_argument(
        "automorphism_group: size above brute-force bound; raise the bound "
        "to enable the pruned search on larger sets");
  PropertyFlags f = classify(q);
  if (!f.lri)
    throw std::invalid_argument("automorphism_group: lri fails");
  return PermGroup(q.n, AutSearch(q).run());
}

RetractHomReport retract_hom(const QuadraticSet& q, std::size_t cap) {
  if (!is_square_free_solution(q))
    throw std::invalid_argument("retract_hom: not a square-free solution");

  // Generator L_x maps to L_[x]; identical rows land in one class, so the
  // assignment is well defined on the generating set.
  struct GenPair {
    Permutation g, image;
  };
  RetractStep step = retract(q);
  const QuadraticSet& quo = step.quotient;
  std::vector<GenPair> gens;
  std::set<std::vector<int>> seen_rows;
  for (int x = 0; x < q.n; ++x) {
    Permutation row = left_perm(q, x);
    if (row.is_identity()) continue;
    if (!seen_rows.insert(row.images()).second) continue;
    gens.push_back({row, left_perm(quo, step.class_of[x])});
  }

  RetractHomReport rep;
  std::unordered_map<std::vector<int>, Permutation, VecHash> image_of;
  std::vector<Permutation> order_bfs;
  Permutation id_g(q.n), id_q(quo.n);
  image_of.emplace(id_g.images(), id_q);
  order_bfs.push_back(id_g);
  rep.homomorphism = true;
  for (std::size_t i = 0; i < order_bfs.size() && rep.homomorphism; ++i) {
    const Permutation g = order_bfs[i];
    const Permutation img = image_of.at(g.images());
    for (const auto& [s, t] : gens) {
      Permutation g2 = compose(g, s);
      Permutation img2 = compose(img, t);
      auto it = image_of.find(g2.images());
      if (it == image_of.end()) {
        if (order_bfs.size() >= cap)
          throw std::length_error("retract_hom: group too large");
        image_of.emplace(g2.images(), img2);
        order_bfs.push_back(std::move(g2));
      } else if (!(it->second == img2)) {
        rep.homomorphism = false;  // relation not respected
        break;
      }
    }
  }
  rep.group_order = order_bfs.size();

  std::unordered_set<std::vector<int>, VecHash> image_set;
  std::vector<Permutation> kernel;
  for (const auto& g : order_bfs) {
    const Permutation& img = image_of.at(g.images());
    image_set.insert(img.images());
    if (img.is_identity()) kernel.push_back(g);
  }
  rep.image_order = image_set.size();
  rep.kernel_order = kernel.size();
  rep.surjective = BigUint(rep.image_order) == yb_group(quo).order();
  rep.kernel_abelian = true;
  for (std::size_t i = 0; i < kernel.size() && rep.kernel_abelian; ++i)
    for (std::size_t j = i + 1; j < kernel.size(); ++j)
      if (compose(kernel[i], kernel[j]) != compose(kernel[j], kernel[i])) {
        rep.kernel_abelian = false;
        break;
      }
  return rep;
}

bool check_group_product(const QuadraticSet& q,
                         const std::vector<std::vector<int>>& parts,
                         std::size_t cap) {
  for (const auto& part : parts)
    if (!is_G_invariant(q, part))
      throw std::invalid_argument("check_group_product: part is not G-invariant");

  PermGroup full = yb_group(q);
  auto all = full.elements(cap);
  std::unordered_set<std::vector<int>, VecHash> target;
  for (const auto& g : all) target.insert(g.images());

  std::unordered_set<std::vector<int>, VecHash> product;
  product.insert(Permutation(q.n).images());
  for (const auto& part : parts) {
    std::vector<Permutation> sub_gens;
    for (int y : part) {
      Permutation row = left_perm(q, y);
      if (!row.is_identity()) sub_gens.push_back(std::move(row));
    }
    auto sub_elements = PermGroup(q.n, sub_gens).elements(cap);
    std::unordered_set<std::vector<int>, VecHash> next;
    for (const auto& p : product)
      for (const auto& h : sub_elements) {
        Permutation prod = compose(Permutation(p), h);
        next.insert(prod.images());
      }
    product = std::move(next);
  }
  if (product.size() != target.size()) return false;
  for (const auto& p : product)
    if (!target.count(p)) return false;
  return true;
}

std::vector<std::uint64_t> abelian_invariants(const PermGroup& g,
                                              std::size_t cap) {
  if (!g.is_abelian())
    throw std::invalid_argument("abelian_invariants: group is not abelian");
  auto elems = g.elements(cap);
  const std::uint64_t order = elems.size();
  if (order == 1) return {};

  // prime factorization of the group order
  std::vector<std::uint64_t> primes;
  std::uint64_t rest = order;
  for (std::uint64_t p = 2; p * p <= rest; ++p)
    if (rest % p == 0) {
      primes.push_back(p);
      while (rest % p == 0) rest /= p;
    }
  if (rest > 1) primes.push_back(rest);

  // For each prime, recover the partition (lambda_1 >= lambda_2 >= ...) of
  // the p-component from the p^k-torsion counts.
  std::vector<std::vector<unsigned>> partitions;
  std::size_t max_parts = 0;
  for (std::uint64_t p : primes) {
    std::vector<std::uint64_t> torsion;  // N_k = #{g : order(g) | p^k}
    torsion.push_back(1);
    for (;;) {
      std::uint64_t bound = torsion.back();
      std::uint64_t pk = 1;
      for (std::size_t i = 0; i < torsion.size(); ++i) pk *= p;
      std::uint64_t count = 0;
      for (const auto& e : elems) {
        std::uint64_t o = e.order();
        if (pk % o == 0) ++count;
      }
      torsion.push_back(count);
      if (count == bound) break;  // full p-component reached
    }
    std::vector<unsigned> e_k;  // e_k = #{i : lambda_i >= k}
    for (std::size_t k = 1; k < torsion.size(); ++k) {
      std::uint64_t ratio = torsion[k] / torsion[k - 1];
      unsigned log = 0;
      while (ratio > 1) {
        ratio /= p;
        ++log;
      }
      if (log == 0) break;
      e_k.push_back(log);
    }
    std::vector<unsigned> lambda;
    for (std::size_t i = 0; i < e_k.size(); ++i)
      for (unsigned c = e_k[i] - (i + 1 < e_k.size() ? e_k[i + 1] : 0); c > 0; --c)
        lambda.push_back(static_cast<unsigned>(i + 1));
    std::sort(lambda.rbegin(), lambda.rend());
    partitions.push_back(lambda);
    max_parts = std::max(max_parts, lambda.size());
  }

  std::vector<std::uint64_t> factors(max_parts, 1);
  for (std::size_t pi = 0; pi < primes.size(); ++pi)
    for (std::size_t j = 0; j < partitions[pi].size(); ++j) {
      std::uint64_t q = 1;
      for (unsigned e = 0; e < partitions[pi][j]; ++e) q *= primes[pi];
      factors[j] *= q;  // j-th largest exponent joins the j-th largest factor
    }
  std::sort(factors.begin(), factors.end());
  return factors;
}

}  // namespace ybe
