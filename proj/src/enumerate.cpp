#include "ybe/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <future>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "ybe/group.hpp"
#include "ybe/retract.hpp"

namespace ybe {

namespace {

// All permutations of {0..n-1} fixing the point x, in lexicographic image
// order.
std::vector<Permutation> fixing_rows(int n, int x) {
  std::vector<int> others;
  for (int i = 0; i < n; ++i)
    if (i != x) others.push_back(i);
  std::vector<Permutation> out;
  std::vector<int> perm = others;
  do {
    std::vector<int> img(n);
    img[x] = x;
    for (std::size_t i = 0; i < others.size(); ++i) img[others[i]] = perm[i];
    out.push_back(Permutation(std::move(img)));
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::sort(out.begin(), out.end());
  return out;
}

struct Search {
  int n;
  const std::vector<std::vector<Permutation>>& candidates;  // per element
  std::vector<const Permutation*> rows;
  std::vector<Permutation> row_inv;
  const std::function<bool(const QuadraticSet&)>& emit;
  bool stopped = false;

  // Laws checkable with rows 0..k assigned; anything referencing a row > k
  // is deferred until that row exists.
  bool frontier_ok(int k) const {
    for (int x = 0; x <= k; ++x)
      for (int y = 0; y <= k; ++y) {
        const Permutation& lx = *rows[x];
        const Permutation& ly = *rows[y];
        int yx = row_inv[x](y);  // y^x
        if (yx <= k && (*rows[yx])(x) != ly(x)) return false;
        int xy = lx(y), xinv_y = row_inv[y](x);  // ^x y and x^y
        if (xy <= k && xinv_y <= k) {
          // l1 as a permutation identity: L_(^x y) o L_(x^y) == L_x o L_y
          const Permutation& a = *rows[xy];
          const Permutation& b = *rows[xinv_y];
          for (int z = 0; z < n; ++z)
            if (a(b(z)) != lx(ly(z))) return false;
        }
      }
    return true;
  }

  void dfs(int k) {
    if (stopped) return;
    if (k == n) {
      std::vector<Permutation> final_rows;
      final_rows.reserve(n);
      for (auto* r : rows) final_rows.push_back(*r);
      QuadraticSet q = from_left_action(final_rows);
      if (classify(q).is_square_free_solution())  // belt and braces
        if (!emit(q)) stopped = true;
      return;
    }
    for (const auto& cand : candidates[k]) {
      rows[k] = &cand;
      row_inv[k] = cand.inverse();
      if (frontier_ok(k)) dfs(k + 1);
      if (stopped) return;
    }
  }
};

// Enumerate with the first two rows pinned (depth-2 prefix).
void run_prefix(int n, const std::vector<std::vector<Permutation>>& candidates,
                const Permutation& r0, const Permutation& r1,
                const std::function<bool(const QuadraticSet&)>& emit) {
  Search s{n, candidates, {}, {}, emit};
  s.rows.assign(n, nullptr);
  s.row_inv.assign(n, Permutation());
  s.rows[0] = &r0;
  s.row_inv[0] = r0.inverse();
  if (!s.frontier_ok(0)) return;
  s.rows[1] = &r1;
  s.row_inv[1] = r1.inverse();
  if (!s.frontier_ok(1)) return;
  s.dfs(2);
}

}  // namespace

void enumerate_square_free(int n, const EnumerateOptions& opts,
                           const std::function<bool(const QuadraticSet&)>& emit) {
  if (n < 2) throw std::invalid_argument("enumerate_square_free: n >= 2 required");
  if (n > opts.hard_cap)
    throw std::invalid_argument(
        "enumerate_square_free: n above cap (raise hard_cap explicitly)");

  std::vector<std::vector<Permutation>> candidates;
  candidates.reserve(n);
  for (int x = 0; x < n; ++x) candidates.push_back(fixing_rows(n, x));

  auto wrap = [&](const QuadraticSet& q) {
    if (opts.up_to_iso && !(canonical_form(q) == q)) return true;
    return emit(q);
  };

  const int shards = std::max(1, opts.shards);
  if (shards == 1) {
    for (const auto& r0 : candidates[0])
      for (const auto& r1 : candidates[1])
        run_prefix(n, candidates, r0, r1, wrap);
    return;
  }

  // Shard by depth-2 prefix; each shard collects its results and the merge
  // replays prefixes in order, so the stream does not depend on the shard
  // count.
  struct PrefixJob {
    const Permutation* r0;
    const Permutation* r1;
  };
  std::vector<PrefixJob> jobs;
  for (const auto& r0 : candidates[0])
    for (const auto& r1 : candidates[1]) jobs.push_back({&r0, &r1});

  std::vector<std::future<std::vector<QuadraticSet>>> futures(jobs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (;;) {
      std::size_t j = next.fetch_add(1);
      if (j >= jobs.size()) return;
      std::vector<QuadraticSet> found;
      std::promise<std::vector<QuadraticSet>> promise;
      futures[j] = promise.get_future();
      run_prefix(n, candidates, *jobs[j].r0, *jobs[j].r1,
                 [&](const QuadraticSet& q) {
                   found.push_back(q);
                   return true;
                 });
      promise.set_value(std::move(found));
    }
  };
  // Deterministic fallback: sequential execution in job order also fills
  // futures in order; with threads, ordering is restored at merge time.
  std::vector<std::thread> pool;
  std::size_t nthreads = std::min<std::size_t>(shards, jobs.size());
  for (std::size_t t = 0; t < nthreads; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  for (auto& f : futures) {
    for (const auto& q : f.get()) {
      if (opts.up_to_iso && !(canonical_form(q) == q)) continue;
      if (!emit(q)) return;
    }
  }
}

std::vector<QuadraticSet> enumerate_square_free(int n, const EnumerateOptions& opts) {
  std::vector<QuadraticSet> out;
  enumerate_square_free(n, opts, [&](const QuadraticSet& q) {
    out.push_back(q);
    return true;
  });
  return out;
}

namespace {

class IsoSearch {
 public:
  IsoSearch(const QuadraticSet& a, const QuadraticSet& b) : a_(a), b_(b), n_(a.n) {
    phi_.assign(n_, -1);
    used_.assign(n_, 0);
  }

  std::optional<Permutation> run() {
    if (dfs()) return Permutation(phi_);
    return std::nullopt;
  }

 private:
  const QuadraticSet &a_, &b_;
  int n_;
  std::vector<int> phi_, trail_;
  std::vector<char> used_;

  bool set_image(int x, int v) {
    if (phi_[x] >= 0) return phi_[x] == v;
    if (used_[v]) return false;
    phi_[x] = v;
    used_[v] = 1;
    trail_.push_back(x);
    for (int y = 0; y < n_; ++y) {
      if (phi_[y] < 0) continue;
      if (!set_image(a_.lact(x, y), b_.lact(v, phi_[y]))) return false;
      if (!set_image(a_.lact(y, x), b_.lact(phi_[y], v))) return false;
    }
    return true;
  }

  bool dfs() {
    int x = -1;
    for (int i = 0; i < n_; ++i)
      if (phi_[i] < 0) {
        x = i;
        break;
      }
    if (x < 0) return true;
    for (int v = 0; v < n_; ++v) {
      if (used_[v]) continue;
      std::size_t mark = trail_.size();
      if (set_image(x, v) && dfs()) return true;
      while (trail_.size() > mark) {
        int t = trail_.back();
        trail_.pop_back();
        used_[phi_[t]] = 0;
        phi_[t] = -1;
      }
    }
    return false;
  }
};

// Cheap isomorphism invariant: sorted row cycle types.
std::vector<std::vector<int>> row_profile(const QuadraticSet& q) {
  std::vector<std::vector<int>> profile;
  for (int x = 0; x < q.n; ++x) {
    std::vector<int> type;
    for (const auto& c : left_perm(q, x).cycles()) type.push_back(int(c.size()));
    std::sort(type.begin(), type.end());
    profile.push_back(std::move(type));
  }
  std::sort(profile.begin(), profile.end());
  return profile;
}

}  // namespace

std::optional<Permutation> is_isomorphic(const QuadraticSet& a,
                                         const QuadraticSet& b, int max_n) {
  if (a.n != b.n) return std::nullopt;
  if (a.n > max_n)
    throw std::invalid_argument("is_isomorphic: size above bound");
  if (row_profile(a) != row_profile(b)) return std::nullopt;
  return IsoSearch(a, b).run();
}

QuadraticSet canonical_form(const QuadraticSet& q, int max_n) {
  if (q.n > max_n) throw std::invalid_argument("canonical_form: size above bound");
  const int n = q.n;
  std::vector<int> sigma(n);
  std::iota(sigma.begin(), sigma.end(), 0);
  std::vector<int> best_left = q.left, best_right = q.right;
  std::vector<int> cand_left(n * n), cand_right(n * n);
  do {
    bool better = false, worse = false;
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        // relabelled table at (sigma x, sigma y)
        cand_left[sigma[x] * n + sigma[y]] = sigma[q.lact(x, y)];
        cand_right[sigma[x] * n + sigma[y]] = sigma[q.ract(x, y)];
      }
    for (int i = 0; i < n * n; ++i) {
      if (cand_left[i] < best_left[i]) {
        better = true;
        break;
      }
      if (cand_left[i] > best_left[i]) {
        worse = true;
        break;
      }
    }
    if (!better && !worse && cand_right < best_right) better = true;
    if (better) {
      best_left = cand_left;
      best_right = cand_right;
    }
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  QuadraticSet out;
  out.n = n;
  out.left = std::move(best_left);
  out.right = std::move(best_right);
  out.lri_derived = q.lri_derived;
  return out;
}

std::optional<int> min_order_scan(int target_mpl, int max_n,
                                  const EnumerateOptions& opts) {
  for (int n = 1; n <= max_n; ++n) {
    if (n == 1) {
      if (target_mpl == 0) return 1;
      continue;
    }
    bool found = false;
    EnumerateOptions local = opts;
    local.up_to_iso = true;
    enumerate_square_free(n, local, [&](const QuadraticSet& q) {
      auto level = mpl(q);
      if (level && *level == target_mpl) {
        found = true;
        return false;
      }
      return true;
    });
    if (found) return n;
  }
  return std::nullopt;
}

std::vector<CensusRow> census(int max_n, const EnumerateOptions& opts) {
  std::vector<CensusRow> rows;
  for (int n = 2; n <= max_n; ++n) {
    CensusRow row;
    row.n = n;
    EnumerateOptions local = opts;
    local.up_to_iso = true;
    enumerate_square_free(n, local, [&](const QuadraticSet& q) {
      ++row.count;
      auto level = mpl(q);
      if (level)
        ++row.by_mpl[*level];
      else
        ++row.irretractable;
      PermGroup g = yb_group(q);
      ++row.by_group_order[g.order().to_u64()];
      if (g.is_abelian()) ++row.abelian_count;
      return true;
    });
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace ybe
