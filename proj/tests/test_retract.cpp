#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "test_util.hpp"
#include "ybe/construct.hpp"
#include "ybe/enumerate.hpp"
#include "ybe/retract.hpp"

using namespace ybe;
using ybe::test::gap12;
using ybe::test::jump26;
using ybe::test::three_element;

TEST_CASE("retract of the fixtures") {
  QuadraticSet triv = trivial_solution(4);
  RetractStep step = retract(triv);
  CHECK(step.quotient.n == 1);
  CHECK(step.class_of == std::vector<int>{0, 0, 0, 0});

  QuadraticSet gap = gap12();
  RetractStep g1 = retract(gap);
  CHECK(g1.quotient.n == 5);  // [a] [b] [c] [d] [x1]
  auto labels = g1.quotient.label_vec();
  CHECK(labels == std::vector<std::string>{"a", "b", "c", "d", "x1"});
  CHECK(format_cycles(left_perm(g1.quotient, 0), labels) == "(b d)");
  CHECK(left_perm(g1.quotient, 0) == left_perm(g1.quotient, 2));
  CHECK(format_cycles(left_perm(g1.quotient, 1), labels) == "(a c)");
  CHECK(left_perm(g1.quotient, 1) == left_perm(g1.quotient, 3));

  RetractStep g2 = retract(g1.quotient);
  CHECK(g2.quotient.n == 3);
  for (int x = 0; x < 3; ++x) CHECK(left_perm(g2.quotient, x).is_identity());

  // rows {id, (x1 x2)} are not involutive, hence not a symmetric set
  CHECK_THROWS_AS(retract(from_left_action(
                      {Permutation(2), Permutation::from_cycles(2, {{0, 1}})})),
                  std::invalid_argument);
}

TEST_CASE("mpl by retract towers") {
  CHECK(mpl(trivial_solution(1)) == 0);
  CHECK(mpl(trivial_solution(2)) == 1);
  CHECK(mpl(three_element()) == 2);
  CHECK(mpl(gap12()) == 3);
  CHECK(mpl(jump26()) == 4);

  RetractTower tower = retract_tower(gap12(), 12);
  CHECK(tower.status == TowerStatus::terminated);
  CHECK(tower.level == 3);
  CHECK(tower.levels.size() == 3);
  auto to1 = tower.map_to_level(1);
  CHECK(to1[0] != to1[2]);   // a and c differ at the first level
  auto to2 = tower.map_to_level(2);
  CHECK(to2[0] == to2[2]);   // and collapse at the second

  RetractTower budget = retract_tower(gap12(), 1);
  CHECK(budget.status == TowerStatus::budget_exhausted);
}

TEST_CASE("mpl decreases by one under retraction") {
  for (const QuadraticSet& q : {gap12(), three_element(), jump26()}) {
    auto m = mpl(q);
    REQUIRE(m);
    CHECK(mpl(retract(q).quotient) == *m - 1);
  }
}

TEST_CASE("retract preserves the classified laws") {
  for (const QuadraticSet& q : {gap12(), three_element(), jump26()}) {
    PropertyFlags src = classify(q);
    PropertyFlags quo = classify(retract(q).quotient);
    CHECK(quo.square_free >= src.square_free);
    CHECK(quo.lri >= src.lri);
    CHECK((quo.cl1 && quo.cl2 && quo.cr1 && quo.cr2) >=
          (src.cl1 && src.cl2 && src.cr1 && src.cr2));
  }
}

TEST_CASE("tower identity route") {
  CHECK(tower_identity_holds(trivial_solution(2), 1));
  QuadraticSet three = three_element();
  CHECK_FALSE(tower_identity_holds(three, 1));  // x3 |> x1 = x2 != x1
  CHECK(tower_identity_holds(three, 2));
  CHECK(mpl_via_tower(three) == 2);
  CHECK(mpl_via_tower(trivial_solution(1)) == 0);
  CHECK(mpl_via_tower(gap12()) == 3);

  // the two routes agree on every enumerated solution of small order
  for (int n = 2; n <= 5; ++n)
    for (const auto& q : enumerate_square_free(n))
      CHECK(mpl(q) == mpl_via_tower(q));
}

TEST_CASE("level-2 and level-3 characterizations") {
  CHECK(check_mpl_le2(trivial_solution(3)));
  CHECK(check_mpl_le3_condition(trivial_solution(3)));
  CHECK(check_mpl_le2(three_element()));
  CHECK_FALSE(check_mpl_le2(gap12()));
  CHECK(check_mpl_le3_condition(gap12()));
  CHECK_FALSE(check_mpl_le3_condition(jump26()));  // mpl 4

  for (int n = 2; n <= 5; ++n)
    for (const auto& q : enumerate_square_free(n)) {
      auto m = mpl(q);
      if (!m) continue;
      CHECK(check_mpl_le2(q) == (*m <= 2));
      CHECK(check_mpl_le3_condition(q) == (*m <= 3));
    }
}

TEST_CASE("retract class decomposition") {
  QuadraticSet gap = gap12();
  RetractClassDecomposition dec = retract_class_decomposition(gap);
  CHECK(dec.level == 2);
  REQUIRE(dec.classes.size() == 3);
  CHECK(dec.classes[0].members == std::vector<int>{0, 2});  // {a, c}
  CHECK(dec.classes[1].members == std::vector<int>{1, 3});  // {b, d}
  CHECK(dec.classes[2].members ==
        std::vector<int>{4, 5, 6, 7, 8, 9, 10, 11});
  for (const auto& cls : dec.classes) {
    CHECK(cls.g_invariant);
    CHECK(cls.union_of_orbits);
    REQUIRE(cls.mpl_of_restriction);
    CHECK(*cls.mpl_of_restriction <= 2);
  }

  RetractClassDecomposition triv = retract_class_decomposition(trivial_solution(4));
  REQUIRE(triv.classes.size() == 1);
  CHECK(triv.classes[0].members == std::vector<int>{0, 1, 2, 3});
}

namespace {

int fold_tower(const QuadraticSet& q, const std::vector<int>& actors, int target) {
  // ((...(a_k |> a_{k-1}) |> ...) |> a_1) |> target
  if (actors.empty()) return target;
  int u = actors[0];
  for (std::size_t i = 1; i < actors.size(); ++i) u = q.lact(u, actors[i]);
  return q.lact(u, target);
}

}  // namespace

TEST_CASE("tower truncation on sampled towers") {
  std::mt19937 rng(2026);
  for (const QuadraticSet& q : {gap12(), three_element()}) {
    // r-invariant subset: the x-block for gap, the fixed rows for three
    std::vector<int> Z;
    for (int x = 0; x < q.n; ++x)
      if (left_perm(q, x).is_identity()) Z.push_back(x);
    if (Z.empty()) continue;
    REQUIRE(is_r_invariant(q, Z));
    for (int trial = 0; trial < 200; ++trial) {
      int k = 1 + int(rng() % 3);
      std::vector<int> ys(k);
      for (int& y : ys) y = int(rng() % q.n);
      // inner premise: alpha |> y_k ... |> y_1 == y_k ... |> y_1 for all alpha in Z
      bool premise = true;
      std::vector<int> inner(ys.begin(), ys.end() - 1);
      int plain = fold_tower(q, inner, ys.back());
      for (int alpha : Z) {
        std::vector<int> with_alpha;
        with_alpha.push_back(alpha);
        with_alpha.insert(with_alpha.end(), inner.begin(), inner.end());
        if (fold_tower(q, with_alpha, ys.back()) != plain) premise = false;
      }
      if (!premise) continue;
      // extended towers: prefix a's, alpha, the y's, then suffix b's
      int s = int(rng() % 3), p = int(rng() % 3);
      std::vector<int> as(s), bs(p);
      for (int& v : as) v = int(rng() % q.n);
      for (int& v : bs) v = int(rng() % q.n);
      int alpha = Z[rng() % Z.size()];
      for (int b_target = 0; b_target < q.n; ++b_target) {
        std::vector<int> full = as;
        full.push_back(alpha);
        full.insert(full.end(), ys.begin(), ys.end());
        full.insert(full.end(), bs.begin(), bs.end());
        std::vector<int> cut(ys.begin(), ys.end());
        cut.insert(cut.end(), bs.begin(), bs.end());
        CHECK(fold_tower(q, full, b_target) == fold_tower(q, cut, b_target));
      }
    }
  }
}

TEST_CASE("orbit-insensitive chains for abelian groups") {
  // stu premise over two r-invariant subsets of the gap example, then the
  // long-chain identity on sampled chains
  QuadraticSet q = gap12();
  std::vector<int> Z = {0, 2};      // {a, c}
  std::vector<int> Y = {1, 3};      // {b, d}
  bool premise = true;
  for (int alpha : Z)
    for (int y : Y)
      for (int z : Z)
        if (q.lact(q.lact(alpha, y), z) != q.lact(y, z)) premise = false;
  REQUIRE(premise);
  std::mt19937 rng(17);
  for (int trial = 0; trial < 500; ++trial) {
    int k = 1 + int(rng() % 4);
    std::vector<int> ys(k);
    for (int& y : ys) y = Y[rng() % Y.size()];
    int alpha = Z[rng() % Z.size()], z = Z[rng() % Z.size()];
    std::vector<int> with_alpha;
    with_alpha.push_back(alpha);
    with_alpha.insert(with_alpha.end(), ys.begin(), ys.end());
    std::vector<int> chain_with = with_alpha, chain_without = ys;
    CHECK(fold_tower(q, chain_with, z) == fold_tower(q, chain_without, z));
  }
}
