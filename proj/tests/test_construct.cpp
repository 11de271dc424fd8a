#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "test_util.hpp"
#include "ybe/construct.hpp"
#include "ybe/enumerate.hpp"
#include "ybe/group.hpp"
#include "ybe/retract.hpp"

using namespace ybe;
using ybe::test::gap12;
using ybe::test::jump26;
using ybe::test::three_element;

TEST_CASE("trivial solution") {
  CHECK(mpl(trivial_solution(1)) == 0);
  CHECK(mpl(trivial_solution(2)) == 1);
  CHECK(yb_group(trivial_solution(5)).is_trivial());
  CHECK_THROWS_AS(trivial_solution(0), std::invalid_argument);
}

TEST_CASE("trivial extension") {
  CHECK(trivial_extension(trivial_solution(2), trivial_solution(3)) ==
        trivial_solution(5));
  QuadraticSet q = trivial_extension(three_element(), trivial_solution(1));
  CHECK(mpl(q) == 2);  // max(mpl, 1)
  CHECK(mpl(trivial_extension(trivial_solution(1), trivial_solution(1))) == 1);

  // |Gcal(Q1 nat0 Q2)| = |Gcal(Q1)| * |Gcal(Q2)|
  QuadraticSet a = three_element(), b = gi_X(3);
  CHECK(yb_group(trivial_extension(a, b)).order() ==
        yb_group(a).order() * yb_group(b).order());
}

TEST_CASE("stu union") {
  // both actions trivial: equals the trivial extension
  StuActions none;
  StuResult triv = stu_union(trivial_solution(2), trivial_solution(3), none);
  CHECK(triv.is_solution);
  CHECK(triv.set == trivial_extension(trivial_solution(2), trivial_solution(3)));

  // the three-element solution as trivial(2) nat trivial(1)
  StuActions act;
  act.a_on_b.assign(2, Permutation(1));
  act.b_on_a = {Permutation::from_cycles(2, {{0, 1}})};
  StuResult three = stu_union(trivial_solution(2), trivial_solution(1), act);
  CHECK(three.is_solution);
  CHECK(three.set == three_element());
  CHECK(mpl(three.set) == 2);

  // jump fixture reassembled from its parts and cross actions
  QuadraticSet z = jump26();
  std::vector<int> xs, ys;
  for (int i = 0; i < 16; ++i) xs.push_back(i);
  for (int i = 16; i < 26; ++i) ys.push_back(i);
  QuadraticSet qx = restrict(z, xs), qy = restrict(z, ys);
  StuActions jact;
  for (int i = 0; i < 16; ++i) {
    std::vector<int> img(10);
    for (int j = 0; j < 10; ++j) img[j] = z.lact(i, 16 + j) - 16;
    jact.a_on_b.push_back(Permutation(img));
  }
  for (int j = 0; j < 10; ++j) {
    std::vector<int> img(16);
    for (int i = 0; i < 16; ++i) img[i] = z.lact(16 + j, i);
    jact.b_on_a.push_back(Permutation(img));
  }
  StuResult jr = stu_union(qx, qy, jact);
  CHECK(jr.is_solution);
  CHECK(jr.set == z);
  CHECK(mpl(jr.set) == 4);

  // malformed and law-violating inputs are distinct errors
  StuActions bad;
  bad.a_on_b.assign(2, Permutation(2));  // wrong degree
  CHECK_THROWS_AS(stu_union(trivial_solution(2), trivial_solution(1), bad),
                  std::invalid_argument);
}

TEST_CASE("stu decomposition check") {
  QuadraticSet gap = gap12();
  auto parts = orbits(yb_group(gap)).orbits;
  CHECK(static_cast<bool>(is_stu_decomposition(gap, parts)));

  std::vector<int> all(gap.n);
  std::iota(all.begin(), all.end(), 0);
  CHECK(static_cast<bool>(is_stu_decomposition(gap, {all})));

  // mutated union violating stu: Y_2 with a top element acting by a
  // permutation that is not an automorphism of Y_2
  QuadraticSet broken = from_left_action(
      {Permutation::from_cycles(5, {{2, 3}}), Permutation::from_cycles(5, {{2, 3}}),
       Permutation::from_cycles(5, {{0, 1}}), Permutation::from_cycles(5, {{0, 1}}),
       Permutation::from_cycles(5, {{0, 2}})});
  auto chk = is_stu_decomposition(broken, {{0, 1, 2, 3}, {4}});
  CHECK_FALSE(static_cast<bool>(chk));
  CHECK_FALSE(chk.witness.empty());
}

TEST_CASE("extension by an automorphism") {
  QuadraticSet three =
      extend_by_automorphism(trivial_solution(2), Permutation::from_cycles(2, {{0, 1}}));
  CHECK(three == three_element());

  QuadraticSet id_ext = extend_by_automorphism(three_element(), Permutation(3));
  CHECK(mpl(id_ext) == 2);  // tau in Gcal: no increase

  CHECK_THROWS_AS(
      extend_by_automorphism(three_element(), Permutation::from_cycles(3, {{0, 2}})),
      std::invalid_argument);

  // beautiful steps: X_{m+1} = Y_m nat {xi} with tau = sigma_m
  for (int m = 2; m <= 6; ++m) {
    QuadraticSet x = extend_by_automorphism(gi_Y(m - 1), gi_sigma(m - 1));
    CHECK(mpl(x) == m);
  }
}

TEST_CASE("canonical doubling") {
  CHECK(canonical_doubling(trivial_solution(1)) == three_element());

  QuadraticSet d3 = canonical_doubling(three_element());
  CHECK(d3.n == 7);
  CHECK(mpl(d3) == 3);
  CHECK(yb_group(d3).order() == BigUint(8));

  for (const QuadraticSet& q : {trivial_solution(2), three_element(), gi_X(3)}) {
    QuadraticSet z = canonical_doubling(q);
    CHECK(z.n == 2 * q.n + 1);
    BigUint expect = BigUint(2) * yb_group(q).order() * yb_group(q).order();
    CHECK(yb_group(z).order() == expect);
  }
}

TEST_CASE("wreath product") {
  QuadraticSet w = wreath_product(trivial_solution(3), trivial_solution(1));
  CHECK(w.n == 4);
  CHECK(mpl(w) == 1);  // 1 + 1 - 1

  QuadraticSet z = wreath_product(three_element(), three_element());
  CHECK(z.n == 12);
  CHECK(mpl(z) == 3);
  CHECK(yb_group(z).order() == BigUint(16));  // 2^3 * 2

  QuadraticSet z2 = wreath_product(three_element(), gi_X(3));
  CHECK(mpl(z2) == 4);
  BigUint expect = BigUint::pow(yb_group(three_element()).order(), 5) *
                   yb_group(gi_X(3)).order();
  CHECK(yb_group(z2).order() == expect);

  CHECK_THROWS_AS(wreath_product(gi_X(7), gi_X(7)), std::length_error);
}

TEST_CASE("the sigma_m / Y_m / X_m family") {
  CHECK(format_cycles(gi_sigma(1)) == "(x1 x2)");
  CHECK(format_cycles(gi_sigma(2)) == "(x1 x3 x2 x4)");
  CHECK(gi_sigma(3) ==
        Permutation::from_cycles(8, {{0, 4, 2, 6, 1, 5, 3, 7}}));

  CHECK(gi_X(2) == three_element());
  for (int m = 1; m <= 7; ++m) {
    QuadraticSet x = gi_X(m);
    CHECK(x.n == (1 << (m - 1)) + 1);
    CHECK(mpl(x) == m);
  }
  for (int m = 1; m <= 5; ++m) CHECK(gi_Y(m).n == (1 << m));

  // Ret(X_{m+1}) is isomorphic to X_m; the canonical class map is a witness
  for (int m = 1; m <= 6; ++m) {
    QuadraticSet quo = retract(gi_X(m + 1)).quotient;
    QuadraticSet expect = gi_X(m);
    quo.labels.clear();
    expect.labels.clear();
    CHECK(quo == expect);
  }
}

TEST_CASE("easy family") {
  CHECK(easy_family(1) == trivial_solution(2));
  QuadraticSet e2 = easy_family(2);
  CHECK(e2 == three_element());
  CHECK(mpl(e2) == 2);

  QuadraticSet e3 = easy_family(3);
  CHECK(e3.n == 7);
  CHECK(format_cycles(left_perm(e3, 6)) == "(x1 x4)(x2 x5)(x3 x6)");
  CHECK(mpl(e3) == 3);

  for (int m = 2; m <= 5; ++m) {
    QuadraticSet e = easy_family(m);
    CHECK(e.n == (1 << m) - 1);
    CHECK(mpl(e) == m);
  }
}

TEST_CASE("abelian mpl-2 construction") {
  CHECK(abelian_mpl2({2}) == three_element());

  QuadraticSet q = abelian_mpl2({2, 2});
  CHECK(q.n == 6);
  CHECK(mpl(q) == 2);
  CHECK(abelian_invariants(yb_group(q)) == std::vector<std::uint64_t>{2, 2});

  for (const auto& invs :
       std::vector<std::vector<std::uint64_t>>{{2}, {3}, {2, 2}, {2, 4}, {6}}) {
    QuadraticSet s = abelian_mpl2(invs);
    CHECK(mpl(s) == 2);
    PermGroup g = yb_group(s);
    CHECK(g.is_abelian());
    CHECK(abelian_invariants(g) == invs);
  }
  CHECK_THROWS_AS(abelian_mpl2({}), std::invalid_argument);
  CHECK_THROWS_AS(abelian_mpl2({1}), std::invalid_argument);
}

TEST_CASE("ring construction") {
  QuadraticSet t = linear_solution({4, 1, 1});
  CHECK(t == trivial_solution(4));
  CHECK(mpl(t) == 1);

  QuadraticSet q = linear_solution({4, 3, 1});
  CHECK(format_cycles(left_perm(q, 0)) == "(x2 x4)");  // x -> 3x mod 4
  CHECK(mpl(q) == 2);

  CHECK(linear_obstruction({5, 2, 1}) == 1);  // (1-2)^2 = 1 mod 5
  CHECK_THROWS_AS(linear_solution({5, 2, 1}), std::invalid_argument);
  CHECK_THROWS_AS(linear_obstruction({6, 3, 1}), std::invalid_argument);

  // validity <=> all translations commute, over every unit of Z/N, N <= 16
  for (std::uint64_t N = 2; N <= 16; ++N)
    for (std::uint64_t w = 1; w < N; ++w) {
      if (std::gcd(w, N) != 1) continue;
      bool valid = !linear_obstruction({N, w, 1}).has_value();
      std::vector<Permutation> rows;
      for (std::uint64_t a = 0; a < N; ++a) {
        std::vector<int> img(N);
        for (std::uint64_t x = 0; x < N; ++x)
          img[x] = int((w * x + (N + 1 - w) % N * a) % N);
        rows.push_back(Permutation(img));
      }
      bool commute = true;
      for (const auto& p : rows)
        for (const auto& s : rows)
          if (compose(p, s) != compose(s, p)) commute = false;
      QuadraticSet cand = from_left_action(rows);
      bool solution = classify(cand).is_square_free_solution();
      CHECK(valid == commute);
      CHECK(valid == solution);
      if (valid) CHECK(mpl(cand) == (w == 1 ? 1 : 2));
    }

  QuadraticSet rank2 = linear_solution({4, 3, 2});
  CHECK(rank2.n == 16);
  CHECK(mpl(rank2) == 2);
}

TEST_CASE("semidirect extension") {
  StuResult triv = semidirect_extension(trivial_solution(2), trivial_solution(2),
                                        {Permutation(2), Permutation(2)});
  CHECK(triv.is_solution);
  CHECK(triv.set == trivial_solution(4));

  StuResult three = semidirect_extension(
      trivial_solution(2), trivial_solution(1),
      {Permutation::from_cycles(2, {{0, 1}})});
  CHECK(three.is_solution);
  CHECK(three.set == three_element());

  // action by a non-automorphism fails the braid check with a witness
  StuResult bad = semidirect_extension(
      three_element(), trivial_solution(1),
      {Permutation::from_cycles(3, {{0, 2}})});
  CHECK_FALSE(bad.is_solution);
  CHECK(bad.flags.first_witness.count("braided") == 1);

  // |Gcal(Z)| divides |Gcal1| * |Gcal2| when the extension is a solution
  StuResult s = semidirect_extension(
      trivial_solution(2), trivial_solution(1),
      {Permutation::from_cycles(2, {{0, 1}})});
  std::uint64_t prod = (yb_group(trivial_solution(2)).order() *
                        yb_group(trivial_solution(1)).order() * BigUint(2))
                           .to_u64();
  CHECK(prod % yb_group(s.set).order().to_u64() == 0);
}

TEST_CASE("every plain constructor output is a solution") {
  CHECK(is_square_free_solution(trivial_solution(3)));
  CHECK(is_square_free_solution(trivial_extension(three_element(), gi_X(3))));
  CHECK(is_square_free_solution(canonical_doubling(three_element())));
  CHECK(is_square_free_solution(wreath_product(three_element(), trivial_solution(2))));
  CHECK(is_square_free_solution(gi_X(5)));
  CHECK(is_square_free_solution(easy_family(4)));
  CHECK(is_square_free_solution(abelian_mpl2({2, 3})));
  CHECK(is_square_free_solution(linear_solution({9, 4, 1})));
}

TEST_CASE("theorem B bound on stu unions of fixtures") {
  // two-part stu unions with both parts of positive level and abelian
  // Gcal(Z): mpl(Z) <= mpl(X1) + mpl(X2)
  QuadraticSet gap = gap12();
  std::vector<int> abcd = {0, 1, 2, 3}, xs8 = {4, 5, 6, 7, 8, 9, 10, 11};
  REQUIRE(static_cast<bool>(is_stu_decomposition(gap, {abcd, xs8})));
  REQUIRE(yb_group(gap).is_abelian());
  auto m1 = mpl(restrict(gap, abcd)), m2 = mpl(restrict(gap, xs8)), mz = mpl(gap);
  REQUIRE((m1 && m2 && mz));
  CHECK(*m1 == 2);
  CHECK(*m2 == 1);
  CHECK(*mz <= *m1 + *m2);  // 3 <= 3, attained

  QuadraticSet z = jump26();
  std::vector<int> xs, ys;
  for (int i = 0; i < 16; ++i) xs.push_back(i);
  for (int i = 16; i < 26; ++i) ys.push_back(i);
  auto mx = mpl(restrict(z, xs)), my = mpl(restrict(z, ys)), mj = mpl(z);
  REQUIRE((mx && my && mj));
  CHECK(*mx == 2);
  CHECK(*my == 2);
  CHECK(*mj == *mx + *my);  // the jump example attains the bound
}
