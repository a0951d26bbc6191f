#include <algorithm>
#include <map>
#include <numeric>
#include <random>

#include "doctest.h"
#include "hecke/algebra.hpp"
#include "hecke/arith.hpp"
#include "hecke/error.hpp"
#include "oracles.hpp"

using namespace hecke;

namespace {

AlgebraElement T(std::int64_t l, std::int64_t m, std::int64_t level) { return AlgebraElement::basis(level, l, m); }

// Brute-force multiplicities: group products by left coset with same_left_coset,
// then count the pairs landing in the coset of a fixed representative of w.
AlgebraElement brute_multiply(std::int64_t level, std::pair<std::int64_t, std::int64_t> u,
                              std::pair<std::int64_t, std::int64_t> v) {
  auto ru = double_coset_reps(level, u.first, u.second);
  auto rv = double_coset_reps(level, v.first, v.second);
  std::vector<Matrix2> prods;
  for (auto& x : ru)
    for (auto& y : rv) prods.push_back(x * y);
  AlgebraElement out(level);
  std::vector<bool> seen_label_rep(prods.size(), false);
  std::map<std::pair<std::int64_t, std::int64_t>, Matrix2> chosen;
  for (auto& p : prods) {
    auto g = p.content();
    chosen.emplace(std::make_pair(g, p.det() / g), p);
  }
  for (auto& [label, xi] : chosen) {
    std::int64_t count = 0;
    for (auto& p : prods)
      if (same_left_coset(p, xi, level)) ++count;
    out.add(label, count);
  }
  return out;
}

}  // namespace

TEST_CASE("left coset representatives") {
  auto r = left_coset_reps(1, 2);
  CHECK(r.size() == 3);
  CHECK(std::find(r.begin(), r.end(), Matrix2{2, 0, 0, 1}) != r.end());
  CHECK(std::find(r.begin(), r.end(), Matrix2{1, 1, 0, 2}) != r.end());
  auto r2 = left_coset_reps(2, 2);
  CHECK(r2 == std::vector<Matrix2>{{1, 0, 0, 2}, {1, 1, 0, 2}});
  CHECK(left_coset_reps(1, 4).size() == 7);
  for (std::int64_t N : {1, 2, 3, 5})
    for (std::int64_t n = 1; n <= 12; ++n)
      if (std::gcd(n, N) == 1) CHECK(left_coset_reps(N, n).size() == oracle::sigma(1, n).get_si());
  CHECK(left_coset_reps(3, 3).size() == 3);
  // Pairwise distinct cosets.
  for (std::int64_t N : {1, 2, 3})
    for (std::int64_t n = 1; n <= 8; ++n) {
      auto reps = left_coset_reps(N, n);
      for (std::size_t i = 0; i < reps.size(); ++i)
        for (std::size_t j = 0; j < reps.size(); ++j) CHECK(same_left_coset(reps[i], reps[j], N) == (i == j));
    }
}

TEST_CASE("same_left_coset and labels") {
  CHECK_FALSE(same_left_coset({1, 0, 0, 2}, {1, 1, 0, 2}, 1));
  CHECK(same_left_coset({2, 0, 0, 2}, Matrix2{2, 0, 0, 2} * Matrix2{1, 1, 0, 1}, 1));
  CHECK_THROWS_AS(same_left_coset({1, 0, 0, 2}, {1, 0, 0, 3}, 1), Error);
  CHECK(double_coset_label({2, 0, 0, 2}, 1) == std::make_pair<std::int64_t, std::int64_t>(2, 2));
  CHECK(double_coset_label({1, 1, 0, 4}, 1) == std::make_pair<std::int64_t, std::int64_t>(1, 4));
  CHECK(double_coset_label({2, 2, 0, 2}, 1) == std::make_pair<std::int64_t, std::int64_t>(2, 2));
  CHECK(double_coset_label({1, 0, 0, 2}, 2) == std::make_pair<std::int64_t, std::int64_t>(1, 2));
  CHECK_THROWS_AS(double_coset_label({2, 0, 0, 1}, 2), Error);
  CHECK_THROWS_AS(double_coset_label({1, 0, 1, 1}, 2), Error);

  std::mt19937 rng(3);
  std::uniform_int_distribution<int> pick(0, 3);
  for (std::int64_t N : {1, 2, 3}) {
    std::vector<Matrix2> gens{{1, 1, 0, 1}, {1, -1, 0, 1}, {1, 0, N, 1}, {1, 0, -N, 1}};
    auto word = [&]() {
      Matrix2 g;
      for (int i = 0; i < 6; ++i) g = g * gens[pick(rng)];
      return g;
    };
    for (std::int64_t n : {2, 4, 6}) {
      for (const auto& a : left_coset_reps(N, n)) {
        auto g1 = word(), g2 = word();
        CHECK(in_gamma0(g1, N));
        CHECK(same_left_coset(g1 * a, a, N));
        CHECK(double_coset_label(g1 * a * g2, N) == double_coset_label(a, N));
      }
    }
  }
}

TEST_CASE("Hecke ring multiplication") {
  auto t2 = t_n(2, 1);
  auto sq = algebra_multiply(t2, t2);
  CHECK(sq == T(1, 4, 1) + T(2, 2, 1) * 3);
  CHECK(t_n(4, 1) == T(1, 4, 1) + T(2, 2, 1));
  CHECK(algebra_multiply(t2, t_n(3, 1)) == T(1, 6, 1));
  CHECK(t_n(12, 2) == T(1, 12, 2));
  CHECK(t_n(7, 5) == T(1, 7, 5));
  auto one = T(1, 1, 3);
  auto u = t_n(6, 3) + T(2, 2, 3) * 2;
  CHECK(algebra_multiply(u, one) == u);
  // p | N: T(1,p)^2 = T(1,p^2)
  CHECK(algebra_multiply(t_n(2, 2), t_n(2, 2)) == T(1, 4, 2));
  CHECK(parse_algebra_element("T(1,4)+3*T(2,2)", 1) == sq);
  CHECK(parse_algebra_element("T2", 1) == t2);
  CHECK_THROWS_AS(parse_algebra_element("T(2,2)", 2), Error);
  CHECK_THROWS_AS(parse_algebra_element("S2", 1), Error);
}

TEST_CASE("multiplicities agree with explicit left-coset grouping") {
  for (std::int64_t N : {1, 2, 3})
    for (auto u : std::vector<std::pair<std::int64_t, std::int64_t>>{{1, 2}, {1, 3}, {1, 4}, {2, 2}})
      for (auto v : std::vector<std::pair<std::int64_t, std::int64_t>>{{1, 2}, {1, 3}, {1, 6}}) {
        if (std::gcd(u.first, N) != 1) continue;
        CHECK(algebra_multiply(T(u.first, u.second, N), T(v.first, v.second, N)) == brute_multiply(N, u, v));
      }
}

TEST_CASE("commutativity on generators") {
  for (std::int64_t N : {1, 2, 3}) {
    std::vector<AlgebraElement> gens;
    for (std::int64_t p : {2, 3, 5, 7}) {
      gens.push_back(t_n(p, N));
      if (N % p) gens.push_back(T(p, p, N));
    }
    for (auto& x : gens)
      for (auto& y : gens) CHECK(algebra_multiply(x, y) == algebra_multiply(y, x));
  }
}
