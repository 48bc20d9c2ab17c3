#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "conjd/real_roots.hpp"

using conjd::AlgebraicNumber;
using conjd::Box;
using conjd::IntPolynomial;
using conjd::IsolatingInterval;
using conjd::Rational;

namespace {

IntPolynomial random_poly(std::mt19937_64& rng, int degree, long h) {
  std::uniform_int_distribution<long> coeff(-h, h);
  std::vector<conjd::Integer> c;
  for (int i = 0; i < degree; ++i) c.emplace_back(coeff(rng));
  long lead = 0;
  while (lead == 0) lead = coeff(rng);
  c.emplace_back(lead);
  return IntPolynomial(c);
}

bool contains(const IsolatingInterval& iv, double x) { return iv.lo.get_d() <= x && x <= iv.hi.get_d(); }

std::uint64_t falling(std::uint64_t m, int k) {
  std::uint64_t r = 1;
  for (int i = 0; i < k; ++i) r *= m >= static_cast<std::uint64_t>(i) ? m - static_cast<std::uint64_t>(i) : 0;
  return r;
}

}  // namespace

TEST_SUITE("real_roots") {
  TEST_CASE("sturm count examples") {
    CHECK(sturm_count(IntPolynomial({-2, 0, 1}), 0, 2) == 1);
    CHECK(sturm_count(IntPolynomial({-2, 0, 1}), -2, 2) == 2);
    CHECK(sturm_count(IntPolynomial({1, 0, 1}), -10, 10) == 0);
    // half-open (a, b]
    CHECK(sturm_count(IntPolynomial({-1, 1}), 0, 1) == 1);
    CHECK(sturm_count(IntPolynomial({-1, 1}), 1, 2) == 0);
    CHECK_THROWS_AS(sturm_count(IntPolynomial(), 0, 1), std::invalid_argument);
    CHECK_THROWS_AS(sturm_count(IntPolynomial({1, 1}), 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(sturm_count(IntPolynomial({1, 1}), 2, 1), std::invalid_argument);
  }

  TEST_CASE("isolation examples") {
    auto roots = isolate_real_roots(IntPolynomial({0, -2, 0, 1}));
    REQUIRE(roots.size() == 3);
    CHECK(contains(roots[0], -std::sqrt(2.0)));
    CHECK(roots[1].is_point());
    CHECK(roots[1].lo == 0);
    CHECK(contains(roots[2], std::sqrt(2.0)));
    CHECK(isolate_real_roots(IntPolynomial({1, 1, 1})).empty());
    roots = isolate_real_roots(IntPolynomial({-1, 1, 1}));
    REQUIRE(roots.size() == 2);
    CHECK(contains(roots[0], (-1 - std::sqrt(5.0)) / 2));
    CHECK(contains(roots[1], (-1 + std::sqrt(5.0)) / 2));
    CHECK_THROWS(isolate_real_roots(IntPolynomial()));
  }

  TEST_CASE("isolation on repeated roots uses the squarefree part") {
    const IntPolynomial p = IntPolynomial({-2, 0, 1}) * IntPolynomial({-2, 0, 1}) * IntPolynomial({1, 3});
    const auto roots = isolate_real_roots(p);
    REQUIRE(roots.size() == 3);
    CHECK(roots[1].is_point());
    CHECK(roots[1].lo == Rational(-1, 3));
  }

  TEST_CASE("refine examples") {
    AlgebraicNumber a{IntPolynomial({-2, 0, 1}), {1, 2}};
    auto r = refine(a, Rational(1, 8));
    CHECK(r.interval.width() <= Rational(1, 8));
    CHECK(r.interval.lo >= Rational(11, 8));
    CHECK(r.interval.hi <= Rational(3, 2));
    CHECK(contains(r.interval, std::sqrt(2.0)));
    CHECK(r == a);

    AlgebraicNumber one{IntPolynomial({-1, 1}), {1, 1}};
    CHECK(refine(one, Rational(1, 1000)).interval.is_point());

    AlgebraicNumber phi{IntPolynomial({-1, 1, 1}), {0, 1}};
    r = refine(phi, Rational(1, 100));
    CHECK(r.interval.width() <= Rational(1, 100));
    CHECK(contains(r.interval, 0.6180339887));
  }

  TEST_CASE("exact rational roots collapse under refinement") {
    AlgebraicNumber half{IntPolynomial({-1, 2}), {0, 1}};
    CHECK(refine(half, Rational(1, 3)).interval.is_point());
    CHECK(refine(half, Rational(1, 3)).interval.lo == Rational(1, 2));
    const auto roots = isolate_real_roots(IntPolynomial({-1, 2}) * IntPolynomial({3, 1}) * IntPolynomial({-2, 0, 1}));
    int points = 0;
    for (const auto& iv : roots) points += iv.is_point() ? 1 : 0;
    CHECK(points == 2);
  }

  TEST_CASE("count_k_tuples examples") {
    CHECK(count_k_tuples(IntPolynomial({-1, -1, 1}), 2, Box::parse("-1,2;-1,2")) == 2);
    CHECK(count_k_tuples(IntPolynomial({1, 0, 1}), 1, Box::parse("-10,10")) == 0);
    CHECK(count_k_tuples(IntPolynomial({-1, -1, 1}), 2, Box::parse("0,2;0,2")) == 0);
    // closed boxes: a rational root on the boundary counts
    CHECK(count_k_tuples(IntPolynomial({-1, 1}), 1, Box::parse("1,2")) == 1);
    CHECK(count_k_tuples(IntPolynomial({-1, 1}), 1, Box::parse("0,1")) == 1);
    CHECK_THROWS(count_k_tuples(IntPolynomial({-1, 1}), 2, Box::parse("0,1;0,1")));
  }

  TEST_CASE("isolation agrees with Sturm over the Cauchy bound") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 300; ++trial) {
      const auto p = random_poly(rng, 1 + trial % 6, 9);
      const auto roots = isolate_real_roots(p);
      CHECK(static_cast<int>(roots.size()) == conjd::SturmSequence(p).real_root_count());
      Rational bound = 0;
      for (const auto& c : p.coeffs()) bound = std::max(bound, Rational(abs(c)));
      bound = 1 + bound / Rational(abs(p.leading()));
      CHECK(static_cast<int>(roots.size()) == sturm_count(p, -bound, bound));
      for (std::size_t i = 0; i + 1 < roots.size(); ++i) CHECK(roots[i].hi < roots[i + 1].lo);
      for (const auto& iv : roots)
        if (!iv.is_point()) CHECK(sturm_count(p, iv.lo, iv.hi) == 1);
    }
  }

  TEST_CASE("symmetric boxes count every ordering") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 200; ++trial) {
      const auto p = random_poly(rng, 3 + trial % 3, 6);
      const auto roots = isolate_real_roots(p);
      const int k = 1 + trial % 3;
      if (k > p.degree()) continue;
      const Box box = Box::cube(k, Rational(-3, 2), Rational(2));
      std::uint64_t inside = 0;
      for (const auto& iv : roots)
        if (compare_root(squarefree_part(p), iv, Rational(-3, 2)) >= 0 && compare_root(squarefree_part(p), iv, 2) <= 0)
          ++inside;
      const auto count = count_k_tuples(p, k, box);
      CHECK(count == falling(inside, k));
      std::uint64_t orderings = 1;
      for (int i = 2; i <= k; ++i) orderings *= static_cast<std::uint64_t>(i);
      CHECK(count % orderings == 0);
    }
  }

  TEST_CASE("N_k never exceeds n!/(n-k)!") {
    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 100; ++trial) {
      const auto p = random_poly(rng, 4, 3);
      for (int k = 1; k <= 4; ++k)
        CHECK(count_k_tuples(p, k, Box::cube(k, -5, 5)) <= falling(4, k));
    }
  }

  TEST_CASE("ordered tuple counting") {
    const std::vector<std::uint32_t> all{0b111, 0b111};
    CHECK(conjd::count_ordered_tuples(all) == 6);
    const std::vector<std::uint32_t> split{0b001, 0b110};
    CHECK(conjd::count_ordered_tuples(split) == 2);
    const std::vector<std::uint32_t> same{0b001, 0b001};
    CHECK(conjd::count_ordered_tuples(same) == 0);
  }
}
