#include <doctest.h>

#include <map>
#include <set>

#include "conjd/enumeration.hpp"
#include "conjd/real_roots.hpp"

using conjd::Box;
using conjd::EnumerationTask;
using conjd::IntPolynomial;
using conjd::Rational;

namespace {

std::uint64_t phi(int n, std::int64_t Q, int k, const char* box, unsigned threads = 1) {
  return conjd::phi_k(EnumerationTask{n, Q, k, Box::parse(box)}, threads).phi_k;
}

// Calls visit on every coefficient tuple of P(Q) for degree <= n.
template <class Visit>
void for_each_tuple(int n, std::int64_t Q, Visit visit) {
  std::vector<conjd::Integer> c(static_cast<std::size_t>(n) + 1, -Q);
  while (true) {
    visit(IntPolynomial(c));
    std::size_t pos = 0;
    while (pos < c.size() && c[pos] == Q) {
      c[pos] = -Q;
      ++pos;
    }
    if (pos == c.size()) break;
    ++c[pos];
  }
}

}  // namespace

TEST_SUITE("enumeration") {
  TEST_CASE("prime polynomials of height 1") {
    const auto primes = conjd::enumerate_prime_polynomials(2, 1);
    const std::vector<IntPolynomial> expected{{-1, 1},     {0, 1},     {1, 1},     {-1, -1, 1},
                                              {1, -1, 1}, {1, 0, 1}, {-1, 1, 1}, {1, 1, 1}};
    CHECK(primes == expected);
    CHECK(conjd::enumerate_prime_polynomials(1, 1) == std::vector<IntPolynomial>{{-1, 1}, {0, 1}, {1, 1}});
    CHECK(conjd::enumerate_prime_polynomials(2, 0).empty());
  }

  TEST_CASE("micro oracles") {
    CHECK(phi(2, 1, 2, "-10,10;-10,10") == 4);
    CHECK(phi(2, 1, 1, "-10,10") == 7);
    CHECK(phi(2, 1, 2, "0,2;0,2") == 0);
    CHECK(phi(2, 2, 1, "-1/4,1/4") == 1);
    CHECK(phi(2, 3, 2, "-2,2;-2,2") == 56);
    CHECK(phi(3, 2, 2, "-1,1/2;0,3") == 16);
    CHECK(phi(3, 2, 3, "-3,3;-3,3;-3,3") == 48);
    CHECK(phi(3, 2, 1, "1/3,2") == 79);
  }

  TEST_CASE("reducible counts") {
    CHECK(conjd::count_reducible(2, 1) == 8);
    CHECK(conjd::count_reducible(2, 2) == 36);
    CHECK(conjd::count_reducible(3, 1) == 38);
    CHECK(conjd::count_reducible(3, 2) == 240);
    CHECK(conjd::count_reducible(1, 5) == 0);
    for (std::int64_t Q = 1; Q <= 6; ++Q) {
      CHECK(conjd::count_reducible(2, Q) == conjd::count_reducible_by_sweep(2, Q));
      CHECK(conjd::count_reducible(3, Q) == conjd::count_reducible_by_sweep(3, Q));
    }
    CHECK(conjd::count_reducible(4, 1) == conjd::count_reducible_by_sweep(4, 1));
  }

  TEST_CASE("reducible sweep agrees with a direct classification") {
    for (int n : {2, 3, 4}) {
      const std::int64_t Q = n == 4 ? 1 : 2;
      std::uint64_t reducible = 0;
      for_each_tuple(n, Q, [&](const IntPolynomial& p) {
        if (p.degree() >= 2 && !is_irreducible_over_q(p)) ++reducible;
      });
      CHECK(conjd::count_reducible_by_sweep(n, Q) == reducible);
    }
  }

  TEST_CASE("task validation") {
    CHECK_THROWS_AS(conjd::phi_k(EnumerationTask{2, 1, 3, Box::cube(3, -1, 1)}), std::invalid_argument);
    CHECK_THROWS_AS(conjd::phi_k(EnumerationTask{1, 1, 1, Box::cube(1, -1, 1)}), std::invalid_argument);
    CHECK_THROWS_AS(conjd::phi_k(EnumerationTask{2, 0, 1, Box::cube(1, -1, 1)}), std::invalid_argument);
    CHECK_THROWS_AS(conjd::phi_k(EnumerationTask{2, 1, 2, Box::cube(1, -1, 1)}), std::invalid_argument);
  }

  TEST_CASE("stream completeness over the full coefficient cube") {
    for (auto [n, Q] : std::vector<std::pair<int, std::int64_t>>{{2, 1}, {2, 3}, {3, 2}, {4, 1}}) {
      const auto primes = conjd::enumerate_prime_polynomials(n, Q);
      const std::set<std::string> stream = [&] {
        std::set<std::string> s;
        for (const auto& p : primes) s.insert(p.to_string());
        return s;
      }();
      CHECK(stream.size() == primes.size());

      std::uint64_t tuples = 0, normalizable = 0, rest = 0;
      std::set<std::string> seen;
      for_each_tuple(n, Q, [&](const IntPolynomial& p) {
        ++tuples;
        if (const auto prime = normalize_to_prime(p)) {
          ++normalizable;
          seen.insert(prime->to_string());
          CHECK(stream.count(prime->to_string()) == 1);
        } else {
          ++rest;
        }
      });
      std::uint64_t expected = 1;
      for (int i = 0; i <= n; ++i) expected *= static_cast<std::uint64_t>(2 * Q + 1);
      CHECK(tuples == expected);
      CHECK(normalizable + rest == expected);
      CHECK(seen == stream);
      // each prime p is hit by +-c p for 1 <= c <= Q / H(p)
      std::uint64_t multiples = 0;
      for (const auto& p : primes) multiples += 2 * static_cast<std::uint64_t>(Q / height(p).get_si());
      CHECK(multiples == normalizable);
    }
  }

  TEST_CASE("sign symmetry of irreducible primitive polynomials") {
    std::uint64_t positive = 0, negative = 0;
    for_each_tuple(3, 2, [&](const IntPolynomial& p) {
      if (p.degree() < 1 || !is_irreducible_over_q(p) || content_and_primitive(p).content != 1) return;
      (p.leading() > 0 ? positive : negative) += 1;
    });
    CHECK(positive == negative);
    CHECK(positive == conjd::enumerate_prime_polynomials(3, 2).size());
  }

  TEST_CASE("phi agrees with summing count_k_tuples over the stream") {
    struct Case {
      int n;
      std::int64_t Q;
      int k;
      const char* box;
    };
    for (const auto& c : std::vector<Case>{{2, 3, 1, "-1/2,3/4"},
                                           {3, 2, 2, "-1,1/2;0,3"},
                                           {3, 2, 3, "-2,2;-1,1;-3,1"},
                                           {4, 1, 2, "-2,2;-2,2"},
                                           {4, 1, 1, "0,1"},
                                           {5, 1, 3, "-2,2;-2,2;-2,2"}}) {
      const Box box = Box::parse(c.box);
      std::uint64_t total = 0;
      std::map<int, std::uint64_t> histogram;
      for (const auto& p : conjd::enumerate_prime_polynomials(c.n, c.Q)) {
        const auto m = p.degree() >= c.k ? count_k_tuples(p, c.k, box) : 0;
        total += m;
        if (m > 0) histogram[static_cast<int>(m)] += 1;
      }
      const auto r = conjd::phi_k(EnumerationTask{c.n, c.Q, c.k, box}, 1);
      CHECK(r.phi_k == total);
      for (const auto& [m, count] : histogram) CHECK(r.histogram.at(m) == count);
    }
  }

  TEST_CASE("count result identities") {
    const auto r = conjd::phi_k(EnumerationTask{3, 3, 2, Box::parse("-2,2;-2,2")}, 1);
    std::uint64_t weighted = 0, primes = 0;
    for (const auto& [m, count] : r.histogram) {
      CHECK(static_cast<std::uint64_t>(m) <= conjd::max_tuples(3, 2));
      weighted += static_cast<std::uint64_t>(m) * count;
      primes += count;
    }
    CHECK(weighted == r.phi_k);
    CHECK(primes == r.prime_count);
    CHECK(r.prime_count == conjd::enumerate_prime_polynomials(3, 3).size());
    CHECK(r.reducible == conjd::count_reducible(3, 3));
  }

  TEST_CASE("monotone in Q and in the box") {
    std::uint64_t last = 0;
    for (std::int64_t Q = 1; Q <= 8; ++Q) {
      const auto v = phi(2, Q, 2, "-1,1;-2,1/2");
      CHECK(v >= last);
      last = v;
    }
    CHECK(phi(3, 3, 1, "-1/2,1/2") <= phi(3, 3, 1, "-1,1/2"));
    CHECK(phi(3, 3, 1, "-1,1/2") <= phi(3, 3, 1, "-1,1"));
    CHECK(phi(3, 2, 2, "0,1;-1,0") <= phi(3, 2, 2, "0,2;-1,0"));
  }

  TEST_CASE("full-space proxy contains every root") {
    const auto proxy = conjd::full_space_proxy(1, 3);
    std::uint64_t roots = 0;
    for (const auto& p : conjd::enumerate_prime_polynomials(3, 3)) roots += conjd::SturmSequence(p).real_root_count();
    CHECK(phi(3, 3, 1, proxy.to_string().c_str()) == roots);
  }

  TEST_CASE("result does not depend on the worker count") {
    const EnumerationTask task{3, 4, 2, Box::parse("-2,1;-1/3,2")};
    const auto one = conjd::phi_k(task, 1);
    for (unsigned threads : {2u, 4u, 16u}) {
      const auto other = conjd::phi_k(task, threads);
      CHECK(other.phi_k == one.phi_k);
      CHECK(other.histogram == one.histogram);
      CHECK(other.reducible == one.reducible);
      CHECK(other.prime_count == one.prime_count);
    }
    CHECK(conjd::count_reducible_by_sweep(3, 3, 4) == conjd::count_reducible_by_sweep(3, 3, 1));
  }
}
