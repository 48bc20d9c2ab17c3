#include <doctest.h>

#include <cmath>

#include "conjd/rand_oracle.hpp"

using conjd::Box;
using conjd::OracleOptions;

TEST_SUITE("rand_oracle") {
  TEST_CASE("samples are deterministic and distinct") {
    const auto a = conjd::sample_G(2, 42, 7);
    const auto b = conjd::sample_G(2, 42, 7);
    const auto c = conjd::sample_G(2, 42, 8);
    CHECK(a.coeffs == b.coeffs);
    CHECK(a.coeffs != c.coeffs);
    CHECK(a.coeffs.size() == 3);
    CHECK(a.index == 7);
    for (double v : a.coeffs) CHECK((v >= -1 && v < 1));
  }

  TEST_CASE("coefficient moments") {
    double sum = 0, squares = 0;
    const int samples = 1'000'000;
    for (int i = 0; i < samples; ++i) {
      const double v = conjd::sample_G(0, 3, static_cast<std::uint64_t>(i)).coeffs[0];
      sum += v;
      squares += v * v;
    }
    CHECK(std::abs(sum / samples) <= 3 * (1 / std::sqrt(3.0)) / 1000);
    CHECK(squares / samples == doctest::Approx(1.0 / 3).epsilon(0.01));
  }

  TEST_CASE("root finding") {
    const std::vector<double> cubic{0, -2, 0, 1};  // x^3 - 2x
    auto roots = conjd::real_roots_in(cubic, -5, 5, 1e-12);
    REQUIRE(roots.size() == 3);
    CHECK(roots[0] == doctest::Approx(-std::sqrt(2.0)));
    CHECK(roots[1] == doctest::Approx(0).epsilon(1e-9));
    CHECK(roots[2] == doctest::Approx(std::sqrt(2.0)));
    roots = conjd::real_roots_in(cubic, 0.5, 5, 1e-12);
    CHECK(roots.size() == 1);
    const std::vector<double> none{1, 0, 1};
    CHECK(conjd::real_roots_in(none, -10, 10, 1e-9).empty());
    // (x - 0.1)(x - 0.2)(x - 0.3)(x + 2)
    const std::vector<double> close{-0.012, 0.214, -1.09, 1.4, 1};
    roots = conjd::real_roots_in(close, -10, 10, 1e-12);
    REQUIRE(roots.size() == 4);
    CHECK(roots[0] == doctest::Approx(-2));
    CHECK(roots[1] == doctest::Approx(0.1));
    CHECK(roots[2] == doctest::Approx(0.2));
    CHECK(roots[3] == doctest::Approx(0.3));
    const std::vector<double> constant{0.5};
    CHECK(conjd::real_roots_in(constant, -1, 1, 1e-9).empty());
    CHECK_THROWS_AS(conjd::real_roots_in(cubic, 1, 0, 1e-9), std::invalid_argument);
  }

  TEST_CASE("expected N_k examples") {
    const auto band = conjd::expected_Nk(2, 1, Box::parse("-1/4,1/4"), OracleOptions{200000, 1, 1e-9, 1});
    CHECK(std::abs(band.value - 37.0 / 288) <= 3 * band.std_error);
    CHECK(band.method == conjd::DensityMethod::kRandomPolynomial);
    const auto diagonal = conjd::expected_Nk(2, 2, Box::parse("0,1/1000;0,1/1000"), OracleOptions{100000, 1, 1e-9, 1});
    CHECK(diagonal.value < 1e-3);
    CHECK_THROWS_WITH_AS(conjd::expected_Nk(2, 1, Box::parse("0,1"), OracleOptions{99, 1, 1e-9, 1}), "insufficient trials",
                         std::invalid_argument);
    CHECK_THROWS_AS(conjd::expected_Nk(2, 3, std::nullopt, OracleOptions{1000, 1, 1e-9, 1}), std::invalid_argument);
    CHECK_THROWS_AS(conjd::expected_Nk(2, 2, Box::parse("0,1"), OracleOptions{1000, 1, 1e-9, 1}), std::invalid_argument);
  }

  TEST_CASE("distribution properties") {
    const auto d = conjd::Nk_distribution(2, 2, Box::parse("-10,10;-10,10"), OracleOptions{50000, 2, 1e-9, 1});
    double mass = 0, weighted_volume = 0;
    for (const auto& [m, p] : d.probabilities()) mass += p;
    for (const auto& [m, v] : d.volumes()) weighted_volume += static_cast<double>(m) * v;
    CHECK(mass == doctest::Approx(1.0));
    CHECK(d.histogram.count(1) == 0);
    for (const auto& [m, count] : d.histogram) CHECK(m <= 2);
    CHECK(weighted_volume == doctest::Approx(8 * d.mean()).epsilon(1e-12));

    const auto three = conjd::Nk_distribution(3, 2, std::nullopt, OracleOptions{20000, 2, 1e-9, 1});
    for (const auto& [m, count] : three.histogram) CHECK((m == 0 || m == 2 || m == 6));
  }

  TEST_CASE("full space expectation matches the box proxy") {
    const OracleOptions options{20000, 4, 1e-9, 1};
    const auto full = conjd::expected_Nk(3, 1, std::nullopt, options);
    // roots of these polynomials can be arbitrarily large; a wide box catches nearly all
    const auto wide = conjd::expected_Nk(3, 1, Box::parse("-1000000,1000000"), options);
    CHECK(full.value >= wide.value);
    CHECK(full.value - wide.value < 0.01);
  }

  TEST_CASE("tolerance changes move the mean by less than one standard error") {
    struct Case {
      int n, k;
      const char* box;
    };
    for (const auto& c : std::vector<Case>{{2, 1, "-1/4,1/4"}, {2, 2, "-2,2;-2,2"}, {3, 2, "-2,2;-2,2"}, {4, 1, "-1,3"}}) {
      const auto base = conjd::expected_Nk(c.n, c.k, Box::parse(c.box), OracleOptions{50000, 6, 1e-9, 1});
      for (double tol : {1e-8, 1e-10}) {
        const auto other = conjd::expected_Nk(c.n, c.k, Box::parse(c.box), OracleOptions{50000, 6, tol, 1});
        CHECK(std::abs(other.value - base.value) < base.std_error);
      }
    }
  }

  TEST_CASE("worker count does not change the histogram") {
    const OracleOptions one{40000, 8, 1e-9, 1}, many{40000, 8, 1e-9, 4};
    CHECK(conjd::Nk_distribution(3, 2, Box::parse("-2,2;-2,2"), one).histogram ==
          conjd::Nk_distribution(3, 2, Box::parse("-2,2;-2,2"), many).histogram);
  }
}
