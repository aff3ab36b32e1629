#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lz/model.hpp"
#include "oracles.hpp"

using namespace lz;
using Cx = std::complex<double>;

TEST_CASE("hamiltonian entries") {
  LZParams p;  // v = pi, delta = 1, hbar = 1
  const Matrix2c h0 = hamiltonian(0.0, p);
  CHECK(h0(0, 0) == Cx(0.0));
  CHECK(h0(0, 1) == Cx(1.0));
  CHECK(h0(1, 0) == Cx(1.0));

  LZParams free{M_PI, 0.0, 1.0};
  const Matrix2c h = hamiltonian(2.0, free);
  CHECK(h(0, 0) == Cx(2.0 * M_PI));
  CHECK(h(1, 1) == Cx(-2.0 * M_PI));
  CHECK(h(0, 1) == Cx(0.0));

  const Matrix2c h1 = hamiltonian(1.0, p);
  CHECK(h1(0, 0) == Cx(M_PI));
  CHECK(h1(0, 1) == Cx(1.0));
}

TEST_CASE("hamiltonian is Hermitian") {
  LZParams p{2.7, 0.4, 1.0};
  for (double t : {-11.0, -0.5, 0.0, 3.0, 42.0}) {
    const Matrix2c h = hamiltonian(t, p);
    CHECK(oracles::max_abs_diff(h, Matrix2c(h.adjoint())) == 0.0);
  }
}

TEST_CASE("instantaneous energies") {
  LZParams p;
  const auto [lo0, hi0] = instantaneous_energies(0.0, p);
  CHECK(lo0 == -p.delta);
  CHECK(hi0 == p.delta);
  CHECK(hi0 - lo0 == 2.0 * p.delta);  // minimal gap

  LZParams free{M_PI, 0.0, 1.0};
  const auto [lo, hi] = instantaneous_energies(-3.0, free);
  CHECK(hi == doctest::Approx(3.0 * M_PI).epsilon(1e-15));
  CHECK(lo == doctest::Approx(-3.0 * M_PI).epsilon(1e-15));

  const auto [lo1, hi1] = instantaneous_energies(1.0, p);
  CHECK(hi1 == doctest::Approx(std::sqrt(M_PI * M_PI + 1.0)).epsilon(1e-15));
  CHECK(lo1 == -hi1);
}

TEST_CASE("energies are the eigenvalues of H(t)") {
  LZParams p{1.7, 0.9, 1.0};
  for (double t : {-2.0, -0.1, 0.0, 0.7, 5.0}) {
    const Matrix2c h = hamiltonian(t, p);
    // closed-form 2x2 eigenvalues of [[a, b], [b, -a]]
    const double a = h(0, 0).real(), b = h(0, 1).real();
    const double e = std::sqrt(a * a + b * b);
    const auto [lo, hi] = instantaneous_energies(t, p);
    CHECK(std::abs(hi - e) < 1e-13);
    CHECK(std::abs(lo + e) < 1e-13);
  }
}

TEST_CASE("exact transition probability") {
  LZParams diabatic{M_PI, 0.0, 1.0};
  CHECK(exact_transition_probability(diabatic) == 1.0);

  // exp(-pi delta^2 / v) evaluated at the paper's default parameters
  LZParams p;
  CHECK(exact_transition_probability(p) == doctest::Approx(0.36787944117144232).epsilon(1e-15));

  LZParams d2{M_PI, 2.0, 1.0};
  CHECK(exact_transition_probability(d2) == doctest::Approx(std::exp(-4.0)).epsilon(1e-14));
}

TEST_CASE("transition probability is monotone in delta and v") {
  for (double v : {0.5, 1.0, M_PI, 8.0}) {
    double prev = 2.0;
    for (double d : {0.0, 0.25, 0.5, 1.0, 2.0, 4.0}) {
      const double pr = exact_transition_probability({v, d, 1.0});
      CHECK(pr < prev);
      prev = pr;
    }
  }
  for (double d : {0.25, 1.0, 3.0}) {
    double prev = 0.0;
    for (double v : {0.5, 1.0, M_PI, 8.0, 64.0}) {
      const double pr = exact_transition_probability({v, d, 1.0});
      CHECK(pr > prev);
      prev = pr;
    }
  }
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(LZParams({-1.0, 1.0, 1.0}).validate(), std::invalid_argument);
  CHECK_THROWS_AS(LZParams({1.0, -1.0, 1.0}).validate(), std::invalid_argument);
  CHECK_THROWS_AS(LZParams({1.0, 1.0, 0.0}).validate(), std::invalid_argument);
  CHECK_NOTHROW(LZParams({1.0, 0.0, 2.0}).validate());
}
