#include "catch_amalgamated.hpp"

#include <cmath>
#include <fstream>
#include <random>

#include "hyperradial/numerics/quadrature.hpp"
#include "hyperradial/oracle/series_reference.hpp"
#include "hyperradial/specfun.hpp"

using namespace hyperradial;
using namespace hyperradial::specfun;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

double series(const char* f, double nu, double x) {
  return static_cast<double>(oracle::series_reference(f, nu, x, 30));
}

std::vector<double> wronskian_grid() {
  std::vector<double> xs;
  for (double x = 0.1; x <= 50.0; x *= 1.17) xs.push_back(x);
  xs.push_back(50.0);
  return xs;
}

}  // namespace

TEST_CASE("bessel_j small table", "[bessel]") {
  CHECK(bessel_j(0.0, 0.0).value == 1.0);
  CHECK(bessel_j(1.5, 0.0).value == 0.0);
  CHECK_THAT(bessel_j(0.5, pi).value, WithinAbs(0.0, 1e-12));
  CHECK_THAT(bessel_j(0.0, 2.404825557695773).value, WithinAbs(0.0, 1e-10));
  CHECK_THROWS_AS(bessel_j(0.0, -1.0), domain_error);
  CHECK_THROWS_AS(bessel_j(-0.7, 1.0), domain_error);
}

TEST_CASE("bessel_y values and divergence", "[bessel]") {
  CHECK_THAT(bessel_y(0.5, pi / 2).value, WithinAbs(0.0, 1e-12));
  CHECK(bessel_y(0.0, 1e-9).value < -10.0);
  CHECK_THROWS_AS(bessel_y(0.0, 0.0), domain_error);
  const BesselJY b = bessel_jy(1.5, 2.7);
  CHECK_THAT(b.j * b.yp - b.jp * b.y, WithinRel(2.0 / (pi * 2.7), 1e-12));
}

TEST_CASE("bessel_i and bessel_k", "[bessel]") {
  CHECK(bessel_i(0.0, 0.0).value == 1.0);
  CHECK_THAT(bessel_i(0.5, 1.0).value, WithinRel(std::sqrt(2.0 / pi) * std::sinh(1.0), 1e-13));
  CHECK_THAT(bessel_i(0.5, 1.0).value, WithinAbs(0.937674, 1e-6));
  double term = 1.0 / 2.0;  // (x/2)^2 / 2! at x = 3, k = 0
  double sum = 0.0;
  const double h2 = 2.25;
  for (int k = 0; k < 40; ++k) {
    sum += term;
    term *= h2 / ((k + 1.0) * (k + 3.0));
  }
  CHECK_THAT(bessel_i(2.0, 3.0).value, WithinRel(sum * 2.25, 1e-13));
  CHECK_THAT(bessel_k(0.5, 1.0).value, WithinRel(std::sqrt(pi / 2.0) * std::exp(-1.0), 1e-13));
  CHECK_THAT(bessel_k(0.5, 1.0).value, WithinAbs(0.461069, 1e-6));
  const double k10 = bessel_k(0.0, 10.0).value;
  CHECK(k10 > 0.0);
  CHECK(k10 < 2e-5);
  const double w = bessel_i(0.5, 1.3).value * bessel_k(1.5, 1.3).value +
                   bessel_i(1.5, 1.3).value * bessel_k(0.5, 1.3).value;
  CHECK_THAT(w, WithinRel(1.0 / 1.3, 1e-12));
  CHECK_THROWS_AS(bessel_k(0.0, 0.0), domain_error);
  CHECK_THROWS_AS(bessel_i(0.0, -2.0), domain_error);
}

TEST_CASE("bessel_i grows and bessel_k decays monotonically", "[bessel]") {
  for (double nu : {0.0, 0.5, 2.0, 7.5}) {
    double prev_i = bessel_i(nu, 0.01).value;
    double prev_k = bessel_k(nu, 0.01).value;
    for (double x = 0.05; x < 600.0; x *= 1.3) {
      const double i = bessel_i(nu, x).value;
      const double k = bessel_k(nu, x).value;
      CHECK(i > prev_i);
      CHECK(k < prev_k);
      CHECK(k > 0.0);
      prev_i = i;
      prev_k = k;
    }
  }
}

TEST_CASE("overflow and origin behaviour is flagged", "[bessel]") {
  CHECK(bessel_i(0.0, 800.0).status == Status::overflow);
  CHECK(bessel_i(-0.5, 0.0).status == Status::divergent_at_origin);
  CHECK(bessel_i(0.0, 700.0).ok());
}

TEST_CASE("hankel composition", "[bessel]") {
  const complex h = hankel(1, 0.0, 1.0).value;
  CHECK(h.real() == bessel_j(0.0, 1.0).value);
  CHECK(h.imag() == bessel_y(0.0, 1.0).value);
  CHECK(std::conj(hankel(1, 1.5, 2.0).value) == hankel(2, 1.5, 2.0).value);
  const double j = bessel_j(0.5, 3.0).value;
  const double y = bessel_y(0.5, 3.0).value;
  CHECK_THAT(std::norm(hankel(1, 0.5, 3.0).value), WithinRel(j * j + y * y, 1e-15));
  for (double x = 0.3; x < 30.0; x += 3.1) {
    const complex s = hankel(1, 1.0, x).value + hankel(2, 1.0, x).value;
    CHECK_THAT(s.real(), WithinRel(2.0 * bessel_j(1.0, x).value, 1e-15));
    CHECK_THAT(s.imag(), WithinAbs(0.0, 1e-15));
  }
  CHECK_THROWS_AS(hankel(3, 0.0, 1.0), domain_error);
}

TEST_CASE("half-integer orders reduce to elementary functions", "[bessel]") {
  for (double x = 0.05; x < 60.0; x *= 1.4) {
    const double c = std::sqrt(2.0 / (pi * x));
    CHECK_THAT(bessel_j(0.5, x).value, WithinAbs(c * std::sin(x), 1e-12 * c));
    CHECK_THAT(bessel_y(0.5, x).value, WithinAbs(-c * std::cos(x), 1e-12 * c));
    CHECK_THAT(bessel_j(-0.5, x).value, WithinAbs(c * std::cos(x), 1e-12 * c));
    CHECK_THAT(bessel_y(-0.5, x).value, WithinAbs(c * std::sin(x), 1e-12 * c));
    CHECK_THAT(bessel_i(0.5, x).value, WithinRel(c * std::sinh(x), 1e-12));
    CHECK_THAT(bessel_k(0.5, x).value, WithinRel(std::sqrt(pi / (2.0 * x)) * std::exp(-x), 1e-12));
    CHECK_THAT(bessel_k(-0.5, x).value, WithinRel(bessel_k(0.5, x).value, 1e-14));
  }
}

TEST_CASE("cross and modified Wronskians on the order grid", "[bessel][identity]") {
  for (double nu : {0.0, 0.5, 1.0, 2.5}) {
    for (double x : wronskian_grid()) {
      const double w = bessel_j(nu, x).value * bessel_y(nu + 1, x).value -
                       bessel_j(nu + 1, x).value * bessel_y(nu, x).value;
      CHECK_THAT(w, WithinRel(-2.0 / (pi * x), 1e-11));
      const double wm = bessel_i(nu, x).value * bessel_k(nu + 1, x).value +
                        bessel_i(nu + 1, x).value * bessel_k(nu, x).value;
      CHECK_THAT(wm, WithinRel(1.0 / x, 1e-11));
    }
  }
}

TEST_CASE("values agree with the high-precision series for x <= 10", "[bessel][oracle]") {
  for (double nu : {-0.5, 0.0, 0.3, 1.0, 2.0, 3.5, 6.0}) {
    for (double x : {0.01, 0.4, 1.1, 2.9, 5.5, 8.0, 10.0}) {
      CHECK_THAT(bessel_j(nu, x).value, WithinRel(series("J", nu, x), 1e-11));
      CHECK_THAT(bessel_y(nu, x).value, WithinRel(series("Y", nu, x), 1e-11));
      CHECK_THAT(bessel_i(nu, x).value, WithinRel(series("I", nu, x), 1e-11));
      CHECK_THAT(bessel_k(nu, x).value, WithinRel(series("K", nu, x), 1e-11));
    }
  }
}

TEST_CASE("fixture table matches the kernel", "[bessel][fixture]") {
  std::ifstream in(std::string(HYPERRADIAL_FIXTURE_DIR) + "/bessel_reference.txt");
  REQUIRE(in.good());
  const auto records = oracle::read_fixture(in);
  REQUIRE(records.size() == oracle::default_fixture_grid().size());
  for (const auto& r : records) {
    REQUIRE(r.value.size() >= 30);
    const double ref = std::stod(r.value);
    double got = 0.0;
    switch (r.function) {
      case oracle::SeriesFunction::J: got = bessel_j(r.nu, r.x).value; break;
      case oracle::SeriesFunction::Y: got = bessel_y(r.nu, r.x).value; break;
      case oracle::SeriesFunction::I: got = bessel_i(r.nu, r.x).value; break;
      case oracle::SeriesFunction::K: got = bessel_k(r.nu, r.x).value; break;
    }
    INFO(oracle::to_string(r.function) << " nu=" << r.nu << " x=" << r.x);
    if (std::abs(ref) < 1e-13) {
      CHECK_THAT(got, WithinAbs(ref, 1e-13));
    } else {
      CHECK_THAT(got, WithinRel(ref, 1e-11));
    }
  }
}

TEST_CASE("spherical Bessel relation", "[bessel]") {
  for (int i = 0; i < 20; ++i) {
    const double x = 0.2 + 1.3 * i;
    const double l = i % 4;
    CHECK_THAT(spherical_bessel_j(0.0, x), WithinAbs(std::sin(x) / x, 1e-14));
    CHECK_THAT(spherical_bessel_j(l, x),
               WithinRel(std::sqrt(pi / (2.0 * x)) * bessel_jy(l + 0.5, x).j, 1e-13));
  }
  CHECK_THAT(spherical_bessel_y(0.0, 1.7), WithinRel(-std::cos(1.7) / 1.7, 1e-13));
}

TEST_CASE("bessel_j_zero", "[zeros]") {
  CHECK_THAT(bessel_j_zero(0.5, 3), WithinRel(3.0 * pi, 1e-15));
  CHECK_THAT(bessel_j_zero(0.0, 1), WithinRel(2.404825557695773, 1e-12));
  CHECK_THAT(bessel_j_zero(1.0, 1), WithinRel(3.831705970207512, 1e-12));
  CHECK_THAT(bessel_j_zero(-0.5, 2), WithinRel(1.5 * pi, 1e-15));
  for (int n = 1; n <= 5; ++n) {
    CHECK(bessel_j_zero(1.0, n) < bessel_j_zero(2.0, n));
    CHECK(bessel_j_zero(2.0, n) < bessel_j_zero(1.0, n + 1));
  }
  for (double nu : {0.0, 0.7, 2.0, 12.5, 40.0}) {
    const auto z = bessel_j_zeros(nu, 30);
    for (std::size_t i = 0; i < z.size(); ++i) {
      CHECK_THAT(bessel_j(nu, z[i]).value, WithinAbs(0.0, 1e-13 * (1.0 + nu)));
      if (i > 0) CHECK(z[i] > z[i - 1]);
    }
  }
  CHECK_THROWS_AS(bessel_j_zero(0.0, 0), domain_error);
}

TEST_CASE("gamma function", "[gamma]") {
  CHECK(gamma_fn(1.0).value == 1.0);
  CHECK(gamma_fn(5.0).value == 24.0);
  CHECK_THAT(gamma_fn(0.5).value, WithinRel(std::sqrt(pi), 1e-15));
  CHECK_THAT(gamma_fn(4.7).value, WithinRel(3.7 * gamma_fn(3.7).value, 1e-13));
  CHECK_THROWS_AS(gamma_fn(0.0), pole_error);
  CHECK_THROWS_AS(gamma_fn(-3.0), pole_error);
  for (double x = 0.013; x <= 170.0; x *= 1.21) {
    CHECK_THAT(gamma_fn(x).value, WithinRel(std::tgamma(x), 1e-13));
  }
  CHECK(gamma_fn(180.0).status == Status::overflow);
}

TEST_CASE("orthogonal polynomials", "[polynomials]") {
  CHECK(hermite(2, 1.0) == 2.0);
  CHECK(hermite(3, 0.0) == 0.0);
  CHECK(laguerre(0, 0.3, 2.0) == 1.0);
  CHECK(laguerre(1, 0.5, 1.5) == 0.0);
  CHECK_THROWS_AS(laguerre(2, -1.0, 1.0), domain_error);
  numerics::QuadratureOptions opt;
  opt.abs_tol = 1e-13;
  auto h = [](double x) { return std::exp(-x * x) * hermite(2, x) * hermite(4, x); };
  CHECK_THAT(numerics::integrate(h, -12.0, 12.0, opt).value, WithinAbs(0.0, 1e-10));
  auto hn = [](double x) { return std::exp(-x * x) * hermite(3, x) * hermite(3, x); };
  CHECK_THAT(numerics::integrate(hn, -12.0, 12.0, opt).value, WithinRel(8.0 * 6.0 * std::sqrt(pi), 1e-12));
  const double alpha = 0.5;
  auto l = [alpha](double x) { return std::pow(x, alpha) * std::exp(-x) * laguerre(1, alpha, x) * laguerre(3, alpha, x); };
  CHECK_THAT(numerics::integrate_to_infinity(l, 0.0, opt).value, WithinAbs(0.0, 1e-10));
}

TEST_CASE("Kummer M", "[kummer]") {
  CHECK(kummer_m(2.3, 0.7, 0.0).value == 1.0);
  CHECK_THAT(kummer_m(-1.0, 0.5, 4.0).value, WithinAbs(-7.0, 1e-14));
  CHECK_THROWS_AS(kummer_m(1.0, -2.0, 1.0), pole_error);
  CHECK_THROWS_AS(kummer_m(1.0, 0.0, 1.0), pole_error);
  const double z = 0.8;
  CHECK_THAT(kummer_m(-2.0, 0.5, z * z).value, WithinRel(2.0 / 24.0 * hermite(4, z), 1e-13));
  CHECK_THAT(kummer_m(1.0, 1.0, 2.5).value, WithinRel(std::exp(2.5), 1e-14));
  CHECK_THAT(kummer_m(1.0, 1.0, -2.5).value, WithinRel(std::exp(-2.5), 1e-14));
}

TEST_CASE("Kummer U", "[kummer]") {
  CHECK_THAT(kummer_u(-1.0, 1.5, 2.0).value, WithinAbs(0.5, 1e-15));
  CHECK_THAT(kummer_u(0.0, 1.2, 5.0).value, WithinAbs(1.0, 1e-15));
  CHECK_THAT(kummer_u(-2.0, 2.0, 1.0).value, WithinRel(2.0 * laguerre(2, 1.0, 1.0), 1e-14));
  CHECK_THROWS_AS(kummer_u(0.5, 1.5, 0.0), domain_error);
  // Reference values from an independent arbitrary-precision implementation.
  CHECK_THAT(kummer_u(0.7, 2.0, 2.0).value, WithinRel(0.668242303430005, 1e-12));
  CHECK_THAT(kummer_u(-0.3, 2.0, 2.0).value, WithinRel(0.980179177835155, 1e-11));
  CHECK_THAT(kummer_u(0.7, 1.3, 2.0).value, WithinRel(0.556734172064155, 1e-12));
  CHECK_THAT(kummer_u(2.5, 1.0, 0.3).value, WithinRel(0.341029096697336, 1e-12));
  CHECK_THAT(kummer_u(0.7, 1.3, 40.0).value, WithinRel(detail::kummer_u_integral(0.7, 1.3, 40.0).value, 1e-12));
  CHECK(kummer_u(0.5, 1.5, 1.0).status == Status::divergent_at_origin);
  CHECK(kummer_u(-2.0, 1.5, 1.0).ok());
  CHECK_THAT(kummer_u(1.0, 2.0, 3.0).value, WithinRel(1.0 / 3.0, 1e-13));
  CHECK_THAT(kummer_u(2.5, 3.5, 1.7).value, WithinRel(std::pow(1.7, -2.5), 1e-12));
}

TEST_CASE("Hermite and Laguerre relations of the Kummer functions", "[kummer][identity]") {
  std::mt19937_64 rng(20240611);
  std::uniform_real_distribution<double> zd(0.05, 3.0);
  for (int i = 0; i < 20; ++i) {
    const double z = zd(rng);
    const int n = i % 6;
    const double m1 = kummer_m(-n, 0.5, z * z).value;
    const double h1 = (n % 2 ? -1.0 : 1.0) * factorial(n) / factorial(2 * n) * hermite(2 * n, z);
    CHECK_THAT(m1, WithinRel(h1, 1e-10));
    const double m2 = kummer_m(-n, 1.5, z * z).value;
    const double h2 = (n % 2 ? -1.0 : 1.0) * factorial(n) / factorial(2 * n + 1) * hermite(2 * n + 1, z) / (2.0 * z);
    CHECK_THAT(m2, WithinRel(h2, 1e-10));
    const double alpha = 0.5 * (i % 5) - 0.5;
    const double u = kummer_u(-n, alpha + 1.0, z).value;
    const double lg = (n % 2 ? -1.0 : 1.0) * factorial(n) * laguerre(n, alpha, z);
    const double mm = (n % 2 ? -1.0 : 1.0) * pochhammer(alpha + 1.0, n) * kummer_m(-n, alpha + 1.0, z).value;
    CHECK_THAT(u, WithinRel(lg, 1e-10) || WithinAbs(lg, 1e-12));
    CHECK_THAT(mm, WithinRel(lg, 1e-10) || WithinAbs(lg, 1e-12));
    // Odd degree only: U((1-N)/2, 3/2, z^2) = H_N(z) / (2^N z).
    const int odd = 2 * n + 1;
    const double uo = kummer_u((1.0 - odd) / 2.0, 1.5, z * z).value;
    CHECK_THAT(uo, WithinRel(hermite(odd, z) / (std::pow(2.0, odd) * z), 1e-10));
  }
}

TEST_CASE("the Hermite U relation also holds for even degree", "[kummer][identity]") {
  // U(a, b, z) = z^{1-b} U(a-b+1, 2-b, z) turns the half-integer first
  // parameter into -N/2, so the right-hand side is again a polynomial ratio.
  for (int n : {0, 2, 4, 6, 8}) {
    for (double z : {0.3, 1.1, 2.6}) {
      const double lhs = kummer_u((1.0 - n) / 2.0, 1.5, z * z).value;
      const double rhs = hermite(n, z) / (std::pow(2.0, n) * z);
      CHECK_THAT(lhs, WithinRel(rhs, 1e-10));
    }
  }
}
