#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "framecert/certificates.hpp"
#include "framecert/errors.hpp"
#include "framecert/gallery.hpp"
#include "framecert/schauder.hpp"
#include "oracles.hpp"

using framecert::Matrix;
using framecert::PNorm;
using framecert::PNormSpace;
using framecert::SchauderFramePair;

namespace {

SchauderFramePair onb_pair(std::size_t d, PNorm p) {
  return SchauderFramePair(PNormSpace{d, p}, Matrix::identity(d), Matrix::identity(d));
}

// Biorthogonal pair from an invertible matrix of columns.
SchauderFramePair basis_pair(const Matrix& x_cols, PNorm p) {
  const std::size_t d = x_cols.rows();
  const Matrix inv = framecert::solve(x_cols, Matrix::identity(d));
  return SchauderFramePair(PNormSpace{d, p}, framecert::transpose(x_cols), inv);
}

double named(const framecert::NamedValues& values, const std::string& key) {
  for (const auto& [name, v] : values) {
    if (name == key) return v;
  }
  FAIL("missing value ", key);
  return 0.0;
}

Matrix random_invertible(std::size_t d, std::mt19937_64& rng) {
  return framecert::add(oracles::random_matrix(d, d, rng, 0.3), Matrix::identity(d));
}

// Basis pair with one duplicated vector whose functional is split in half.
SchauderFramePair near_basis_pair(std::size_t d, PNorm p, std::mt19937_64& rng) {
  const Matrix x_cols = random_invertible(d, rng);
  const Matrix inv = framecert::solve(x_cols, Matrix::identity(d));
  Matrix x_rows(d + 1, d);
  Matrix f_rows(d + 1, d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      x_rows(i, j) = x_cols(j, i);
      f_rows(i, j) = inv(i, j);
    }
  }
  for (std::size_t j = 0; j < d; ++j) {
    x_rows(d, j) = x_rows(0, j);
    f_rows(d, j) = 0.5 * f_rows(0, j);
    f_rows(0, j) *= 0.5;
  }
  return SchauderFramePair(PNormSpace{d, p}, std::move(x_rows), std::move(f_rows));
}

}  // namespace

TEST_CASE("reconstruction residual: coordinate pairs and constructed duals") {
  for (PNorm p : {PNorm::one, PNorm::two, PNorm::inf}) {
    CHECK(framecert::reconstruction_residual(onb_pair(3, p)) <= 1e-12);
  }

  const auto ex = framecert::gallery::example31(4);
  CHECK(framecert::reconstruction_residual(ex.pair) <= 1e-10);

  std::mt19937_64 rng(51);
  const SchauderFramePair pair = basis_pair(random_invertible(5, rng), PNorm::two);
  CHECK(framecert::reconstruction_residual(pair) <= 1e-10);
}

TEST_CASE("pair validation rejects zero vectors and bad reconstructions") {
  Matrix x = Matrix::identity(2);
  x(1, 1) = 0.0;  // second vector becomes zero
  CHECK_THROWS_AS(SchauderFramePair(PNormSpace{2, PNorm::two}, x, Matrix::identity(2)),
                  framecert::Error);

  Matrix bad = Matrix::identity(2);
  bad(0, 0) = 2.0;
  CHECK_THROWS_AS(SchauderFramePair(PNormSpace{2, PNorm::two}, bad, Matrix::identity(2)),
                  framecert::Error);
}

TEST_CASE("projection constant: orthonormal pair and vertex-enumeration oracle") {
  const framecert::MinNormProfile onb_profile = framecert::projection_constant(onb_pair(4, PNorm::two));
  CHECK(onb_profile.projection_constant == doctest::Approx(1.0));
  CHECK(onb_profile.window(0, 3) == doctest::Approx(1.0));

  // x1 = e1 + e2, x2 = e2 with biorthogonal functionals, sup-norm.
  Matrix x_cols(2, 2);
  x_cols(0, 0) = 1.0;
  x_cols(1, 0) = 1.0;
  x_cols(1, 1) = 1.0;
  const SchauderFramePair pair = basis_pair(x_cols, PNorm::inf);
  const framecert::MinNormProfile profile = framecert::projection_constant(pair);

  // Oracle: evaluate every window operator on the vertices of the inf-ball.
  double oracle = 0.0;
  for (std::size_t m = 0; m < 2; ++m) {
    for (std::size_t n = m; n < 2; ++n) {
      Matrix op(2, 2);
      for (std::size_t k = m; k <= n; ++k) framecert::add_outer(op, pair.x(k), pair.f(k));
      for (int sx = -1; sx <= 1; sx += 2) {
        for (int sy = -1; sy <= 1; sy += 2) {
          const std::vector<double> v = {double(sx), double(sy)};
          const auto y = framecert::matvec(op, v);
          oracle = std::max(oracle, framecert::vec_pnorm(y, PNorm::inf));
        }
      }
    }
  }
  CHECK(profile.projection_constant == doctest::Approx(oracle).epsilon(1e-12));
  CHECK(profile.projection_constant == doctest::Approx(2.0));
}

TEST_CASE("projection constant anchor for the block pair at depth 4") {
  // Window operators are diagonal with entries (copies in window)/n, so the
  // constant is exactly 1; frozen after the first brute-force audit.
  const auto ex = framecert::gallery::example31(4);
  const framecert::MinNormProfile profile = framecert::projection_constant(ex.pair);
  CHECK(profile.projection_constant == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(profile.projection_constant >= 1.0 - 1e-12);
}

TEST_CASE("min_norm: single member, cancellation, naive oracle") {
  std::mt19937_64 rng(52);
  const SchauderFramePair pair = basis_pair(random_invertible(6, rng), PNorm::two);
  const std::vector<double> single = {1.0};
  CHECK(framecert::min_norm(single, pair) ==
        doctest::Approx(framecert::vec_norm2(pair.x(0))));

  // Equal and opposite coefficients on a duplicated vector cancel in the
  // middle window but not at the ends.
  std::mt19937_64 rng2(53);
  const SchauderFramePair dup = near_basis_pair(3, PNorm::two, rng2);
  std::vector<double> coeffs(dup.size(), 0.0);
  coeffs[0] = 1.0;
  coeffs[dup.size() - 1] = -1.0;  // the duplicate of x_0
  const double expected = framecert::vec_norm2(dup.x(0));
  CHECK(framecert::min_norm(coeffs, dup) == doctest::Approx(expected));

  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  std::vector<double> c(6);
  for (auto& v : c) v = uni(rng);
  // Naive double-loop oracle.
  double oracle = 0.0;
  for (std::size_t m = 0; m < c.size(); ++m) {
    for (std::size_t n = m; n < c.size(); ++n) {
      std::vector<double> acc(6, 0.0);
      for (std::size_t k = m; k <= n; ++k) {
        for (std::size_t i = 0; i < 6; ++i) acc[i] += c[k] * pair.x(k)[i];
      }
      oracle = std::max(oracle, framecert::vec_norm2(acc));
    }
  }
  CHECK(framecert::min_norm(c, pair) == doctest::Approx(oracle).epsilon(1e-12));

  std::vector<double> too_long(7, 1.0);
  CHECK_THROWS_AS(framecert::min_norm(too_long, pair), framecert::Error);
}

TEST_CASE("min_norm is a norm: homogeneity and triangle inequality") {
  std::mt19937_64 rng(54);
  const SchauderFramePair pair = basis_pair(random_invertible(4, rng), PNorm::one);
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<double> a(4), b(4), sum(4);
    for (std::size_t i = 0; i < 4; ++i) {
      a[i] = uni(rng);
      b[i] = uni(rng);
      sum[i] = a[i] + b[i];
    }
    const double na = framecert::min_norm(a, pair);
    const double nb = framecert::min_norm(b, pair);
    CHECK(framecert::min_norm(sum, pair) <= na + nb + 1e-12);
    const double t = uni(rng);
    std::vector<double> scaled(4);
    for (std::size_t i = 0; i < 4; ++i) scaled[i] = t * a[i];
    CHECK(framecert::min_norm(scaled, pair) ==
          doctest::Approx(std::fabs(t) * na).epsilon(1e-12));
  }
}

TEST_CASE("thm31: identity perturbation and the diverging-relative-sum pair") {
  const SchauderFramePair pair = onb_pair(3, PNorm::two);
  const auto same = framecert::thm31_certificate(pair, pair.x_rows());
  CHECK(same.hypothesis_ok);
  CHECK(named(same.hypothesis_values, "mu") == doctest::Approx(0.0));
  CHECK(same.checks_ok);
  CHECK(named(same.extras, "new_reconstruction_residual") <= 1e-12);

  const auto ex = framecert::gallery::example31(5);
  const auto report = framecert::thm31_certificate(ex.pair, ex.y_rows);
  CHECK(report.hypothesis_ok);
  CHECK(named(report.hypothesis_values, "mu") < 1.0);
  CHECK(report.checks_ok);
}

TEST_CASE("thm31 soundness trials") {
  std::mt19937_64 rng(55);
  std::uniform_real_distribution<double> mu_draw(0.05, 0.9);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t d = 2 + trial % 7;
    const PNorm p = trial % 3 == 0 ? PNorm::one : (trial % 3 == 1 ? PNorm::two : PNorm::inf);
    const SchauderFramePair pair = trial % 2 == 0 ? basis_pair(random_invertible(d, rng), p)
                                                  : near_basis_pair(d, p, rng);
    const PNorm q = framecert::dual_norm(p);
    const Matrix noise = oracles::random_matrix(pair.size(), d, rng);
    double mu0 = 0.0;
    for (std::size_t k = 0; k < pair.size(); ++k) {
      mu0 += framecert::vec_pnorm(noise.row(k), p) * framecert::vec_pnorm(pair.f(k), q);
    }
    const double scale = mu_draw(rng) / mu0;
    Matrix y = pair.x_rows();
    for (std::size_t k = 0; k < pair.size(); ++k) {
      for (std::size_t j = 0; j < d; ++j) y(k, j) += scale * noise(k, j);
    }
    const auto report = framecert::thm31_certificate(pair, y, 77);
    REQUIRE(report.hypothesis_ok);
    CHECK(report.checks_ok);
    CHECK(named(report.extras, "new_reconstruction_residual") <= 1e-8);
    CHECK(named(report.extras, "excess_x") == named(report.extras, "excess_y"));
  }
}

TEST_CASE("thm33: scaled shift on an orthonormal pair and trials") {
  const SchauderFramePair pair = onb_pair(3, PNorm::two);
  // K = 1; lambda = 0.3 < 1/K via a 0.1 shift on each of the three vectors.
  Matrix y = pair.x_rows();
  for (std::size_t k = 0; k < 3; ++k) y(k, (k + 1) % 3) += 0.1;
  const auto report = framecert::thm33_certificate(pair, y);
  CHECK(named(report.hypothesis_values, "lambda") == doctest::Approx(0.3));
  CHECK(named(report.hypothesis_values, "K") == doctest::Approx(1.0));
  CHECK(report.hypothesis_ok);
  CHECK(named(report.extras, "i_minus_l_norm") <= 0.3 + 1e-9);
  CHECK(report.checks_ok);

  std::mt19937_64 rng(56);
  std::uniform_real_distribution<double> frac(0.05, 0.9);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t d = 2 + trial % 7;
    const PNorm p = trial % 3 == 0 ? PNorm::one : (trial % 3 == 1 ? PNorm::two : PNorm::inf);
    const SchauderFramePair pair2 = trial % 2 == 0 ? basis_pair(random_invertible(d, rng), p)
                                                   : near_basis_pair(d, p, rng);
    const double big_k = framecert::projection_constant(pair2).projection_constant;
    const Matrix noise = oracles::random_matrix(pair2.size(), d, rng);
    double lambda0 = 0.0;
    for (std::size_t k = 0; k < pair2.size(); ++k) {
      lambda0 += framecert::vec_pnorm(noise.row(k), p) / framecert::vec_pnorm(pair2.x(k), p);
    }
    const double scale = frac(rng) / (big_k * lambda0);
    Matrix y2 = pair2.x_rows();
    for (std::size_t k = 0; k < pair2.size(); ++k) {
      for (std::size_t j = 0; j < d; ++j) y2(k, j) += scale * noise(k, j);
    }
    const auto r2 = framecert::thm33_certificate(pair2, y2, 78);
    REQUIRE(r2.hypothesis_ok);
    CHECK(r2.checks_ok);
  }
}

TEST_CASE("thm34: functional-side diagonal case and trials") {
  const SchauderFramePair pair = onb_pair(2, PNorm::two);

  const auto same = framecert::thm34_certificate(pair, pair.f_rows());
  CHECK(named(same.hypothesis_values, "mu") == 0.0);
  CHECK(named(same.extras, "i_minus_t_norm") <= 1e-12);
  CHECK(named(same.extras, "new_reconstruction_residual") <= 1e-10);

  Matrix g = pair.f_rows();
  g(0, 0) = 1.2;
  const auto report = framecert::thm34_certificate(pair, g);
  CHECK(named(report.hypothesis_values, "mu") == doctest::Approx(0.2));
  CHECK(report.hypothesis_ok);
  CHECK(report.checks_ok);
  CHECK(named(report.extras, "new_reconstruction_residual") <= 1e-10);

  std::mt19937_64 rng(57);
  std::uniform_real_distribution<double> mu_draw(0.05, 0.9);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t d = 2 + trial % 7;
    const PNorm p = trial % 3 == 0 ? PNorm::one : (trial % 3 == 1 ? PNorm::two : PNorm::inf);
    const PNorm q = framecert::dual_norm(p);
    const SchauderFramePair pair2 = trial % 2 == 0 ? basis_pair(random_invertible(d, rng), p)
                                                   : near_basis_pair(d, p, rng);
    const Matrix noise = oracles::random_matrix(pair2.size(), d, rng);
    double mu0 = 0.0;
    for (std::size_t k = 0; k < pair2.size(); ++k) {
      mu0 += framecert::vec_pnorm(noise.row(k), q) * framecert::vec_pnorm(pair2.x(k), p);
    }
    const double scale = mu_draw(rng) / mu0;
    Matrix g2 = pair2.f_rows();
    for (std::size_t k = 0; k < pair2.size(); ++k) {
      for (std::size_t j = 0; j < d; ++j) g2(k, j) += scale * noise(k, j);
    }
    const auto r2 = framecert::thm34_certificate(pair2, g2, 79);
    REQUIRE(r2.hypothesis_ok);
    CHECK(r2.checks_ok);
  }
}

TEST_CASE("schauder excess") {
  std::mt19937_64 rng(58);
  CHECK(framecert::schauder_excess(basis_pair(random_invertible(4, rng), PNorm::two)) == 0);
  CHECK(framecert::schauder_excess(near_basis_pair(4, PNorm::two, rng)) == 1);
}

TEST_CASE("near-Schauder excess preservation under the relative condition") {
  std::mt19937_64 rng(59);
  std::uniform_real_distribution<double> mu_draw(0.05, 0.9);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t d = 2 + trial % 7;
    const PNorm p = trial % 3 == 0 ? PNorm::one : (trial % 3 == 1 ? PNorm::two : PNorm::inf);
    const SchauderFramePair pair = near_basis_pair(d, p, rng);
    const PNorm q = framecert::dual_norm(p);
    const Matrix noise = oracles::random_matrix(pair.size(), d, rng);
    double mu0 = 0.0;
    for (std::size_t k = 0; k < pair.size(); ++k) {
      mu0 += framecert::vec_pnorm(noise.row(k), p) * framecert::vec_pnorm(pair.f(k), q);
    }
    const double scale = mu_draw(rng) / mu0;
    Matrix y = pair.x_rows();
    for (std::size_t k = 0; k < pair.size(); ++k) {
      for (std::size_t j = 0; j < d; ++j) y(k, j) += scale * noise(k, j);
    }
    const auto report = framecert::thm31_certificate(pair, y, 80);
    REQUIRE(report.hypothesis_ok);
    CHECK(named(report.extras, "excess_x") == 1.0);
    CHECK(named(report.extras, "excess_y") == 1.0);
  }
}

TEST_CASE("cross-module consistency: biorthogonal pair mu matches the Hilbert sum") {
  std::mt19937_64 rng(60);
  const Matrix x_cols = random_invertible(4, rng);
  const SchauderFramePair pair = basis_pair(x_cols, PNorm::two);

  std::vector<double> packed;
  for (std::size_t k = 0; k < 4; ++k) {
    packed.insert(packed.end(), pair.x(k).begin(), pair.x(k).end());
  }
  const framecert::VectorFamily f(4, std::move(packed));

  const Matrix noise = oracles::random_matrix(4, 4, rng, 0.05);
  Matrix y = pair.x_rows();
  std::vector<double> h_packed;
  for (std::size_t k = 0; k < 4; ++k) {
    for (std::size_t j = 0; j < 4; ++j) y(k, j) += noise(k, j);
    h_packed.insert(h_packed.end(), y.row(k).begin(), y.row(k).end());
  }
  const framecert::VectorFamily h(4, std::move(h_packed));

  const auto banach = framecert::thm31_certificate(pair, y);
  const auto hilbert = framecert::thm21_certificate(f, h);
  CHECK(std::fabs(named(banach.hypothesis_values, "mu") -
                  named(hilbert.hypothesis_values, "mu")) <= 1e-12);
}

TEST_CASE("dual construction is exact at zero perturbation") {
  std::mt19937_64 rng(61);
  const SchauderFramePair pair = basis_pair(random_invertible(5, rng), PNorm::inf);
  const auto report = framecert::thm31_certificate(pair, pair.x_rows());
  CHECK(named(report.hypothesis_values, "mu") == 0.0);
  CHECK(named(report.extras, "i_minus_l_norm") <= 1e-12);
  CHECK(named(report.extras, "new_reconstruction_residual") <= 1e-10);
}
