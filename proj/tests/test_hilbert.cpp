#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "framecert/errors.hpp"
#include "framecert/gallery.hpp"
#include "framecert/hilbert.hpp"
#include "framecert/kernels.hpp"
#include "oracles.hpp"

using framecert::Matrix;
using framecert::VectorFamily;

namespace {

VectorFamily onb(std::size_t d) {
  std::vector<double> packed(d * d, 0.0);
  for (std::size_t i = 0; i < d; ++i) packed[i * d + i] = 1.0;
  return VectorFamily(d, std::move(packed));
}

}  // namespace

TEST_CASE("synthesis lays out members as columns") {
  const VectorFamily basis = onb(2);
  const Matrix t = framecert::synthesis(basis);
  CHECK(framecert::max_abs(framecert::subtract(t, Matrix::identity(2))) == 0.0);

  const VectorFamily repeated = VectorFamily::from_rows({{1.0, 0.0}, {1.0, 0.0}});
  const Matrix r = framecert::synthesis(repeated);
  CHECK(r(0, 0) == 1.0);
  CHECK(r(0, 1) == 1.0);
  CHECK(r(1, 0) == 0.0);
  CHECK(r(1, 1) == 0.0);
}

TEST_CASE("synthesis of the block gallery family: counts and column norms") {
  const auto ex = framecert::gallery::example21(2);
  const Matrix t = framecert::synthesis(ex.f);
  // Block n holds (n + n0)^4 copies of e_n / (n + n0)^2.
  std::size_t expected = 0;
  for (std::size_t n = 1; n <= 2; ++n) {
    const std::size_t c = (n + ex.n_offset) * (n + ex.n_offset);
    expected += c * c;
  }
  CHECK(t.cols() == expected);
  for (std::size_t j = 0; j < t.cols(); ++j) {
    double norm = 0.0;
    for (std::size_t i = 0; i < t.rows(); ++i) norm += t(i, j) * t(i, j);
    norm = std::sqrt(norm);
    const std::size_t block = j < ex.block_ends[0] ? 1 : 2;
    const double c = static_cast<double>((block + ex.n_offset) * (block + ex.n_offset));
    CHECK(norm == doctest::Approx(1.0 / c).epsilon(1e-12));
  }
}

TEST_CASE("frame_operator equals the naive outer-product sum") {
  CHECK(framecert::max_abs(framecert::subtract(framecert::frame_operator(onb(3)),
                                               Matrix::identity(3))) == 0.0);

  const VectorFamily repeated = VectorFamily::from_rows({{1.0, 0.0}, {1.0, 0.0}});
  const Matrix s = framecert::frame_operator(repeated);
  CHECK(s(0, 0) == doctest::Approx(2.0));
  CHECK(s(1, 1) == doctest::Approx(0.0));

  std::mt19937_64 rng(21);
  const VectorFamily fam = oracles::random_family(4, 9, rng);
  Matrix naive(4, 4);
  for (std::size_t k = 0; k < fam.size(); ++k) {
    const auto v = fam.vec(k);
    for (std::size_t i = 0; i < 4; ++i) {
      for (std::size_t j = 0; j < 4; ++j) naive(i, j) += v[i] * v[j];
    }
  }
  CHECK(framecert::max_abs(framecert::subtract(framecert::frame_operator(fam), naive)) <=
        1e-12);
}

TEST_CASE("frame_bounds: orthonormal basis and the tight gallery frame") {
  const framecert::FrameInfo info = framecert::frame_bounds(onb(2));
  CHECK(info.bounds.lower == doctest::Approx(1.0));
  CHECK(info.bounds.upper == doctest::Approx(1.0));
  CHECK(info.is_frame);

  const auto ex = framecert::gallery::example21(3);
  const framecert::FrameInfo f_info = framecert::frame_bounds(ex.f);
  CHECK(f_info.bounds.lower == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(f_info.bounds.upper == doctest::Approx(1.0).epsilon(1e-9));
  const framecert::FrameInfo h_info = framecert::frame_bounds(ex.h);
  CHECK(h_info.bounds.lower >= 1.0 - 1e-9);
  CHECK(h_info.bounds.upper <= 2.0 + 1e-9);
}

TEST_CASE("frame_sequence_bounds over the span") {
  const VectorFamily single = VectorFamily::from_rows({{1.0, 0.0, 0.0}});
  const framecert::FrameBounds b = framecert::frame_sequence_bounds(single);
  CHECK(b.lower == doctest::Approx(1.0));
  CHECK(b.upper == doctest::Approx(1.0));

  // Alternating zero / unit members stay a (1, 1) frame for their span.
  const auto ex = framecert::gallery::example22(4);
  const framecert::FrameBounds fb = framecert::frame_sequence_bounds(ex.f);
  CHECK(fb.lower == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(fb.upper == doctest::Approx(1.0).epsilon(1e-9));

  const VectorFamily zeros(3, 2);
  CHECK_THROWS_AS(framecert::frame_sequence_bounds(zeros), framecert::Error);
}

TEST_CASE("frame_sequence_bounds matches a change-of-basis oracle") {
  std::mt19937_64 rng(22);
  // Random family inside a 3-dimensional subspace of R^6.
  const Matrix q = oracles::random_orthogonal(6, rng);
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  std::vector<double> packed;
  std::vector<double> coords_packed;
  for (int k = 0; k < 7; ++k) {
    double c[3] = {uni(rng), uni(rng), uni(rng)};
    coords_packed.insert(coords_packed.end(), {c[0], c[1], c[2]});
    for (std::size_t i = 0; i < 6; ++i) {
      packed.push_back(c[0] * q(i, 0) + c[1] * q(i, 1) + c[2] * q(i, 2));
    }
  }
  const VectorFamily inside(6, std::move(packed));
  const VectorFamily coords(3, std::move(coords_packed));
  const framecert::FrameBounds seq = framecert::frame_sequence_bounds(inside);
  const framecert::FrameInfo full = framecert::frame_bounds(coords);
  CHECK(std::fabs(seq.lower - full.bounds.lower) <= 1e-9);
  CHECK(std::fabs(seq.upper - full.bounds.upper) <= 1e-9);
}

TEST_CASE("canonical dual: identity on an ONB, reconstruction on random frames") {
  const VectorFamily basis = onb(3);
  const VectorFamily dual = framecert::canonical_dual(basis);
  for (std::size_t k = 0; k < 3; ++k) {
    for (std::size_t i = 0; i < 3; ++i) {
      CHECK(dual.vec(k)[i] == doctest::Approx(basis.vec(k)[i]));
    }
  }

  const auto ex = framecert::gallery::example21(2);
  const VectorFamily g = framecert::canonical_dual(ex.f);
  double worst = 0.0;
  for (std::size_t k = 0; k < g.size(); ++k) {
    for (std::size_t i = 0; i < g.dimension(); ++i) {
      worst = std::max(worst, std::fabs(g.vec(k)[i] - ex.f.vec(k)[i]));
    }
  }
  CHECK(worst <= 1e-10);

  std::mt19937_64 rng(23);
  const VectorFamily fam = oracles::random_spanning_family(4, 9, rng);
  const VectorFamily fam_dual = framecert::canonical_dual(fam);
  // Reconstruction sum_k <x, S^{-1} f_k> f_k = x on sampled points.
  const Matrix mix = [&] {
    Matrix m(4, 4);
    for (std::size_t k = 0; k < fam.size(); ++k) {
      framecert::add_outer(m, fam.vec(k), fam_dual.vec(k));
    }
    return m;
  }();
  for (int trial = 0; trial < 100; ++trial) {
    const auto x = oracles::random_unit_vector(4, rng);
    const auto y = framecert::matvec(mix, x);
    double err = 0.0;
    for (std::size_t i = 0; i < 4; ++i) err = std::max(err, std::fabs(y[i] - x[i]));
    CHECK(err <= 1e-8);
  }
}

TEST_CASE("verify_dual_pair") {
  CHECK(framecert::verify_dual_pair(onb(3), onb(3)) <= 1e-12);

  std::mt19937_64 rng(24);
  const VectorFamily fam = oracles::random_spanning_family(5, 11, rng);
  CHECK(framecert::verify_dual_pair(fam, framecert::canonical_dual(fam)) <= 1e-8);

  // Doubling an ONB misses the identity by exactly 1.
  const VectorFamily doubled = VectorFamily::from_rows({{2.0, 0.0}, {0.0, 2.0}});
  CHECK(framecert::verify_dual_pair(onb(2), doubled) == doctest::Approx(1.0));

  const VectorFamily shorter = VectorFamily::from_rows({{1.0, 0.0}});
  CHECK_THROWS_AS(framecert::verify_dual_pair(onb(2), shorter), framecert::Error);
}

TEST_CASE("riesz_bounds: ONB, repetition, sampled coefficient oracle") {
  const framecert::RieszInfo info = framecert::riesz_bounds(onb(3));
  CHECK(info.bounds.lower == doctest::Approx(1.0));
  CHECK(info.bounds.upper == doctest::Approx(1.0));
  CHECK(info.is_riesz);

  const VectorFamily repeated = VectorFamily::from_rows({{1.0, 0.0}, {1.0, 0.0}});
  const framecert::RieszInfo rep = framecert::riesz_bounds(repeated);
  CHECK(rep.bounds.lower <= 1e-12);
  CHECK_FALSE(rep.is_riesz);

  std::mt19937_64 rng(25);
  std::vector<double> packed;
  for (int k = 0; k < 4; ++k) {
    const auto v = oracles::random_unit_vector(6, rng);
    packed.insert(packed.end(), v.begin(), v.end());
  }
  const VectorFamily fam(6, std::move(packed));
  const framecert::RieszInfo ri = framecert::riesz_bounds(fam);
  const Matrix t = framecert::synthesis(fam);
  std::normal_distribution<double> gauss(0.0, 1.0);
  double sampled_min = 1e300, sampled_max = 0.0;
  for (int trial = 0; trial < 10000; ++trial) {
    std::vector<double> c(4);
    double norm = 0.0;
    for (auto& v : c) {
      v = gauss(rng);
      norm += v * v;
    }
    if (norm < 1e-12) continue;
    const auto y = framecert::matvec(t, c);
    const double q = framecert::kernels::sum_sq(y.data(), y.size()) / norm;
    sampled_min = std::min(sampled_min, q);
    sampled_max = std::max(sampled_max, q);
  }
  CHECK(ri.bounds.lower <= sampled_min + 1e-9);
  CHECK(ri.bounds.upper >= sampled_max - 1e-9);
}

TEST_CASE("excess counts members beyond a basis of the span") {
  CHECK(framecert::excess(onb(3)) == 0);

  std::vector<std::vector<double>> rows = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 0, 0}, {1, 0, 0}};
  CHECK(framecert::excess(VectorFamily::from_rows(rows)) == 2);

  const auto ex = framecert::gallery::example21(3);
  std::size_t expected = 0;
  for (std::size_t n = 1; n <= 3; ++n) {
    const std::size_t c = (n + ex.n_offset) * (n + ex.n_offset);
    expected += c * c - 1;
  }
  CHECK(framecert::excess(ex.f) == expected);
}

TEST_CASE("gap: coincident, orthogonal, rotated-line geometry") {
  const VectorFamily e1 = VectorFamily::from_rows({{1.0, 0.0}});
  const VectorFamily e2 = VectorFamily::from_rows({{0.0, 1.0}});
  CHECK(framecert::gap(e1, e1).delta <= 1e-12);
  CHECK(framecert::gap(e1, e2).delta == doctest::Approx(1.0));

  const double theta = 0.3;
  const VectorFamily tilted =
      VectorFamily::from_rows({{std::cos(theta), std::sin(theta)}});
  const double delta = framecert::gap(tilted, e1).delta;
  CHECK(std::fabs(delta - std::sin(theta)) <= 1e-9);

  // Minimization oracle: distance from the tilted unit vector to the line.
  double best = 1e300;
  for (int i = 0; i <= 1000; ++i) {
    const double t = -2.0 + 4.0 * i / 1000.0;
    const double dx = std::cos(theta) - t;
    const double dy = std::sin(theta);
    best = std::min(best, std::sqrt(dx * dx + dy * dy));
  }
  CHECK(delta <= best + 1e-9);
  CHECK(delta >= best - 1e-3);

  // Zero K-side family.
  const VectorFamily zero(2, 1);
  CHECK(framecert::gap(zero, e1).delta == 0.0);
}

TEST_CASE("gap is zero exactly for nested spans") {
  std::mt19937_64 rng(26);
  const VectorFamily sub = VectorFamily::from_rows({{1, 0, 0}, {0, 1, 0}});
  const VectorFamily whole = onb(3);
  CHECK(framecert::gap(sub, whole).delta <= 1e-9);
  CHECK(framecert::gap(whole, sub).delta == doctest::Approx(1.0));

  const VectorFamily a = oracles::random_family(4, 2, rng);
  const VectorFamily b = oracles::random_family(4, 2, rng);
  CHECK(framecert::gap(a, b).delta > 1e-3);  // generic position
}

TEST_CASE("bessel_bound") {
  CHECK(framecert::bessel_bound(onb(4)) == doctest::Approx(1.0));
  CHECK(framecert::bessel_bound(VectorFamily::from_rows({{2.0, 0.0}})) ==
        doctest::Approx(4.0));

  const auto ex = framecert::gallery::example21(4);
  const VectorFamily diff = framecert::difference(ex.f, ex.h);
  const double m = framecert::bessel_bound(diff);
  const double oracle =
      oracles::power_iteration_lambda_max(framecert::frame_operator(diff));
  CHECK(std::fabs(m - oracle) <= 1e-8);
}

TEST_CASE("frame_bounds is unitarily invariant") {
  std::mt19937_64 rng(27);
  for (int trial = 0; trial < 5; ++trial) {
    const VectorFamily fam = oracles::random_family(4, 10, rng);
    const Matrix q = oracles::random_orthogonal(4, rng);
    const framecert::FrameInfo before = framecert::frame_bounds(fam);
    const framecert::FrameInfo after = framecert::frame_bounds(framecert::apply(q, fam));
    CHECK(std::fabs(before.bounds.lower - after.bounds.lower) <= 1e-9);
    CHECK(std::fabs(before.bounds.upper - after.bounds.upper) <= 1e-9);
  }
}

TEST_CASE("canonical dual is an involution with inverted bounds") {
  std::mt19937_64 rng(28);
  for (int trial = 0; trial < 5; ++trial) {
    const VectorFamily fam = oracles::random_spanning_family(4, 8, rng);
    const VectorFamily dual = framecert::canonical_dual(fam);
    const VectorFamily back = framecert::canonical_dual(dual);
    double worst = 0.0;
    for (std::size_t k = 0; k < fam.size(); ++k) {
      for (std::size_t i = 0; i < 4; ++i) {
        worst = std::max(worst, std::fabs(back.vec(k)[i] - fam.vec(k)[i]));
      }
    }
    CHECK(worst <= 1e-8);

    const framecert::FrameInfo fb = framecert::frame_bounds(fam);
    const framecert::FrameInfo db = framecert::frame_bounds(dual);
    CHECK(std::fabs(db.bounds.lower - 1.0 / fb.bounds.upper) <= 1e-8);
    CHECK(std::fabs(db.bounds.upper - 1.0 / fb.bounds.lower) <= 1e-8);
  }
}

TEST_CASE("independent families: sequence bounds equal riesz bounds, excess zero") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 5; ++trial) {
    std::vector<double> packed;
    for (int k = 0; k < 4; ++k) {
      const auto v = oracles::random_unit_vector(7, rng);
      packed.insert(packed.end(), v.begin(), v.end());
    }
    const VectorFamily fam(7, std::move(packed));
    const framecert::RieszInfo ri = framecert::riesz_bounds(fam);
    REQUIRE(ri.is_riesz);
    const framecert::FrameBounds seq = framecert::frame_sequence_bounds(fam);
    CHECK(std::fabs(ri.bounds.lower - seq.lower) <= 1e-9);
    CHECK(std::fabs(ri.bounds.upper - seq.upper) <= 1e-9);
    CHECK(framecert::excess(fam) == 0);
  }
}

TEST_CASE("family validation") {
  CHECK_THROWS_AS(VectorFamily::from_rows({}), framecert::Error);
  CHECK_THROWS_AS(VectorFamily::from_rows({{1.0, 0.0}, {1.0}}), framecert::Error);
  CHECK_THROWS_AS(VectorFamily(3, std::vector<double>{1.0, 2.0}), framecert::Error);
  const double nan = std::nan("");
  CHECK_THROWS_AS(VectorFamily::from_rows({{nan, 0.0}}), framecert::Error);
}
