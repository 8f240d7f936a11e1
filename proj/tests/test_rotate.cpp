#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "haarshift/oracle.hpp"
#include "haarshift/rotate.hpp"

using namespace haarshift;

namespace {

Image gaussian_blob(std::size_t side, double cx, double cy, double sigma) {
  Grid g(side, side);
  for (std::size_t y = 0; y < side; ++y)
    for (std::size_t x = 0; x < side; ++x) {
      const double dx = (static_cast<double>(x) + 0.5) - cx;
      const double dy = (static_cast<double>(y) + 0.5) - cy;
      g.at(x, y) = 200.0 * std::exp(-(dx * dx + dy * dy) / (2.0 * sigma * sigma));
    }
  return make_image(std::move(g));
}

Grid random_grid(std::size_t w, std::size_t h, std::uint32_t seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> dist(0.0, 255.0);
  Grid g(w, h);
  for (auto& v : g.data()) v = dist(rng);
  return g;
}

double grid_rms(const Grid& a, const Grid& b) {
  double acc = 0.0;
  for (std::size_t i = 0; i < a.data().size(); ++i) {
    const double d = a.data()[i] - b.data()[i];
    acc += d * d;
  }
  return std::sqrt(acc / static_cast<double>(a.data().size()));
}

}  // namespace

TEST_CASE("lattice quantization rounds half to even") {
  CHECK(quantize_to_lattice(0.5, 0) == 0);
  CHECK(quantize_to_lattice(1.5, 0) == 2);
  CHECK(quantize_to_lattice(2.5, 0) == 2);
  CHECK(quantize_to_lattice(-0.5, 0) == 0);
  CHECK(quantize_to_lattice(0.3, 3) == 2);  // 2.4 -> 2
  CHECK(quantize_to_lattice(-0.3, 3) == -2);
  CHECK(quantize_to_lattice(0.69, 3) == 6);  // 5.52 -> 6
}

TEST_CASE("negative lattice counts wrap into the period") {
  const DyadicShift a = wrap_shift(-3, 0, 4);
  CHECK(a.numerator == 13);
  CHECK(a.precision == 0);
  const DyadicShift b = wrap_shift(-1, 2, 3);
  CHECK(b.numerator == 31);
  CHECK(b.precision == 2);
  const DyadicShift c = wrap_shift(35, 0, 5);
  CHECK(c.numerator == 3);
}

TEST_CASE("row shear in the Haar domain matches the spatial oracle") {
  const Grid img = random_grid(32, 16, 61);
  const int h = 3;
  const double factor = 0.37;

  Grid coeffs(32, 16);
  for (std::size_t y = 0; y < 16; ++y) {
    const HaarTransform t = forward(img.row(y), 5);
    const auto c = t.coefficients();
    std::copy(c.begin(), c.end(), coeffs.row(y).begin());
  }
  shear_rows(coeffs, factor, h);

  for (std::size_t y = 0; y < 16; ++y) {
    const double offset = (static_cast<double>(y) + 0.5) - 8.0;
    const DyadicShift sh = wrap_shift(quantize_to_lattice(factor * offset, h), h, 5);
    const auto want = reference_shift_spatial(img.row(y), sh);
    const HaarTransform moved(5, 5, {coeffs.row(y).begin(), coeffs.row(y).end()});
    const auto got = inverse(moved);
    for (std::size_t x = 0; x < 32; ++x)
      REQUIRE_THAT(got[x], Catch::Matchers::WithinAbs(want[x], 1e-9));
  }
}

TEST_CASE("column shear is the transposed row shear") {
  const Grid img = random_grid(16, 16, 73);
  Grid rows(16, 16), cols(16, 16);
  for (std::size_t y = 0; y < 16; ++y) {
    const HaarTransform t = forward(img.row(y), 4);
    const auto c = t.coefficients();
    std::copy(c.begin(), c.end(), rows.row(y).begin());
    cols.set_column(y, c);  // transpose: line y becomes column y
  }
  shear_rows(rows, 0.41, 2);
  shear_cols(cols, 0.41, 2);
  for (std::size_t y = 0; y < 16; ++y)
    for (std::size_t x = 0; x < 16; ++x)
      REQUIRE(cols.at(y, x) == rows.at(x, y));
}

TEST_CASE("quarter turns are exact permutations") {
  Image img = make_image(random_grid(8, 8, 19));
  const Image r1 = rotate_quarter(img, 1);
  CHECK(r1.pixels.at(0, 0) == img.pixels.at(0, 7));
  CHECK(r1.pixels.at(7, 0) == img.pixels.at(0, 0));
  CHECK(r1.pixels.at(0, 7) == img.pixels.at(7, 7));

  const Image r2 = rotate_quarter(img, 2);
  CHECK(r2.pixels.at(0, 0) == img.pixels.at(7, 7));

  const Image r3 = rotate_quarter(img, 3);
  CHECK(r3.pixels.at(0, 0) == img.pixels.at(7, 0));

  // four turns come back around
  const Image full = rotate_quarter(rotate_quarter(r2, 1), 1);
  for (std::size_t i = 0; i < img.pixels.data().size(); ++i)
    REQUIRE(full.pixels.data()[i] == img.pixels.data()[i]);

  // two single turns equal one double turn
  const Image twice = rotate_quarter(r1, 1);
  for (std::size_t i = 0; i < img.pixels.data().size(); ++i)
    REQUIRE(twice.pixels.data()[i] == r2.pixels.data()[i]);

  CHECK(rotate_quarter(img, -1).pixels.at(0, 0) == r3.pixels.at(0, 0));
  CHECK_THROWS_AS(rotate_quarter(make_image(Grid(8, 4)), 1), std::invalid_argument);
}

TEST_CASE("quarter turns carry the content rectangle along") {
  Image img = make_image(Grid(256, 256, 0.0));
  img.original_rect = {78, 88, 100, 80};
  const Image r1 = rotate_quarter(img, 1);
  CHECK(r1.original_rect.x == 256 - 88 - 80);
  CHECK(r1.original_rect.y == 78);
  CHECK(r1.original_rect.width == 80);
  CHECK(r1.original_rect.height == 100);
  const Image r4 = rotate_quarter(rotate_quarter(rotate_quarter(r1, 1), 1), 1);
  CHECK(r4.original_rect.x == img.original_rect.x);
  CHECK(r4.original_rect.y == img.original_rect.y);
}

TEST_CASE("haar rotation by exact quarter angles is the permutation") {
  const Image img = make_image(random_grid(16, 16, 99));
  const Image a = rotate_haar(img, std::numbers::pi / 2.0, 3);
  const Image b = rotate_quarter(img, 1);
  for (std::size_t i = 0; i < img.pixels.data().size(); ++i)
    REQUIRE(a.pixels.data()[i] == b.pixels.data()[i]);

  const Image c = rotate_haar(img, -std::numbers::pi, 3);
  const Image d = rotate_quarter(img, 2);
  for (std::size_t i = 0; i < img.pixels.data().size(); ++i)
    REQUIRE(c.pixels.data()[i] == d.pixels.data()[i]);

  const Image e = rotate_haar(img, 0.0, 3);
  for (std::size_t i = 0; i < img.pixels.data().size(); ++i)
    REQUIRE(e.pixels.data()[i] == img.pixels.data()[i]);
}

TEST_CASE("haar rotation turns the same way as the kernel baselines") {
  const Image img = gaussian_blob(64, 42.0, 36.0, 7.0);
  const double theta = std::numbers::pi / 6.0;
  const Image ours = rotate_haar(img, theta, 4);
  const Image ref = rotate_baseline(img, {theta, 0, InterpMethod::bicubic});
  CHECK(grid_rms(ours.pixels, ref.pixels) < 3.0);
  // sanity: the opposite rotation is far away
  const Image wrong = rotate_baseline(img, {-theta, 0, InterpMethod::bicubic});
  CHECK(grid_rms(ours.pixels, wrong.pixels) > 20.0);
}

TEST_CASE("finer shift lattices track the true rotation better") {
  const Image img = gaussian_blob(64, 36.0, 30.0, 6.0);
  const double theta = std::numbers::pi / 8.0;
  const Rect region{16, 16, 32, 32};
  const Image ref = rotate_reference_supersampled(img, theta, 4, region);
  const double coarse = rms_error(rotate_haar(img, theta, 0), ref, region);
  const double fine = rms_error(rotate_haar(img, theta, 3), ref, region);
  CHECK(fine < coarse);
}

TEST_CASE("rotation domain errors") {
  const Image img = make_image(Grid(48, 48, 1.0));
  CHECK_THROWS_AS(rotate_haar(img, 0.1, 3), std::invalid_argument);
  CHECK_THROWS_AS(rotate_haar(make_image(Grid(16, 16)), 0.1, -1),
                  std::invalid_argument);
  // kernel baselines are fine with arbitrary sizes
  const Image ok = rotate(img, {0.1, 3, InterpMethod::bilinear});
  CHECK(ok.width() == 48);
}
