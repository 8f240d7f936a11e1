#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "haarshift/oracle.hpp"
#include "haarshift/transform2d.hpp"

using namespace haarshift;

namespace {

Grid random_grid(std::size_t w, std::size_t h, std::uint32_t seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> dist(0.0, 255.0);
  Grid g(w, h);
  for (auto& v : g.data()) v = dist(rng);
  return g;
}

}  // namespace

TEST_CASE("2-D analysis of a 2x2 block") {
  Grid g(2, 2);
  g.at(0, 0) = 4.0;
  g.at(1, 0) = 2.0;
  g.at(0, 1) = 6.0;
  g.at(1, 1) = 0.0;
  const Grid c = forward_2d(g);
  CHECK(c.at(0, 0) == 3.0);   // mean
  CHECK(c.at(1, 0) == 2.0);   // horizontal detail of column means
  CHECK(c.at(0, 1) == 0.0);   // vertical detail of row means
  CHECK(c.at(1, 1) == -1.0);  // diagonal
}

TEST_CASE("2-D round trip on rectangular grids") {
  for (const auto& [w, h] : {std::pair<std::size_t, std::size_t>{32, 16},
                             {8, 64},
                             {16, 16}}) {
    const Grid g = random_grid(w, h, static_cast<std::uint32_t>(w * 131 + h));
    const Grid back = inverse_2d(forward_2d(g));
    for (std::size_t y = 0; y < h; ++y)
      for (std::size_t x = 0; x < w; ++x)
        REQUIRE_THAT(back.at(x, y), Catch::Matchers::WithinAbs(g.at(x, y), 1e-12));
  }
}

TEST_CASE("2-D shift matches the spatial reference") {
  const Grid g = random_grid(16, 8, 90);
  const Grid coeffs = forward_2d(g);
  const std::vector<DyadicShift> shifts{
      {0, 0}, {1, 0}, {5, 0}, {12, 0}, {1, 1}, {3, 2}, {7, 3}, {11, 2}};
  for (const auto sx : shifts) {
    for (const auto sy : shifts) {
      const Grid got = shift_2d(coeffs, sx, sy);
      const Grid want = forward_2d(reference_shift_grid(g, sx, sy));
      for (std::size_t y = 0; y < g.height(); ++y)
        for (std::size_t x = 0; x < g.width(); ++x)
          REQUIRE_THAT(got.at(x, y),
                       Catch::Matchers::WithinAbs(want.at(x, y), 1e-9));
    }
  }
}

TEST_CASE("row and column shifts commute") {
  const Grid g = random_grid(32, 32, 17);
  const Grid coeffs = forward_2d(g);
  const DyadicShift sx{3, 1};
  const DyadicShift sy{5, 2};
  const Grid a = shift_2d(shift_2d(coeffs, sx, {0, 0}), {0, 0}, sy);
  const Grid b = shift_2d(shift_2d(coeffs, {0, 0}, sy), sx, {0, 0});
  for (std::size_t y = 0; y < 32; ++y)
    for (std::size_t x = 0; x < 32; ++x)
      REQUIRE_THAT(a.at(x, y), Catch::Matchers::WithinAbs(b.at(x, y), 1e-10));
}

TEST_CASE("2-D dc coefficient never changes") {
  const Grid g = random_grid(16, 16, 5);
  const Grid coeffs = forward_2d(g);
  const Grid moved = shift_2d(coeffs, {7, 2}, {9, 1});
  REQUIRE(moved.at(0, 0) == coeffs.at(0, 0));
}

TEST_CASE("2-D domain errors") {
  CHECK_THROWS_AS(forward_2d(Grid(3, 4)), std::invalid_argument);
  CHECK_THROWS_AS(forward_2d(Grid(4, 6)), std::invalid_argument);
  CHECK_THROWS_AS(Grid(0, 4), std::invalid_argument);
}
