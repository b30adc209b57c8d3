#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "basindim/dimension.hpp"
#include "basindim/presets.hpp"

using namespace basindim;

namespace {

CellSet empty_set(int nx, int ny) {
  CellSet s;
  s.grid = GridSpec{Complex{}, 1.0, 1.0, nx, ny};
  return s;
}

// straightforward box count: distinct (i / size, j / size) pairs
std::int64_t naive_count(const CellSet& s, int size) {
  std::set<std::pair<int, int>> boxes;
  for (const std::uint32_t idx : s.occupied) {
    const int i = static_cast<int>(idx % s.grid.nx), j = static_cast<int>(idx / s.grid.nx);
    boxes.emplace(i / size, j / size);
  }
  return static_cast<std::int64_t>(boxes.size());
}

CellSet random_set(int n, int points, std::uint64_t seed) {
  CellSet s = empty_set(n, n);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> u(0, n - 1);
  for (int k = 0; k < points; ++k) s.insert(u(rng), u(rng));
  return s;
}

BasinField two_halves(int n) {
  BasinField f;
  f.grid = GridSpec{Complex{}, 1.0, 1.0, n, n};
  f.period = 2;
  f.labels.resize(f.grid.size());
  f.iterations.assign(f.grid.size(), 0);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) f.labels[f.index(i, j)] = i < n / 2 ? 0 : 1;
  return f;
}

}  // namespace

TEST_SUITE("dimension") {

TEST_CASE("cell sets stay sorted and unique") {
  CellSet s = empty_set(8, 8);
  s.insert(3, 1);
  s.insert(0, 0);
  s.insert(3, 1);
  s.insert(7, 7);
  CHECK(s.occupied == std::vector<std::uint32_t>{0, 11, 63});
  CHECK(s.contains(3, 1));
  CHECK_FALSE(s.contains(1, 3));
}

TEST_CASE("box counts of simple sets") {
  const std::vector<int> sizes{1, 2, 4, 8};
  const DimensionFit full = box_count(square_fixture(256), sizes);
  CHECK(full.counts == std::vector<std::int64_t>{65536, 16384, 4096, 1024});

  CellSet one = empty_set(256, 256);
  one.insert(77, 200);
  CHECK(box_count(one, sizes).counts == std::vector<std::int64_t>{1, 1, 1, 1});

  CellSet diagonal = empty_set(256, 256);
  for (int k = 0; k < 256; ++k) diagonal.insert(k, k);
  CHECK(box_count(diagonal, sizes).counts == std::vector<std::int64_t>{256, 128, 64, 32});

  CHECK_THROWS_AS(box_count(empty_set(16, 16), sizes), std::invalid_argument);
  const std::vector<int> bad{1, 3};
  CHECK_THROWS_AS(box_count(one, bad), std::invalid_argument);
}

TEST_CASE("box counts match a direct count, including partial edge boxes") {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const CellSet s = random_set(200, 3000, seed);
    const std::vector<int> sizes{1, 2, 4, 8, 16, 32, 64};
    const DimensionFit fit = box_count(s, sizes);
    for (std::size_t k = 0; k < sizes.size(); ++k) CHECK(fit.counts[k] == naive_count(s, sizes[k]));
  }
}

TEST_CASE("property: N(2e) <= N(e) <= 4 N(2e)") {
  for (std::uint64_t seed = 10; seed < 20; ++seed) {
    const CellSet s = random_set(128, 50 + 200 * static_cast<int>(seed - 10), seed);
    const std::vector<int> sizes = dyadic_sizes(s.grid);
    const DimensionFit fit = box_count(s, sizes);
    for (std::size_t k = 0; k + 1 < sizes.size(); ++k) {
      CHECK(fit.counts[k + 1] <= fit.counts[k]);
      CHECK(fit.counts[k] <= 4 * fit.counts[k + 1]);
    }
  }
}

TEST_CASE("property: counts are invariant under translation by a multiple of the box size") {
  const CellSet s = random_set(64, 400, 3);
  CellSet shifted = empty_set(128, 128);
  for (const std::uint32_t idx : s.occupied) shifted.insert(static_cast<int>(idx % 64) + 32, static_cast<int>(idx / 64) + 16);
  const std::vector<int> sizes{1, 2, 4, 8, 16};
  CHECK(box_count(s, sizes).counts == box_count(shifted, sizes).counts);
}

TEST_CASE("dyadic sizes") {
  CHECK(dyadic_sizes(GridSpec{Complex{}, 1, 1, 1024, 1024}) ==
        std::vector<int>{1, 2, 4, 8, 16, 32, 64, 128, 256, 512});
  CHECK(dyadic_sizes(GridSpec{Complex{}, 1, 1, 300, 100}) == std::vector<int>{1, 2, 4, 8, 16, 32});
}

TEST_CASE("fit_dimension recovers an exact power law and drops coarse scales") {
  const std::vector<int> sizes{8, 1, 4, 2, 16, 32};
  std::vector<std::int64_t> counts;
  for (int s : sizes) counts.push_back(static_cast<std::int64_t>(std::llround(std::pow(1024.0 / s, 1.5))));
  const DimensionFit fit = fit_dimension(sizes, counts);
  CHECK(fit.slope == doctest::Approx(1.5).epsilon(1e-3));
  CHECK(fit.r_squared > 0.9999);
  CHECK(fit.scales == std::vector<int>{1, 2, 4, 8, 16, 32});
  CHECK(fit.fitted_scales == std::vector<int>{1, 2, 4, 8});

  const std::vector<int> few{1, 2, 4};
  const std::vector<std::int64_t> few_counts{100, 50, 25};
  CHECK_THROWS_AS(fit_dimension(few, few_counts), std::invalid_argument);
  const std::vector<std::int64_t> sparse{12, 5, 3, 2, 1, 1};
  CHECK_THROWS_AS(fit_dimension(sizes, sparse), std::invalid_argument);
}

TEST_CASE("calibration fixtures") {
  auto dimension_of = [](const CellSet& s) {
    const auto sizes = dyadic_sizes(s.grid);
    const DimensionFit counted = box_count(s, sizes);
    return fit_dimension(counted.scales, counted.counts);
  };
  const DimensionFit segment = dimension_of(segment_fixture(2048));
  CHECK(std::abs(segment.slope - 1.0) <= 0.02);
  const DimensionFit square = dimension_of(square_fixture(2048));
  CHECK(std::abs(square.slope - 2.0) <= 0.02);
  const DimensionFit cantor = dimension_of(cantor_fixture(2048, 7));
  CHECK(std::abs(cantor.slope - std::log(2.0) / std::log(3.0)) <= 0.03);
  CHECK(cantor.r_squared > 0.99);
  CHECK_THROWS_AS(cantor_fixture(64, -1), std::invalid_argument);
}

TEST_CASE("segment fixture touches every column once or twice") {
  const CellSet s = segment_fixture(256);
  std::vector<int> per_column(256, 0);
  for (const std::uint32_t idx : s.occupied) ++per_column[idx % 256];
  for (int c : per_column) {
    CHECK(c >= 1);
    CHECK(c <= 2);
  }
}

TEST_CASE("cellset serialisation round-trips") {
  const CellSet s = random_set(50, 300, 8);
  std::stringstream buffer;
  write_cellset(buffer, s);
  const CellSet back = read_cellset(buffer);
  CHECK(back == s);

  std::istringstream bad("grid 4 4\n5 0\n");
  CHECK_THROWS_AS(read_cellset(bad), std::invalid_argument);
  std::istringstream headless("1 1\n");
  CHECK_THROWS_AS(read_cellset(headless), std::invalid_argument);
}

TEST_CASE("boundary of two half-planes is the two middle columns") {
  const BasinField f = two_halves(16);
  const CellSet b = extract_boundary(f);
  CHECK(b.size() == 32);
  for (int j = 0; j < 16; ++j) {
    CHECK(b.contains(7, j));
    CHECK(b.contains(8, j));
  }
}

TEST_CASE("boundary rules for escaped pixels and pair restriction") {
  BasinField f = two_halves(8);
  f.period = 3;
  for (int j = 0; j < 8; ++j) f.labels[f.index(7, j)] = 2;
  f.labels[f.index(2, 2)] = BasinField::kEscaped;

  // the escaped pixel is marked, its basin neighbours are not
  const CellSet all = extract_boundary(f);
  CHECK(all.contains(2, 2));
  CHECK_FALSE(all.contains(1, 2));
  CHECK_FALSE(all.contains(2, 3));

  const CellSet pair01 = extract_boundary(f, std::make_pair(0, 1));
  for (int j = 0; j < 8; ++j) {
    CHECK(pair01.contains(3, j));
    CHECK(pair01.contains(4, j));
    CHECK_FALSE(pair01.contains(6, j));
    CHECK(pair01.contains(7, j));  // label 2 is uncounted, next to basin 1
  }

  BasinField single = two_halves(8);
  std::fill(single.labels.begin(), single.labels.end(), 0);
  CHECK(extract_boundary(single).empty());
}

TEST_CASE("escaping subsets shrink as M grows") {
  const Preset& p = preset("example1");
  const AttractingCycle c = find_periodic_point(p.function, p.period, p.seed);
  const BasinField field = classify_grid(p.function, c, GridSpec{Complex{}, p.window, p.window, 96, 96}, OrbitOptions{});
  const CellSet boundary = extract_boundary(field);
  REQUIRE_FALSE(boundary.empty());

  CellSet previous = boundary;
  for (double M : {5.0, 10.0, 20.0, 40.0}) {
    const CellSet hit = intersect_escaping(boundary, p.function, EscapeParams{M, 1, 50, 1e10});
    CHECK(std::includes(previous.occupied.begin(), previous.occupied.end(), hit.occupied.begin(), hit.occupied.end()));
    previous = hit;
  }
  const CellSet serial = intersect_escaping(boundary, p.function, EscapeParams{10.0, 1, 50, 1e10}, 1);
  const CellSet parallel = intersect_escaping(boundary, p.function, EscapeParams{10.0, 1, 50, 1e10}, 3);
  CHECK(serial == parallel);
}

TEST_CASE("fit serialisation") {
  const std::vector<int> sizes{1, 2, 4, 8};
  const std::vector<std::int64_t> counts{64, 32, 16, 8};
  const DimensionFit fit = fit_dimension(sizes, counts);
  const auto j = to_json(fit);
  CHECK(j["slope"].get<double>() == doctest::Approx(1.0));
  CHECK(j["scales_used"].size() == 2);
  const std::string csv = to_csv(fit);
  CHECK(csv.find("1,64") != std::string::npos);
}

}  // TEST_SUITE
