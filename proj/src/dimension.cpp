#include "basindim/dimension.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "basindim/parallel.hpp"

namespace basindim {

void CellSet::insert(int i, int j) {
  const auto key = static_cast<std::uint32_t>(j) * static_cast<std::uint32_t>(grid.nx) + static_cast<std::uint32_t>(i);
  const auto it = std::lower_bound(occupied.begin(), occupied.end(), key);
  if (it == occupied.end() || *it != key) occupied.insert(it, key);
}

bool CellSet::contains(int i, int j) const {
  const auto key = static_cast<std::uint32_t>(j) * static_cast<std::uint32_t>(grid.nx) + static_cast<std::uint32_t>(i);
  return std::binary_search(occupied.begin(), occupied.end(), key);
}

CellSet extract_boundary(const BasinField& field, std::optional<std::pair<int, int>> pair) {
  const GridSpec& g = field.grid;
  auto counted = [&](std::int32_t label) {
    if (label < 0) return false;
    return !pair || label == pair->first || label == pair->second;
  };

  CellSet out;
  out.grid = g;
  constexpr int di[4] = {1, -1, 0, 0};
  constexpr int dj[4] = {0, 0, 1, -1};
  for (int j = 0; j < g.ny; ++j) {
    for (int i = 0; i < g.nx; ++i) {
      const std::int32_t own = field.label(i, j);
      const bool own_counted = counted(own);
      bool boundary = false;
      for (int k = 0; k < 4 && !boundary; ++k) {
        const int a = i + di[k], b = j + dj[k];
        if (a < 0 || b < 0 || a >= g.nx || b >= g.ny) continue;
        const std::int32_t other = field.label(a, b);
        if (!counted(other)) continue;
        boundary = !own_counted || other != own;
      }
      if (boundary) out.occupied.push_back(static_cast<std::uint32_t>(field.index(i, j)));
    }
  }
  return out;
}

CellSet intersect_escaping(const CellSet& cells, const FunctionSpec& f, const EscapeParams& params, int workers) {
  params.validate();
  std::vector<std::uint8_t> keep(cells.occupied.size(), 0);
  const int nx = cells.grid.nx;
  parallel_for(cells.occupied.size(), workers, [&](std::size_t k) {
    const std::uint32_t idx = cells.occupied[k];
    const Complex z = cells.grid.pixel_center(static_cast<int>(idx % nx), static_cast<int>(idx / nx));
    keep[k] = escape_membership(f, z, params).escaping ? 1 : 0;
  });
  CellSet out;
  out.grid = cells.grid;
  for (std::size_t k = 0; k < keep.size(); ++k) {
    if (keep[k]) out.occupied.push_back(cells.occupied[k]);
  }
  return out;
}

DimensionFit box_count(const CellSet& cells, std::span<const int> sizes) {
  if (cells.empty()) throw std::invalid_argument("box_count: empty cell set");
  if (sizes.empty()) throw std::invalid_argument("box_count: no box sizes");
  int largest = 1;
  for (const int s : sizes) {
    if (s < 1 || !std::has_single_bit(static_cast<unsigned>(s))) {
      throw std::invalid_argument("box_count: sizes must be powers of two");
    }
    largest = std::max(largest, s);
  }

  // Occupancy pyramid: level k holds boxes of side 2^k.
  int w = cells.grid.nx, h = cells.grid.ny;
  std::vector<std::uint8_t> level(static_cast<std::size_t>(w) * h, 0);
  for (const std::uint32_t idx : cells.occupied) level[idx] = 1;

  DimensionFit fit;
  fit.scales.assign(sizes.begin(), sizes.end());
  fit.counts.assign(sizes.size(), 0);
  for (int size = 1;; size *= 2) {
    std::int64_t count = 0;
    for (const std::uint8_t v : level) count += v;
    for (std::size_t k = 0; k < sizes.size(); ++k) {
      if (sizes[k] == size) fit.counts[k] = count;
    }
    if (size >= largest) break;
    const int w2 = (w + 1) / 2, h2 = (h + 1) / 2;
    std::vector<std::uint8_t> next(static_cast<std::size_t>(w2) * h2, 0);
    for (int j = 0; j < h; ++j) {
      for (int i = 0; i < w; ++i) {
        if (level[static_cast<std::size_t>(j) * w + i]) next[static_cast<std::size_t>(j / 2) * w2 + i / 2] = 1;
      }
    }
    level = std::move(next);
    w = w2;
    h = h2;
  }
  return fit;
}

DimensionFit fit_dimension(std::span<const int> sizes, std::span<const std::int64_t> counts) {
  if (sizes.size() != counts.size()) throw std::invalid_argument("fit_dimension: sizes/counts length mismatch");
  if (sizes.size() < 4) throw std::invalid_argument("fit_dimension: need at least 4 scales");

  std::vector<std::size_t> order(sizes.size());
  for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return sizes[a] < sizes[b]; });

  DimensionFit fit;
  for (const std::size_t k : order) {
    fit.scales.push_back(sizes[k]);
    fit.counts.push_back(counts[k]);
  }
  std::vector<double> xs, ys;
  for (std::size_t k = 0; k + 2 < fit.scales.size(); ++k) {
    if (fit.counts[k] < 10) continue;
    fit.fitted_scales.push_back(fit.scales[k]);
    xs.push_back(-std::log(static_cast<double>(fit.scales[k])));
    ys.push_back(std::log(static_cast<double>(fit.counts[k])));
  }
  if (xs.size() < 2) throw std::invalid_argument("fit_dimension: fewer than two usable scales");

  const double n = static_cast<double>(xs.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t k = 0; k < xs.size(); ++k) {
    mx += xs[k];
    my += ys[k];
  }
  mx /= n;
  my /= n;
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (std::size_t k = 0; k < xs.size(); ++k) {
    sxx += (xs[k] - mx) * (xs[k] - mx);
    sxy += (xs[k] - mx) * (ys[k] - my);
    syy += (ys[k] - my) * (ys[k] - my);
  }
  if (sxx == 0.0) throw std::invalid_argument("fit_dimension: degenerate fit (no spread in scale)");
  fit.slope = sxy / sxx;
  const double intercept = my - fit.slope * mx;
  double ss_res = 0.0;
  for (std::size_t k = 0; k < xs.size(); ++k) {
    const double r = ys[k] - (intercept + fit.slope * xs[k]);
    ss_res += r * r;
  }
  fit.r_squared = syy > 0.0 ? std::clamp(1.0 - ss_res / syy, 0.0, 1.0) : 1.0;
  return fit;
}

std::vector<int> dyadic_sizes(const GridSpec& grid) {
  std::vector<int> sizes;
  const int limit = std::min(grid.nx, grid.ny) / 2;
  for (int s = 1; s <= limit; s *= 2) sizes.push_back(s);
  return sizes;
}

nlohmann::ordered_json to_json(const DimensionFit& fit) {
  nlohmann::ordered_json j;
  j["slope"] = fit.slope;
  j["r_squared"] = fit.r_squared;
  j["scales_used"] = fit.fitted_scales;
  j["scales"] = fit.scales;
  j["counts"] = fit.counts;
  return j;
}

std::string to_csv(const DimensionFit& fit) {
  std::ostringstream out;
  out << "epsilon,count\n";
  for (std::size_t k = 0; k < fit.scales.size(); ++k) out << fit.scales[k] << ',' << fit.counts[k] << '\n';
  return out.str();
}

void write_cellset(std::ostream& out, const CellSet& cells) {
  const int nx = cells.grid.nx;
  out << "grid " << nx << ' ' << cells.grid.ny << '\n';
  for (const std::uint32_t idx : cells.occupied) out << idx % nx << ' ' << idx / nx << '\n';
}

CellSet read_cellset(std::istream& in) {
  std::string tag;
  CellSet cells;
  if (!(in >> tag >> cells.grid.nx >> cells.grid.ny) || tag != "grid") {
    throw std::invalid_argument("cell set must start with 'grid nx ny'");
  }
  cells.grid.validate();
  int i = 0, j = 0;
  while (in >> i >> j) {
    if (i < 0 || j < 0 || i >= cells.grid.nx || j >= cells.grid.ny) {
      throw std::invalid_argument("cell index outside the grid");
    }
    cells.occupied.push_back(static_cast<std::uint32_t>(j) * cells.grid.nx + static_cast<std::uint32_t>(i));
  }
  if (!in.eof()) throw std::invalid_argument("malformed cell line");
  std::sort(cells.occupied.begin(), cells.occupied.end());
  cells.occupied.erase(std::unique(cells.occupied.begin(), cells.occupied.end()), cells.occupied.end());
  return cells;
}

namespace {
CellSet blank(int nx, int ny) {
  CellSet c;
  c.grid.nx = nx;
  c.grid.ny = ny;
  c.grid.half_width = 0.5;
  c.grid.half_height = 0.5 * ny / nx;
  c.grid.center = Complex{0.5, 0.5 * ny / nx};
  return c;
}
}  // namespace

CellSet segment_fixture(int n) {
  // Segment from (0, n/5) to (n, 4n/5), every pixel it passes through.
  CellSet c = blank(n, n);
  for (int i = 0; i < n; ++i) {
    const long lo = (static_cast<long>(n) + 3L * i) / 5;
    const long hi = (static_cast<long>(n) + 3L * i + 3 + 4) / 5 - 1;
    for (long j = lo; j <= hi && j < n; ++j) {
      c.occupied.push_back(static_cast<std::uint32_t>(j * n + i));
    }
  }
  std::sort(c.occupied.begin(), c.occupied.end());
  return c;
}

CellSet square_fixture(int n) {
  CellSet c = blank(n, n);
  c.occupied.resize(static_cast<std::size_t>(n) * n);
  for (std::size_t k = 0; k < c.occupied.size(); ++k) c.occupied[k] = static_cast<std::uint32_t>(k);
  return c;
}

CellSet cantor_fixture(int n, int depth) {
  if (depth < 0 || depth > 30) throw std::invalid_argument("cantor_fixture: depth out of range");
  std::int64_t intervals = 1;
  for (int k = 0; k < depth; ++k) intervals *= 3;
  CellSet c = blank(n, n);
  // Closed interval [k, k+1] / 3^depth maps onto pixels floor(k n / 3^depth)
  // through ceil((k+1) n / 3^depth) - 1.
  for (std::int64_t k = 0; k < intervals; ++k) {
    bool kept = true;
    for (std::int64_t v = k; v > 0 && kept; v /= 3) kept = (v % 3) != 1;
    if (!kept) continue;
    const std::int64_t lo = k * n / intervals;
    const std::int64_t hi = std::max(lo, ((k + 1) * n + intervals - 1) / intervals - 1);
    for (std::int64_t i = lo; i <= hi && i < n; ++i) {
      if (c.occupied.empty() || c.occupied.back() != static_cast<std::uint32_t>(i)) {
        c.occupied.push_back(static_cast<std::uint32_t>(i));
      }
    }
  }
  return c;
}

}  // namespace basindim
