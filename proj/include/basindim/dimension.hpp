#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include <json.hpp>

#include "basindim/dynamics.hpp"

namespace basindim {

/// A set of pixels of a grid, stored as sorted linear indices i + nx*j.
struct CellSet {
  GridSpec grid;
  std::vector<std::uint32_t> occupied;

  std::size_t size() const { return occupied.size(); }
  bool empty() const { return occupied.empty(); }
  void insert(int i, int j);  // keeps `occupied` sorted and unique
  bool contains(int i, int j) const;
  friend bool operator==(const CellSet& a, const CellSet& b) {
    return a.grid.nx == b.grid.nx && a.grid.ny == b.grid.ny && a.occupied == b.occupied;
  }
};

/// Basin pixels with a 4-neighbour in a different basin, plus escaped or
/// undecided pixels with a basin 4-neighbour. A basin pixel is never marked
/// just for touching an escaped or undecided pixel. With `pair`, only the
/// labels j1 and j2 count as basins. A single-label field gives an empty set.
CellSet extract_boundary(const BasinField& field, std::optional<std::pair<int, int>> pair = std::nullopt);

/// Keeps the cells whose pixel center passes escape_membership.
CellSet intersect_escaping(const CellSet& cells, const FunctionSpec& f, const EscapeParams& params, int workers = 1);

struct DimensionFit {
  std::vector<int> scales;             // box sizes in pixels
  std::vector<std::int64_t> counts;    // N(eps)
  std::vector<int> fitted_scales;      // scales that entered the regression
  double slope = 0.0;
  double r_squared = 0.0;
};

/// N(eps) for each dyadic box size; boxes tile the grid from (0, 0), with a
/// partial box at the far edges. Throws std::invalid_argument on an empty set
/// or a non-power-of-two size.
DimensionFit box_count(const CellSet& cells, std::span<const int> sizes);

/// Least-squares slope of log N against log(1/eps). The two coarsest scales
/// and any scale with N < 10 are excluded; at least two scales must remain
/// and the input needs at least four.
DimensionFit fit_dimension(std::span<const int> sizes, std::span<const std::int64_t> counts);

/// Dyadic sizes 1, 2, 4, ... up to the largest not exceeding min(nx, ny)/2.
std::vector<int> dyadic_sizes(const GridSpec& grid);

nlohmann::ordered_json to_json(const DimensionFit& fit);
std::string to_csv(const DimensionFit& fit);

/// `grid nx ny` followed by one `i j` line per cell.
void write_cellset(std::ostream& out, const CellSet& cells);
CellSet read_cellset(std::istream& in);

// Calibration sets on an n x n grid.
CellSet segment_fixture(int n);
CellSet square_fixture(int n);
/// Row 0 of an n x n grid marked where the depth-`depth` middle-thirds
/// Cantor intervals, scaled to [0, n], cover a pixel.
CellSet cantor_fixture(int n, int depth);

}  // namespace basindim
