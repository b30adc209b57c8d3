#include "basindim/render.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace basindim {

Rgb palette_color(std::int32_t label, int period) {
  if (label == BasinField::kEscaped) return {255, 255, 255};
  if (label < 0) return {0, 0, 0};
  // HSV with s = v = 1; integer sector arithmetic keeps the bytes exact.
  const double h6 = 6.0 * static_cast<double>(label) / static_cast<double>(period);
  const int sector = static_cast<int>(std::floor(h6)) % 6;
  const double frac = h6 - std::floor(h6);
  const auto up = static_cast<std::uint8_t>(std::lround(255.0 * frac));
  const auto down = static_cast<std::uint8_t>(255 - up);
  switch (sector) {
    case 0: return {255, up, 0};
    case 1: return {down, 255, 0};
    case 2: return {0, 255, up};
    case 3: return {0, down, 255};
    case 4: return {up, 0, 255};
    default: return {255, 0, down};
  }
}

std::vector<std::uint8_t> encode_ppm(const BasinField& field) {
  const std::string header =
      "P6\n" + std::to_string(field.grid.nx) + " " + std::to_string(field.grid.ny) + "\n255\n";
  std::vector<std::uint8_t> bytes(header.begin(), header.end());
  bytes.reserve(header.size() + 3 * field.labels.size());
  for (int j = field.grid.ny - 1; j >= 0; --j) {
    for (int i = 0; i < field.grid.nx; ++i) {
      const Rgb c = palette_color(field.label(i, j), field.period);
      bytes.insert(bytes.end(), c.begin(), c.end());
    }
  }
  return bytes;
}

void write_ppm(const BasinField& field, const std::filesystem::path& path) {
  const auto bytes = encode_ppm(field);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw std::runtime_error("failed writing " + path.string());
}

std::string render_metadata(const BasinField& field, const OrbitOptions& options) {
  std::ostringstream out;
  const GridSpec& g = field.grid;
  out << "center=" << format_complex(g.center) << '\n'
      << "half_width=" << format_double(g.half_width) << '\n'
      << "half_height=" << format_double(g.half_height) << '\n'
      << "nx=" << g.nx << '\n'
      << "ny=" << g.ny << '\n'
      << "row_order=top_is_max_imag\n"
      << "period=" << field.period << '\n'
      << "budget=" << options.budget << '\n'
      << "capture_radius=" << format_double(options.capture_radius) << '\n'
      << "escape_radius=" << format_double(options.escape_radius) << '\n';
  for (int j = 0; j < field.period; ++j) {
    const Rgb c = palette_color(j, field.period);
    out << "palette.basin" << j << '=' << int(c[0]) << ',' << int(c[1]) << ',' << int(c[2]) << '\n';
  }
  out << "palette.escaped=255,255,255\n"
      << "palette.undecided=0,0,0\n";
  return out.str();
}

nlohmann::ordered_json cycle_report(const AttractingCycle& cycle, double fd_multiplier_modulus) {
  nlohmann::ordered_json report;
  report["period"] = cycle.period;
  auto points = nlohmann::ordered_json::array();
  for (const Complex z : cycle.points) points.push_back({{"re", z.real()}, {"im", z.imag()}});
  report["points"] = points;
  report["multiplier"] = {{"re", cycle.multiplier.real()}, {"im", cycle.multiplier.imag()}};
  report["multiplier_modulus"] = std::abs(cycle.multiplier);
  report["multiplier_modulus_fd"] = fd_multiplier_modulus;
  report["residual"] = cycle.newton_residual;
  report["newton_steps"] = cycle.newton_steps;
  return report;
}

}  // namespace basindim
