#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "basindim/dynamics.hpp"

namespace basindim {

using Rgb = std::array<std::uint8_t, 3>;

/// basin(j) -> fully saturated hue j/p, escaped -> white, undecided -> black.
Rgb palette_color(std::int32_t label, int period);

/// Binary P6 image, top row = largest imaginary part.
std::vector<std::uint8_t> encode_ppm(const BasinField& field);
void write_ppm(const BasinField& field, const std::filesystem::path& path);

/// Sidecar text: window, pixel counts, orbit options, palette map.
std::string render_metadata(const BasinField& field, const OrbitOptions& options);

/// Period, points, multiplier and residual of a cycle.
nlohmann::ordered_json cycle_report(const AttractingCycle& cycle, double fd_multiplier_modulus);

}  // namespace basindim
