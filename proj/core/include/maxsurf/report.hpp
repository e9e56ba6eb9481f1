#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "maxsurf/diffgeo.hpp"

namespace maxsurf {

/// %.17g; non-finite values print as nan / inf / -inf.
std::string format_double(double v);
/// JSON number (null for non-finite values).
std::string json_number(double v);
std::string json_string(std::string_view s);

/// Sampled surface ready for export. Vertices are stored row-major with x fastest.
struct MeshGrid {
  std::string label;
  Ambient ambient = Ambient::H31;
  GridSpec grid;
  bool disc = false;
  std::vector<Coords> points;
  std::vector<std::array<double, 3>> display;
  std::vector<std::string> diagnostic_names;
  std::vector<std::vector<double>> diagnostics;
};

/// Samples a chart on a grid. Display coordinates: H31 points as
/// (Re z/|w|, Im z/|w|, arg w unwrapped along the grid); H2xR points as
/// (disc_u, disc_v, t) when disc is set, else (q2, q3, t).
MeshGrid sample_mesh(const SurfaceChart& c, const GridSpec& grid, bool disc);

std::string mesh_to_obj(const MeshGrid& m);
std::string mesh_to_json(const MeshGrid& m);
std::string mesh_to_csv(const MeshGrid& m);
/// Top view: first two display coordinates per vertex.
std::string mesh_top_view_csv(const MeshGrid& m);

inline constexpr int kSchemaVersion = 1;

}  // namespace maxsurf
