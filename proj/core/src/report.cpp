#include "maxsurf/report.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>

#include "maxsurf/errors.hpp"

namespace maxsurf {

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string json_number(double v) { return std::isfinite(v) ? format_double(v) : "null"; }

std::string json_string(std::string_view s) {
  std::string out = "\"";
  for (char ch : s) {
    switch (ch) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(ch) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", ch);
          out += buf;
        } else {
          out += ch;
        }
    }
  }
  return out + "\"";
}

namespace {

std::string bounds_text(const Rect& r) {
  return format_double(r.x0) + ":" + format_double(r.x1) + ":" + format_double(r.y0) + ":" +
         format_double(r.y1);
}

std::string grid_json(const GridSpec& g) {
  return "{\"nx\": " + std::to_string(g.nx) + ", \"ny\": " + std::to_string(g.ny) +
         ", \"bounds\": [" + json_number(g.bounds.x0) + ", " + json_number(g.bounds.x1) + ", " +
         json_number(g.bounds.y0) + ", " + json_number(g.bounds.y1) + "]}";
}

}  // namespace

std::string VerificationReport::to_text() const {
  std::string out;
  out += "chart: " + chart + "\n";
  out += "grid: " + std::to_string(grid.nx) + "x" + std::to_string(grid.ny) + " " + bounds_text(grid.bounds) + "\n";
  for (const auto& c : checks) {
    out += c.name + ": max_residual=" + format_double(c.max_residual) + " tolerance=" + format_double(c.tolerance) +
           " passed=" + (c.passed ? "true" : "false") + "\n";
  }
  out += std::string("passed: ") + (passed() ? "true" : "false") + "\n";
  if (!notes.empty()) out += "notes: " + notes + "\n";
  return out;
}

std::string VerificationReport::to_json() const {
  std::string out = "{\"schema_version\": " + std::to_string(kSchemaVersion) + ", \"chart\": " + json_string(chart) +
                    ", \"grid\": " + grid_json(grid) + ", \"checks\": [";
  for (std::size_t i = 0; i < checks.size(); ++i) {
    const auto& c = checks[i];
    if (i) out += ", ";
    out += "{\"name\": " + json_string(c.name) + ", \"max_residual\": " + json_number(c.max_residual) +
           ", \"tolerance\": " + json_number(c.tolerance) + ", \"passed\": " + (c.passed ? "true" : "false") + "}";
  }
  out += std::string("], \"passed\": ") + (passed() ? "true" : "false") + ", \"notes\": " + json_string(notes) + "}";
  return out;
}

std::string reports_to_json(const std::vector<VerificationReport>& reports) {
  bool all = true;
  std::string out = "{\"schema_version\": " + std::to_string(kSchemaVersion) + ", \"reports\": [\n";
  for (std::size_t i = 0; i < reports.size(); ++i) {
    out += "  " + reports[i].to_json() + (i + 1 < reports.size() ? ",\n" : "\n");
    all = all && reports[i].passed();
  }
  out += std::string("], \"passed\": ") + (all ? "true" : "false") + "}\n";
  return out;
}

MeshGrid sample_mesh(const SurfaceChart& c, const GridSpec& grid, bool disc) {
  if (grid.nx < 1 || grid.ny < 1) raise(ErrorKind::EmptyGrid, "sample_mesh: grid has no nodes");
  MeshGrid m;
  m.label = c.label;
  m.ambient = c.ambient;
  m.grid = grid;
  m.disc = disc;
  const int count = grid.nx * grid.ny;
  m.points.resize(static_cast<std::size_t>(count));
  std::vector<std::string> errors(static_cast<std::size_t>(count));
  parallel_for(count, [&](int k) {
    const double x = grid_coordinate(grid.bounds.x0, grid.bounds.x1, grid.nx, k % grid.nx);
    const double y = grid_coordinate(grid.bounds.y0, grid.bounds.y1, grid.ny, k / grid.nx);
    try {
      m.points[static_cast<std::size_t>(k)] = c.eval(x, y);
    } catch (const Error& e) {
      errors[static_cast<std::size_t>(k)] = e.what();
    }
  });
  for (int k = 0; k < count; ++k)
    if (!errors[static_cast<std::size_t>(k)].empty()) raise(ErrorKind::Domain, errors[static_cast<std::size_t>(k)]);

  m.diagnostic_names = {"conformal_factor", "quadric_residual"};
  m.diagnostics.assign(2, std::vector<double>(static_cast<std::size_t>(count)));
  m.display.resize(static_cast<std::size_t>(count));
  for (int k = 0; k < count; ++k) {
    const auto idx = static_cast<std::size_t>(k);
    const double x = grid_coordinate(grid.bounds.x0, grid.bounds.x1, grid.nx, k % grid.nx);
    const double y = grid_coordinate(grid.bounds.y0, grid.bounds.y1, grid.ny, k / grid.nx);
    const Coords& p = m.points[idx];
    m.diagnostics[0][idx] = c.conformal_factor ? c.conformal_factor(x, y) : std::nan("");
    m.diagnostics[1][idx] = quadric_residual(c.ambient, p);
    switch (c.ambient) {
      case Ambient::H31: {
        const double w = std::hypot(p[2], p[3]);
        double arg = std::atan2(p[3], p[2]);
        // Unwrap against the previous node in the row (or the row below for i = 0).
        const int i = k % grid.nx;
        const int prev = i > 0 ? k - 1 : k - grid.nx;
        if (prev >= 0) {
          const double ref = m.display[static_cast<std::size_t>(prev)][2];
          arg += 2 * std::numbers::pi * std::nearbyint((ref - arg) / (2 * std::numbers::pi));
        }
        m.display[idx] = {p[0] / w, p[1] / w, arg};
        break;
      }
      case Ambient::H2xR: {
        if (disc) {
          const Vec3 q = p[0] < 0 ? Vec3{-p[0], -p[1], -p[2]} : Vec3{p[0], p[1], p[2]};
          const auto d = disc_projection(q);
          m.display[idx] = {d[0], d[1], p[3]};
        } else {
          m.display[idx] = {p[1], p[2], p[3]};
        }
        break;
      }
      case Ambient::H2xH2:
        m.display[idx] = {p[0], p[1], p[2]};
        break;
    }
  }
  return m;
}

std::string mesh_to_obj(const MeshGrid& m) {
  std::string out = "# maxsurf mesh\n# label " + m.label + "\n# ambient " + to_string(m.ambient) + "\n# grid " +
                    std::to_string(m.grid.nx) + "x" + std::to_string(m.grid.ny) + " " + bounds_text(m.grid.bounds) +
                    "\n";
  for (const auto& v : m.display)
    out += "v " + format_double(v[0]) + " " + format_double(v[1]) + " " + format_double(v[2]) + "\n";
  const int nx = m.grid.nx;
  for (int j = 0; j + 1 < m.grid.ny; ++j)
    for (int i = 0; i + 1 < nx; ++i) {
      const int k = j * nx + i + 1;
      out += "f " + std::to_string(k) + " " + std::to_string(k + 1) + " " + std::to_string(k + 1 + nx) + " " +
             std::to_string(k + nx) + "\n";
    }
  return out;
}

std::string mesh_to_json(const MeshGrid& m) {
  const int dim = ambient_dimension(m.ambient);
  std::string out = "{\n\"schema_version\": " + std::to_string(kSchemaVersion) + ",\n\"label\": " +
                    json_string(m.label) + ",\n\"ambient\": " + json_string(to_string(m.ambient)) +
                    ",\n\"grid\": " + grid_json(m.grid) + ",\n\"disc\": " + (m.disc ? "true" : "false") +
                    ",\n\"vertices\": [";
  for (std::size_t k = 0; k < m.points.size(); ++k) {
    out += k ? ",\n  [" : "\n  [";
    for (int i = 0; i < dim; ++i) out += (i ? ", " : "") + json_number(m.points[k][static_cast<std::size_t>(i)]);
    out += "]";
  }
  out += "\n],\n\"display\": [";
  for (std::size_t k = 0; k < m.display.size(); ++k) {
    out += k ? ",\n  [" : "\n  [";
    out += json_number(m.display[k][0]) + ", " + json_number(m.display[k][1]) + ", " + json_number(m.display[k][2]) + "]";
  }
  out += "\n],\n\"diagnostics\": {";
  for (std::size_t d = 0; d < m.diagnostic_names.size(); ++d) {
    out += (d ? ",\n  " : "\n  ") + json_string(m.diagnostic_names[d]) + ": [";
    for (std::size_t k = 0; k < m.diagnostics[d].size(); ++k) out += (k ? ", " : "") + json_number(m.diagnostics[d][k]);
    out += "]";
  }
  out += "\n},\n\"faces\": [";
  const int nx = m.grid.nx;
  bool first = true;
  for (int j = 0; j + 1 < m.grid.ny; ++j)
    for (int i = 0; i + 1 < nx; ++i) {
      const int k = j * nx + i;
      out += (first ? "\n  [" : ",\n  [") + std::to_string(k) + ", " + std::to_string(k + 1) + ", " +
             std::to_string(k + 1 + nx) + ", " + std::to_string(k + nx) + "]";
      first = false;
    }
  out += "\n]\n}\n";
  return out;
}

std::string mesh_to_csv(const MeshGrid& m) {
  const int dim = ambient_dimension(m.ambient);
  std::string out = "i,j,x,y";
  for (int i = 0; i < dim; ++i) out += ",c" + std::to_string(i + 1);
  out += "\n";
  for (std::size_t k = 0; k < m.points.size(); ++k) {
    const int i = static_cast<int>(k) % m.grid.nx, j = static_cast<int>(k) / m.grid.nx;
    out += std::to_string(i) + "," + std::to_string(j) + "," +
           format_double(grid_coordinate(m.grid.bounds.x0, m.grid.bounds.x1, m.grid.nx, i)) + "," +
           format_double(grid_coordinate(m.grid.bounds.y0, m.grid.bounds.y1, m.grid.ny, j));
    for (int c = 0; c < dim; ++c) out += "," + format_double(m.points[k][static_cast<std::size_t>(c)]);
    out += "\n";
  }
  return out;
}

std::string mesh_top_view_csv(const MeshGrid& m) {
  std::string out = "i,j,u,v\n";
  for (std::size_t k = 0; k < m.display.size(); ++k) {
    const int i = static_cast<int>(k) % m.grid.nx, j = static_cast<int>(k) / m.grid.nx;
    out += std::to_string(i) + "," + std::to_string(j) + "," + format_double(m.display[k][0]) + "," +
           format_double(m.display[k][1]) + "\n";
  }
  return out;
}

}  // namespace maxsurf
