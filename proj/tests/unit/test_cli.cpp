#include <doctest.h>
#include <json.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "maxsurf/cli.hpp"

namespace fs = std::filesystem;
using maxsurf::cli::run;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("maxsurf_test_cli_" + name);
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

std::vector<std::array<double, 3>> obj_vertices(const std::string& obj) {
  std::vector<std::array<double, 3>> v;
  std::istringstream in(obj);
  std::string line;
  while (std::getline(in, line)) {
    if (line.rfind("v ", 0) != 0) continue;
    std::istringstream ls(line.substr(2));
    std::array<double, 3> p{};
    ls >> p[0] >> p[1] >> p[2];
    v.push_back(p);
  }
  return v;
}

std::string line_starting(const std::string& text, const std::string& prefix) {
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line))
    if (line.rfind(prefix, 0) == 0) return line;
  return {};
}

}  // namespace

TEST_CASE("usage errors") {
  CHECK(call({}).code == maxsurf::cli::kUsage);
  CHECK(call({"frobnicate"}).code == maxsurf::cli::kUsage);
  CHECK(call({"surface", "torus"}).code == maxsurf::cli::kUsage);
  CHECK(call({"surface"}).code == maxsurf::cli::kUsage);
  CHECK(call({"solve"}).code == maxsurf::cli::kUsage);
  CHECK(call({"solve", "-E", "abc"}).code == maxsurf::cli::kUsage);
  CHECK(call({"surface", "cylinder", "--grid", "3by3"}).code == maxsurf::cli::kUsage);
  CHECK(call({"surface", "cylinder", "--bounds", "1:0:0:1"}).code == maxsurf::cli::kUsage);
  CHECK(call({"surface", "cylinder", "--format", "stl"}).code == maxsurf::cli::kUsage);
  CHECK(call({"verify", "nothing"}).code == maxsurf::cli::kUsage);
  CHECK(call({"verify", "cylinder", "--tol", "bogus=1"}).code == maxsurf::cli::kUsage);
  const Result help = call({"--help"});
  CHECK(help.code == maxsurf::cli::kOk);
  CHECK(help.out.find("solve") != std::string::npos);
}

TEST_CASE("grid and bounds parsing") {
  int nx = 0, ny = 0;
  CHECK(maxsurf::cli::parse_grid("21x7", nx, ny));
  CHECK(nx == 21);
  CHECK(ny == 7);
  CHECK_FALSE(maxsurf::cli::parse_grid("0x3", nx, ny));
  CHECK_FALSE(maxsurf::cli::parse_grid("3x3x3", nx, ny));
  double a, b, c, d;
  CHECK(maxsurf::cli::parse_bounds("-1:0.5:2e-1:3", a, b, c, d));
  CHECK(a == -1);
  CHECK(c == 0.2);
  CHECK_FALSE(maxsurf::cli::parse_bounds("0:1:2", a, b, c, d));
  CHECK_FALSE(maxsurf::cli::parse_bounds("0:1:2:x", a, b, c, d));
}

TEST_CASE("solve") {
  const Result r = call({"solve", "-E", "1"});
  CHECK(r.code == 0);
  CHECK(line_starting(r.out, "# branch:") == "# branch: tndn");
  CHECK(line_starting(r.out, "# mu:") == "# mu: 0");
  const Result z = call({"solve", "-E", "-1", "-v0", "0"});
  CHECK(line_starting(z.out, "# branch:") == "# branch: zero");
  const Result two = call({"solve", "-E", "2", "-v0", "0.3", "--samples", "2", "--bounds", "0.2:0.3:0:1"});
  const std::string row = line_starting(two.out, "0.2");
  REQUIRE(!row.empty());
  const double v = std::stod(row.substr(row.find(',') + 1));
  CHECK(std::abs(v - 0.850243551294504814) < 1e-12);
  CHECK(call({"solve", "-E", "-5", "-v0", "0"}).code == maxsurf::cli::kDomain);
  CHECK(call({"solve", "-E", "-6", "-v0", "1.2"}).code == maxsurf::cli::kDomain);
  CHECK(call({"solve", "-E", "2"}).out == call({"solve", "-E", "2"}).out);
}

TEST_CASE("surface") {
  const Result obj = call({"surface", "cylinder", "--grid", "21x21"});
  CHECK(obj.code == 0);
  CHECK(obj_vertices(obj.out).size() == 441);
  const Result js = call({"surface", "h2xr-min", "-E", "4", "--grid", "9x5", "--format", "json"});
  REQUIRE(js.code == 0);
  const auto doc = nlohmann::json::parse(js.out);
  CHECK(doc["vertices"].size() == 45);
  CHECK(doc["disc"] == false);
  const auto disc = nlohmann::json::parse(call({"surface", "ads-max", "-E", "4", "--disc", "--grid", "5x5", "--format", "json"}).out);
  CHECK(disc["ambient"] == "H2xR");
  CHECK(disc["disc"] == true);
  CHECK(call({"surface", "ads-max", "-E", "0"}).code == maxsurf::cli::kDomain);
  CHECK(call({"surface", "ads-max", "-E", "4", "--bounds", "0:2:0:1"}).code == maxsurf::cli::kDomain);
  const Result csv = call({"surface", "geodesic", "--grid", "2x2", "--format", "csv"});
  CHECK(csv.out.rfind("i,j,x,y,c1,c2,c3,c4\n", 0) == 0);
}

TEST_CASE("config files") {
  const fs::path dir = scratch("config");
  {
    std::ofstream f(dir / "a.ini");
    f << "energy=2\nv0=0.3\ngrid=4x3\n";
  }
  const Result fromfile = call({"solve", "--config", (dir / "a.ini").string(), "--samples", "2"});
  CHECK(fromfile.code == 0);
  CHECK(line_starting(fromfile.out, "# energy:") == "# energy: 2");
  const Result flagwins = call({"solve", "--config", (dir / "a.ini").string(), "-E", "4", "--samples", "2"});
  CHECK(line_starting(flagwins.out, "# energy:") == "# energy: 4");
  CHECK(line_starting(flagwins.out, "# v0:") == "# v0: 0.29999999999999999");
  const Result grid = call({"surface", "cylinder", "--config", (dir / "a.ini").string()});
  CHECK(obj_vertices(grid.out).size() == 12);
  CHECK(call({"solve", "--config", (dir / "missing.ini").string()}).code == maxsurf::cli::kIo);
  fs::remove_all(dir);
}

TEST_CASE("output files") {
  const fs::path dir = scratch("out");
  CHECK(call({"surface", "cylinder", "--grid", "3x3", "--out", (dir / "c.obj").string()}).code == 0);
  CHECK(obj_vertices(slurp(dir / "c.obj")).size() == 9);
  CHECK(call({"surface", "cylinder", "--out", (dir / "no" / "such" / "c.obj").string()}).code == maxsurf::cli::kIo);
  fs::remove_all(dir);
}

TEST_CASE("figures") {
  const fs::path a = scratch("figA"), b = scratch("figB");
  const Result ra = call({"figures", "--out", a.string()});
  REQUIRE(ra.code == 0);
  REQUIRE(call({"figures", "--out", b.string()}).code == 0);
  int meshes = 0;
  for (const char* tag : {"4", "1", "0.1", "-0.5", "-1", "-6"}) {
    const std::string stem = std::string("figure_E") + tag;
    CAPTURE(stem);
    CHECK(fs::exists(a / (stem + ".obj")));
    CHECK(fs::exists(a / (stem + "_top.csv")));
    CHECK(slurp(a / (stem + ".obj")) == slurp(b / (stem + ".obj")));
    CHECK(slurp(a / (stem + "_top.csv")) == slurp(b / (stem + "_top.csv")));
    meshes += obj_vertices(slurp(a / (stem + ".obj"))).size() == 61 * 61;
  }
  CHECK(meshes == 6);

  // the E = -1 figure is the disc model of the cylinder family
  const auto fig = obj_vertices(slurp(a / "figure_E-1.obj"));
  const auto cyl = obj_vertices(call({"surface", "cylinder", "--disc"}).out);
  REQUIRE(fig.size() == cyl.size());
  double worst = 0;
  for (const auto& p : fig) {
    double nearest = 1e300;
    for (const auto& q : cyl)
      nearest = std::min(nearest, std::max({std::abs(p[0] - q[0]), std::abs(p[1] - q[1]), std::abs(p[2] - q[2])}));
    worst = std::max(worst, nearest);
  }
  CHECK(worst < 1e-12);
  fs::remove_all(a);
  fs::remove_all(b);
}

TEST_CASE("verify") {
  const Result ok = call({"verify", "cylinder", "geodesic", "--grid", "11x11"});
  CHECK(ok.code == 0);
  CHECK(ok.out.find("passed: false") == std::string::npos);
  const Result js = call({"verify", "ads-max", "-E", "4", "--grid", "11x11", "--format", "json"});
  CHECK(js.code == 0);
  const auto doc = nlohmann::json::parse(js.out);
  CHECK(doc["passed"] == true);
  CHECK(doc["reports"].size() == 1);
  const Result strict = call({"verify", "cylinder", "--grid", "5x5", "--tol", "mean_curvature=1e-30"});
  CHECK(strict.code == maxsurf::cli::kVerificationFailed);
  CHECK(call({"verify", "cylinder", "--grid", "5x5", "--h", "-1"}).code == maxsurf::cli::kUsage);
  CHECK(call({"verify", "h2xr-min", "-E", "-6", "-v0", "1.25", "--grid", "9x9", "--fd-only"}).code == 0);
}
