#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "linespace/geodesic.hpp"
#include "linespace/jets.hpp"
#include "linespace/minimal.hpp"
#include "linespace/space.hpp"

// File formats.  CSV uses '.' decimals and 17 significant digits (round-trip
// safe for doubles); OBJ uses right-handed axes (x1, x2, x3) with quads split
// into triangles.

namespace linespace {

// %.17g formatting of one double.
std::string format_double(double v);

class CsvWriter {
 public:
  explicit CsvWriter(std::ostream& out) : out_(out) {}

  void header(const std::vector<std::string>& names);
  void row(const std::vector<double>& values);
  void comment(const std::string& text);

 private:
  std::ostream& out_;
};

// Vertices laid out row-major over an (nu x nv) grid; faces triangulated.
void write_obj_grid(std::ostream& out, const std::vector<SpacePoint>& pts,
                    std::size_t nu, std::size_t nv);

// Section JSON:
//   {"space": "euclidean"|"lorentzian", "kind": "polynomial",
//    "coeffs": [[m, n, re, im], ...]}               (F = sum c_mn xi^m xibar^n)
// Throws std::invalid_argument with a diagnostic on malformed input.
struct SectionFile {
  SpaceKind space;
  BiPoly poly;
};
SectionFile parse_section_json(const std::string& text);

// Weierstrass JSON: {"space": ..., "w": [[re, im], ...]} (ascending powers).
struct WeierstrassFile {
  SpaceKind space;
  HoloPoly w;
};
WeierstrassFile parse_weierstrass_json(const std::string& text);

std::string read_file(const std::string& path);

}  // namespace linespace
