#include <doctest.h>

#include <cstdlib>
#include <sstream>
#include <stdexcept>

#include "linespace/io.hpp"
#include "linespace/rng.hpp"

using namespace linespace;

TEST_CASE("format_double round-trips") {
  Rng rng(503);
  for (int k = 0; k < 200; ++k) {
    const double v = (rng.uniform() - 0.5) * std::pow(10.0, rng.uniform(-12.0, 12.0));
    CHECK(std::strtod(format_double(v).c_str(), nullptr) == v);
  }
  CHECK(format_double(0.0) == "0");
  CHECK(format_double(0.5) == "0.5");
}

TEST_CASE("csv writer") {
  std::ostringstream os;
  CsvWriter csv(os);
  csv.header({"a", "b"});
  csv.row({1.0, -2.5});
  csv.comment("note");
  CHECK(os.str() == "a,b\n1,-2.5\n# note\n");
}

TEST_CASE("obj grid") {
  std::ostringstream os;
  std::vector<SpacePoint> pts{{{0, 0}, 0}, {{1, 0}, 0}, {{0, 1}, 1}, {{1, 1}, 1}};
  write_obj_grid(os, pts, 2, 2);
  const std::string s = os.str();
  int vcount = 0, fcount = 0;
  std::istringstream is(s);
  std::string line;
  while (std::getline(is, line)) {
    if (line.rfind("v ", 0) == 0) ++vcount;
    if (line.rfind("f ", 0) == 0) ++fcount;
  }
  CHECK(vcount == 4);
  CHECK(fcount == 2);
  CHECK_THROWS_AS(write_obj_grid(os, pts, 3, 2), std::invalid_argument);
}

TEST_CASE("section json") {
  const SectionFile sf = parse_section_json(
      R"({"space":"euclidean","kind":"polynomial","coeffs":[[1,0,0.5,0],[2,1,0,-1]]})");
  CHECK(sf.space.euclidean());
  CHECK(sf.poly.at(1, 0) == complex(0.5, 0.0));
  CHECK(sf.poly.at(2, 1) == complex(0.0, -1.0));

  CHECK_THROWS_AS(parse_section_json("{nope"), std::invalid_argument);
  CHECK_THROWS_AS(parse_section_json(R"({"space":"euclidean"})"), std::invalid_argument);
  CHECK_THROWS_AS(parse_section_json(
                      R"({"space":"weird","kind":"polynomial","coeffs":[]})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(parse_section_json(
                      R"({"space":"euclidean","kind":"fourier","coeffs":[]})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(parse_section_json(
                      R"({"space":"euclidean","kind":"polynomial","coeffs":[[1,2,3]]})"),
                  std::invalid_argument);
}

TEST_CASE("weierstrass json") {
  const WeierstrassFile wf =
      parse_weierstrass_json(R"({"space":"lorentzian","w":[[0,0],[0,0],[0,0],[1,0]]})");
  CHECK(wf.space.lorentzian());
  CHECK(wf.w.coeffs().size() == 4);
  CHECK(wf.w.coeffs()[3] == complex(1.0, 0.0));

  CHECK_THROWS_AS(parse_weierstrass_json("[]"), std::invalid_argument);
  CHECK_THROWS_AS(parse_weierstrass_json(R"({"space":"lorentzian","w":[[1]]})"),
                  std::invalid_argument);
}
