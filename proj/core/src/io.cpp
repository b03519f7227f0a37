#include "linespace/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace linespace {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void CsvWriter::header(const std::vector<std::string>& names) {
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (i) out_ << ',';
    out_ << names[i];
  }
  out_ << '\n';
}

void CsvWriter::row(const std::vector<double>& values) {
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out_ << ',';
    out_ << format_double(values[i]);
  }
  out_ << '\n';
}

void CsvWriter::comment(const std::string& text) { out_ << "# " << text << '\n'; }

void write_obj_grid(std::ostream& out, const std::vector<SpacePoint>& pts,
                    std::size_t nu, std::size_t nv) {
  if (pts.size() != nu * nv) throw std::invalid_argument("grid size mismatch");
  for (const SpacePoint& p : pts) {
    out << "v " << format_double(p.z.real()) << ' ' << format_double(p.z.imag()) << ' '
        << format_double(p.t) << '\n';
  }
  // quad (i,j)-(i+1,j)-(i+1,j+1)-(i,j+1) split into two triangles; 1-based
  for (std::size_t i = 0; i + 1 < nu; ++i) {
    for (std::size_t j = 0; j + 1 < nv; ++j) {
      const std::size_t a = i * nv + j + 1;
      const std::size_t b = (i + 1) * nv + j + 1;
      const std::size_t c = (i + 1) * nv + j + 2;
      const std::size_t d = i * nv + j + 2;
      out << "f " << a << ' ' << b << ' ' << c << '\n';
      out << "f " << a << ' ' << c << ' ' << d << '\n';
    }
  }
}

namespace {

SpaceKind parse_space_name(const std::string& name) {
  if (name == "euclidean") return kEuclidean;
  if (name == "lorentzian") return kLorentzian;
  throw std::invalid_argument("unknown space '" + name + "' (expected euclidean|lorentzian)");
}

}  // namespace

SectionFile parse_section_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("section file is not valid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("space") || !j.contains("kind") || !j.contains("coeffs")) {
    throw std::invalid_argument("section file needs keys: space, kind, coeffs");
  }
  SectionFile out{parse_space_name(j["space"].get<std::string>()), BiPoly{}};
  if (j["kind"].get<std::string>() != "polynomial") {
    throw std::invalid_argument("only kind=\"polynomial\" sections are supported");
  }
  int max_m = 0, max_n = 0;
  for (const auto& e : j["coeffs"]) {
    if (!e.is_array() || e.size() != 4) {
      throw std::invalid_argument("each coeff must be [m, n, re, im]");
    }
    const int m = e[0].get<int>(), n = e[1].get<int>();
    if (m < 0 || n < 0 || m > 64 || n > 64) {
      throw std::invalid_argument("coefficient exponents out of range");
    }
    max_m = std::max(max_m, m);
    max_n = std::max(max_n, n);
  }
  BiPoly p(max_m, max_n);
  for (const auto& e : j["coeffs"]) {
    p.at(e[0].get<int>(), e[1].get<int>()) += complex(e[2].get<double>(), e[3].get<double>());
  }
  out.poly = p;
  return out;
}

WeierstrassFile parse_weierstrass_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("weierstrass file is not valid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("space") || !j.contains("w")) {
    throw std::invalid_argument("weierstrass file needs keys: space, w");
  }
  std::vector<complex> coeffs;
  for (const auto& e : j["w"]) {
    if (!e.is_array() || e.size() != 2) {
      throw std::invalid_argument("each w coefficient must be [re, im]");
    }
    coeffs.emplace_back(e[0].get<double>(), e[1].get<double>());
  }
  return {parse_space_name(j["space"].get<std::string>()), HoloPoly(std::move(coeffs))};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace linespace
