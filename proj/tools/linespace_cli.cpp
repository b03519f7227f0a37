// Command-line front end: identity verification suites, geodesic/ruled-surface
// sampling, line-congruence analysis, and minimal/maximal surface meshes.
//
// Exit codes: 0 success, 1 verification failure, 2 configuration error.

#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "linespace/congruence.hpp"
#include "linespace/geodesic.hpp"
#include "linespace/io.hpp"
#include "linespace/jets.hpp"
#include "linespace/minimal.hpp"
#include "linespace/parallel.hpp"
#include "linespace/verify.hpp"

namespace {

using namespace linespace;

std::optional<SpaceKind> parse_space_flag(const std::string& s) {
  if (s == "euclidean") return kEuclidean;
  if (s == "lorentzian") return kLorentzian;
  if (s == "both") return std::nullopt;
  throw CLI::ValidationError("--space", "expected euclidean|lorentzian|both");
}

std::map<std::string, double> parse_tols(const std::vector<std::string>& kvs) {
  std::map<std::string, double> out;
  for (const std::string& kv : kvs) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos) {
      throw CLI::ValidationError("--tol", "expected NAME=VALUE");
    }
    out[kv.substr(0, eq)] = std::stod(kv.substr(eq + 1));
  }
  return out;
}

std::ostream& open_out(std::ofstream& file, const std::string& path) {
  if (path.empty() || path == "-") return std::cout;
  file.open(path, std::ios::binary);
  if (!file) throw std::invalid_argument("cannot open output file: " + path);
  return file;
}

// ---- verify ----------------------------------------------------------------

int cmd_verify(const std::string& space, std::uint64_t seed, const std::string& suite,
               int samples, const std::vector<std::string>& tols, const std::string& out) {
  RunConfig cfg;
  cfg.space = parse_space_flag(space);
  cfg.seed = seed;
  cfg.suite = suite;
  cfg.samples = samples;
  cfg.tolerances = parse_tols(tols);

  const VerifyReport report = run_verify(cfg);
  for (const SuiteResult& s : report.suites) {
    std::printf("%s  %-24s %-10s samples=%-6ld max_residual=%s tol=%s\n",
                s.pass ? "PASS" : "FAIL", s.name.c_str(), s.space.c_str(), s.samples,
                format_double(s.max_residual).c_str(), format_double(s.tolerance).c_str());
  }
  std::ofstream file;
  std::ostream& os = open_out(file, out);
  os << report.to_json();
  return report.all_pass ? 0 : 1;
}

// ---- geodesic ---------------------------------------------------------------

int cmd_geodesic(const std::string& space_name, GeodesicParams gp, bool fibre,
                 complex xi0, complex eta0, complex dxi0, complex deta0, double s1,
                 double step, bool ruled, double r0, double r1, int ns, int nr,
                 bool compare, const std::string& out, const std::string& format) {
  const std::optional<SpaceKind> sp = parse_space_flag(space_name);
  const SpaceKind space = sp.value_or(kLorentzian);

  std::ofstream file;
  std::ostream& os = open_out(file, out);

  if (ruled) {
    if (space.euclidean()) {
      throw std::invalid_argument("closed-form ruled surfaces require --space lorentzian");
    }
    const RuledSurface rs = ruled_surface(space, gp, 0.0, s1, ns, r0, r1, nr);
    if (format == "obj") {
      write_obj_grid(os, rs.points, rs.s_values.size(), rs.r_values.size());
    } else {
      CsvWriter csv(os);
      csv.header({"s", "r", "x1", "x2", "x3"});
      for (std::size_t i = 0; i < rs.s_values.size(); ++i)
        for (std::size_t j = 0; j < rs.r_values.size(); ++j) {
          const SpacePoint& p = rs.at(i, j);
          csv.row({rs.s_values[i], rs.r_values[j], p.z.real(), p.z.imag(), p.t});
        }
    }
    return 0;
  }

  GeodesicState st0;
  if (fibre) {
    st0 = {xi0, eta0, 0.0, deta0, 0.0};
  } else if (space.lorentzian()) {
    st0 = closed_form_th2_state(gp, 0.0);
  } else {
    st0 = {xi0, eta0, dxi0, deta0, 0.0};
  }
  const auto traj = integrate_geodesic(space, st0, s1, step);
  if (traj.size() < std::size_t(std::lround(s1 / step)) + 1) {
    std::fprintf(stderr, "warning: trajectory left the chart at s=%g\n", traj.back().s);
  }

  CsvWriter csv(os);
  std::vector<std::string> cols{"s", "re_xi", "im_xi", "re_eta", "im_eta"};
  const bool add_dev = compare && !fibre && space.lorentzian();
  if (add_dev) cols.push_back("closed_form_deviation");
  csv.header(cols);
  for (const GeodesicState& st : traj) {
    std::vector<double> row{st.s, st.xi.real(), st.xi.imag(), st.eta.real(), st.eta.imag()};
    if (add_dev) {
      const GeodesicState ref = closed_form_th2_state(gp, st.s);
      row.push_back(std::max(std::abs(st.xi - ref.xi), std::abs(st.eta - ref.eta)));
    }
    csv.row(row);
  }
  return 0;
}

// ---- congruence -------------------------------------------------------------

int cmd_congruence(const std::string& section_path, int nx, int ny, double xi_max,
                   double r0, const std::vector<std::string>& tols, const std::string& out) {
  const SectionFile sf = parse_section_json(read_file(section_path));
  const SectionJet sec(sf.poly);
  const SpaceKind space = sf.space;
  const auto tolmap = parse_tols(tols);
  const double umbilic_tol = tolmap.count("umbilic") ? tolmap.at("umbilic") : 1e-8;

  if (space.lorentzian() && xi_max >= 1.0) {
    throw std::invalid_argument("--xi-max must be < 1 on the Lorentzian disc");
  }

  const double nan = std::numeric_limits<double>::quiet_NaN();
  std::vector<std::vector<std::vector<double>>> rows(static_cast<std::size_t>(nx));
  std::vector<int> umbilic_count(static_cast<std::size_t>(nx), 0);
  std::vector<double> max_lag(static_cast<std::size_t>(nx), 0.0);

  parallel_for_rows(nx, [&](int i) {
    auto& row_out = rows[static_cast<std::size_t>(i)];
    for (int j = 0; j < ny; ++j) {
      const double x = nx == 1 ? 0.0 : -xi_max + 2.0 * xi_max * i / (nx - 1);
      const double y = ny == 1 ? 0.0 : -xi_max + 2.0 * xi_max * j / (ny - 1);
      const complex xi(x, y);
      if (!in_domain(space, xi)) continue;
      max_lag[static_cast<std::size_t>(i)] =
          std::max(max_lag[static_cast<std::size_t>(i)],
                   std::abs(lagrangian_residual(space, sec, xi)));
      const complex path[2] = {complex{0.0, 0.0}, xi};
      const double r = support_integrate(space, sec, path, r0);
      const SpinData sd = analyze_graph_point(space, sec, xi, r, umbilic_tol);
      if (sd.umbilic) ++umbilic_count[static_cast<std::size_t>(i)];
      row_out.push_back({xi.real(), xi.imag(), sd.sigma0.real(), sd.sigma0.imag(),
                         sd.rho0, sd.r, sd.rho, sd.sigma.real(), sd.sigma.imag(),
                         sd.umbilic ? nan : sd.lambda1, sd.umbilic ? nan : sd.lambda2,
                         sd.K});
    }
  });

  std::ofstream file;
  std::ostream& os = open_out(file, out);
  CsvWriter csv(os);
  csv.header({"re_xi", "im_xi", "sigma0_re", "sigma0_im", "rho0", "r", "rho", "sigma_re",
              "sigma_im", "lambda1", "lambda2", "K"});
  for (const auto& row_block : rows)
    for (const auto& r : row_block) csv.row(r);

  WeingartenOptions wopt;
  wopt.grid = std::max(7, std::min(nx, ny));
  wopt.extent = xi_max;
  if (tolmap.count("weingarten_k")) wopt.k_tol = tolmap.at("weingarten_k");
  const WeingartenReport rep = weingarten_test(space, sec, wopt);
  int umbilics = 0;
  double lag = 0.0;
  for (int i = 0; i < nx; ++i) {
    umbilics += umbilic_count[static_cast<std::size_t>(i)];
    lag = std::max(lag, max_lag[static_cast<std::size_t>(i)]);
  }
  csv.comment("space=" + std::string(space.name()));
  csv.comment("weingarten=" + std::string(rep.is_weingarten ? "true" : "false") +
              " detectors_agree=" + (rep.detectors_agree ? "true" : "false"));
  csv.comment("max_abs_K=" + format_double(rep.max_abs_k) +
              " max_rel_wedge=" + format_double(rep.max_rel_wedge));
  csv.comment("umbilic_cells=" + std::to_string(umbilics));
  csv.comment("max_lagrangian_residual=" + format_double(lag));
  return 0;
}

// ---- weierstrass ------------------------------------------------------------

int cmd_weierstrass(const std::string& w_path, int nx, int ny, double xi_max,
                    const std::string& format, bool check, const std::string& out) {
  const WeierstrassFile wf = parse_weierstrass_json(read_file(w_path));
  const SpaceKind space = wf.space;
  const HoloPoly& w = wf.w;

  bool degenerate = true;
  for (std::size_t k = 3; k < w.coeffs().size(); ++k) {
    if (std::abs(w.coeffs()[k]) > 0.0) degenerate = false;
  }
  if (degenerate) {
    throw std::invalid_argument("w''' vanishes identically: degenerate data (no immersion)");
  }
  if (space.lorentzian() && xi_max >= 1.0) {
    throw std::invalid_argument("--xi-max must be < 1 on the Lorentzian disc");
  }
  if (check && format != "csv") {
    throw std::invalid_argument("--check needs --format csv");
  }

  const SectionJet sec = weierstrass_section(space, w);
  std::vector<SpacePoint> pts(static_cast<std::size_t>(nx) * ny);
  std::vector<double> rho_abs(check ? pts.size() : 0, 0.0);
  std::vector<int> flat_count(static_cast<std::size_t>(nx), 0);

  parallel_for_rows(nx, [&](int i) {
    for (int j = 0; j < ny; ++j) {
      const double x = nx == 1 ? 0.0 : -xi_max + 2.0 * xi_max * i / (nx - 1);
      const double y = ny == 1 ? 0.0 : -xi_max + 2.0 * xi_max * j / (ny - 1);
      const complex xi(x, y);
      const std::size_t idx = static_cast<std::size_t>(i) * ny + j;
      pts[idx] = weierstrass_surface(space, w, xi);
      if (weierstrass_flat_point(w, xi, 1e-9)) ++flat_count[static_cast<std::size_t>(i)];
      if (check) {
        const LineWithParam lw = from_space(space, xi, pts[idx]);
        const OpticalScalars os =
            spin_coefficients_from_slopes(slopes(space, sec, xi), lw.r);
        rho_abs[idx] = std::abs(os.rho);
      }
    }
  });

  std::ofstream file;
  std::ostream& os = open_out(file, out);
  if (format == "obj") {
    write_obj_grid(os, pts, static_cast<std::size_t>(nx), static_cast<std::size_t>(ny));
  } else {
    CsvWriter csv(os);
    std::vector<std::string> cols{"re_xi", "im_xi", "x1", "x2", "x3"};
    if (check) cols.push_back("abs_rho");
    csv.header(cols);
    for (int i = 0; i < nx; ++i)
      for (int j = 0; j < ny; ++j) {
        const double x = nx == 1 ? 0.0 : -xi_max + 2.0 * xi_max * i / (nx - 1);
        const double y = ny == 1 ? 0.0 : -xi_max + 2.0 * xi_max * j / (ny - 1);
        const std::size_t idx = static_cast<std::size_t>(i) * ny + j;
        std::vector<double> row{x, y, pts[idx].z.real(), pts[idx].z.imag(), pts[idx].t};
        if (check) row.push_back(rho_abs[idx]);
        csv.row(row);
      }
    int flats = 0;
    for (int c : flat_count) flats += c;
    csv.comment("space=" + std::string(space.name()));
    csv.comment("flat_vertices=" + std::to_string(flats));
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"neutral Kahler geometry of oriented line spaces"};
  app.require_subcommand(1);

  std::string space = "both", suite, out, format = "csv";
  std::uint64_t seed = 42;
  int samples = 0;
  std::vector<std::string> tols;

  auto* ver = app.add_subcommand("verify", "run the identity verification suites");
  ver->add_option("--space", space, "euclidean|lorentzian|both");
  ver->add_option("--seed", seed, "random seed (fixes all draws)");
  ver->add_option("--suite", suite, "run a single suite by name");
  ver->add_option("--samples", samples, "override the per-suite sample count");
  ver->add_option("--tol", tols, "override a tolerance, NAME=VALUE");
  ver->add_option("--out", out, "write the JSON report here (default stdout)");

  GeodesicParams gp;
  bool fibre = false, ruled = false, compare = false;
  double s1 = 1.0, step = 1e-3;
  std::vector<double> rrange{-1.0, 1.0};
  std::vector<int> sgrid{65, 33};
  std::vector<double> xi0{0, 0}, eta0{0, 0}, dxi0{1, 0}, deta0{0, 0};
  auto* geo = app.add_subcommand("geodesic", "integrate geodesics / export ruled surfaces");
  geo->add_option("--space", space, "euclidean|lorentzian (default lorentzian)");
  geo->add_option("--c1", gp.c1, "first integral");
  geo->add_option("--c2", gp.c2, "base speed (nonzero)");
  geo->add_option("--c5", gp.c5, "eta amplitude");
  geo->add_option("--theta", gp.theta, "base direction angle");
  geo->add_flag("--fibre", fibre, "integrate a fibre line instead of closed-form data");
  geo->add_option("--xi0", xi0, "initial xi (re [im])")->expected(1, 2);
  geo->add_option("--eta0", eta0, "initial eta (re [im])")->expected(1, 2);
  geo->add_option("--dxi", dxi0, "initial dxi (re [im])")->expected(1, 2);
  geo->add_option("--deta", deta0, "initial deta (re [im])")->expected(1, 2);
  geo->add_option("--s1", s1, "integrate over [0, s1]");
  geo->add_option("--step", step, "RK4 step");
  geo->add_flag("--ruled", ruled, "export the swept ruled surface");
  geo->add_option("--r-range", rrange, "rule parameter range")->expected(2);
  geo->add_option("--grid", sgrid, "ruled grid (n_s n_r)")->expected(2);
  geo->add_flag("--compare-closed-form", compare, "append a deviation column");
  geo->add_option("--out", out, "output path (default stdout)");
  geo->add_option("--format", format, "csv|obj");

  std::string section_path, w_path;
  std::vector<int> grid{20, 20};
  double xi_max = 0.5, anchor_r0 = 0.0;
  auto* con = app.add_subcommand("congruence", "analyze a line congruence (graph section)");
  con->add_option("--section", section_path, "section JSON file")->required();
  con->add_option("--grid", grid, "grid size (n_x n_y)")->expected(2);
  con->add_option("--xi-max", xi_max, "half-width of the xi grid");
  con->add_option("--r0", anchor_r0, "support anchor at the grid centre");
  con->add_option("--tol", tols, "override a tolerance, NAME=VALUE");
  con->add_option("--out", out, "output CSV path (default stdout)");

  bool wcheck = false;
  auto* wei = app.add_subcommand("weierstrass", "mesh a minimal/maximal surface");
  wei->add_option("--w", w_path, "holomorphic potential JSON file")->required();
  wei->add_option("--grid", grid, "grid size (n_x n_y)")->expected(2);
  wei->add_option("--xi-max", xi_max, "half-width of the xi grid");
  wei->add_option("--format", format, "csv|obj");
  wei->add_flag("--check", wcheck, "append |rho| per vertex (csv)");
  wei->add_option("--out", out, "output path (default stdout)");

  try {
    app.parse(argc, argv);
    if (ver->parsed()) return cmd_verify(space, seed, suite, samples, tols, out);
    if (geo->parsed()) {
      if (!geo->count("--space")) space = "lorentzian";
      auto as_complex = [](std::vector<double>& v) {
        return complex(v.at(0), v.size() > 1 ? v[1] : 0.0);
      };
      return cmd_geodesic(space, gp, fibre, as_complex(xi0), as_complex(eta0),
                          as_complex(dxi0), as_complex(deta0), s1, step, ruled,
                          rrange[0], rrange[1], sgrid[0], sgrid[1], compare, out, format);
    }
    if (con->parsed()) {
      return cmd_congruence(section_path, grid[0], grid[1], xi_max, anchor_r0, tols, out);
    }
    if (wei->parsed()) {
      return cmd_weierstrass(w_path, grid[0], grid[1], xi_max, format, wcheck, out);
    }
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return 0;  // --help
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
