// Integration tests for the command-line tool: spawns the built binary.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct RunResult {
  int exit_code;
  std::string output;  // stdout only
};

RunResult run_cli(const std::string& args) {
  const std::string cmd = std::string(LINESPACE_CLI_PATH) + " " + args + " 2>/dev/null";
  std::array<char, 4096> buf;
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  while (std::size_t n = std::fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  const int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

std::string temp_path(const std::string& name) {
  return std::string("/tmp/linespace_test_") + name;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  f << text;
}

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("verify: single suite passes and reports are byte-identical") {
  const std::string o1 = temp_path("rep1.json"), o2 = temp_path("rep2.json");
  const RunResult r1 =
      run_cli("verify --suite wirtinger --samples 2000 --seed 42 --out " + o1);
  CHECK(r1.exit_code == 0);
  CHECK(r1.output.find("PASS") != std::string::npos);
  const RunResult r2 =
      run_cli("verify --suite wirtinger --samples 2000 --seed 42 --out " + o2);
  CHECK(r2.exit_code == 0);
  const std::string j1 = slurp(o1), j2 = slurp(o2);
  CHECK(!j1.empty());
  CHECK(j1 == j2);
  CHECK(j1.find("\"schema_version\": 1") != std::string::npos);
}

TEST_CASE("verify: unknown suite is a config error") {
  CHECK(run_cli("verify --suite nonsense").exit_code == 2);
}

TEST_CASE("verify: forced tolerance failure exits 1") {
  CHECK(run_cli("verify --suite wirtinger --samples 200 --tol wirtinger=1e-30").exit_code == 1);
}

TEST_CASE("geodesic: C1 = 0 ruled surface is the x2 = 0 plane") {
  const RunResult r = run_cli(
      "geodesic --c1 0 --c2 0.5 --theta 0 --c5 0 --ruled --grid 9 5 --s1 1 --format csv");
  CHECK(r.exit_code == 0);
  std::istringstream is(r.output);
  std::string line;
  std::getline(is, line);
  CHECK(line == "s,r,x1,x2,x3");
  while (std::getline(is, line)) {
    std::istringstream row(line);
    std::string cell;
    for (int c = 0; c < 4 && std::getline(row, cell, ','); ++c) {
    }
    CHECK(std::abs(std::strtod(cell.c_str(), nullptr)) <= 1e-12);  // x2 column
  }
}

TEST_CASE("geodesic: helicoid OBJ mesh") {
  const RunResult r =
      run_cli("geodesic --c1 1 --c2 0.5 --ruled --grid 9 5 --s1 1 --format obj");
  CHECK(r.exit_code == 0);
  int v = 0, f = 0;
  std::istringstream is(r.output);
  std::string line;
  while (std::getline(is, line)) {
    if (line.rfind("v ", 0) == 0) ++v;
    if (line.rfind("f ", 0) == 0) ++f;
  }
  CHECK(v == 45);
  CHECK(f == 2 * 8 * 4);
}

TEST_CASE("geodesic: fibre trajectory is straight in the chart") {
  const RunResult r = run_cli("geodesic --fibre --eta0 0 0 --deta 1 0 --s1 1 --step 0.25");
  CHECK(r.exit_code == 0);
  std::istringstream is(r.output);
  std::string line;
  std::getline(is, line);  // header
  double expected_s = 0.0;
  while (std::getline(is, line)) {
    std::istringstream row(line);
    std::string s, rx, ix, re, ie;
    std::getline(row, s, ',');
    std::getline(row, rx, ',');
    std::getline(row, ix, ',');
    std::getline(row, re, ',');
    std::getline(row, ie, ',');
    CHECK(std::strtod(rx.c_str(), nullptr) == 0.0);
    CHECK(std::strtod(re.c_str(), nullptr) == doctest::Approx(expected_s));
    expected_s += 0.25;
  }
}

TEST_CASE("congruence: sphere section has rho = 1/R everywhere") {
  const std::string sec = temp_path("sphere.json");
  write_file(sec, R"({"space":"euclidean","kind":"polynomial","coeffs":[]})");
  const std::string out = temp_path("sphere.csv");
  const RunResult r = run_cli("congruence --section " + sec +
                              " --grid 7 7 --xi-max 0.4 --r0 2.0 --out " + out);
  CHECK(r.exit_code == 0);
  std::istringstream is(slurp(out));
  std::string line;
  std::getline(is, line);
  CHECK(line ==
        "re_xi,im_xi,sigma0_re,sigma0_im,rho0,r,rho,sigma_re,sigma_im,lambda1,lambda2,K");
  int rows = 0;
  bool saw_summary = false;
  while (std::getline(is, line)) {
    if (line.rfind("#", 0) == 0) {
      saw_summary = true;
      if (line.find("umbilic_cells=") != std::string::npos) {
        CHECK(line == "# umbilic_cells=49");  // F == 0 is umbilic everywhere
      }
      continue;
    }
    ++rows;
    std::istringstream row(line);
    std::string cell;
    for (int c = 0; c < 7 && std::getline(row, cell, ','); ++c) {
    }
    CHECK(std::strtod(cell.c_str(), nullptr) == doctest::Approx(0.5));  // rho = 1/2
  }
  CHECK(rows == 49);
  CHECK(saw_summary);
}

TEST_CASE("congruence: rotational section is Weingarten, perturbed is not") {
  const std::string rot = temp_path("rot.json");
  write_file(rot,
             R"({"space":"euclidean","kind":"polynomial","coeffs":[[1,0,0.1,0],[2,1,0.1,0]]})");
  const std::string out1 = temp_path("rot.csv");
  CHECK(run_cli("congruence --section " + rot + " --grid 12 12 --xi-max 0.45 --out " + out1)
            .exit_code == 0);
  CHECK(slurp(out1).find("weingarten=true") != std::string::npos);

  const std::string pert = temp_path("pert.json");
  write_file(pert, R"({"space":"euclidean","kind":"polynomial","coeffs":[
    [1,0,0.125,0],[2,1,0.15,0],[0,1,0.025,0],[1,2,0.05,0],[3,2,0.025,0],[2,3,0.025,0]]})");
  const std::string out2 = temp_path("pert.csv");
  CHECK(run_cli("congruence --section " + pert + " --grid 12 12 --xi-max 0.45 --out " + out2)
            .exit_code == 0);
  CHECK(slurp(out2).find("weingarten=false") != std::string::npos);
}

TEST_CASE("congruence: malformed section file is a config error") {
  const std::string bad = temp_path("bad.json");
  write_file(bad, "{not json");
  CHECK(run_cli("congruence --section " + bad + " --out /dev/null").exit_code == 2);
  const std::string bad2 = temp_path("bad2.json");
  write_file(bad2, R"({"space":"euclidean","kind":"polynomial","coeffs":[[1,2,3]]})");
  CHECK(run_cli("congruence --section " + bad2 + " --out /dev/null").exit_code == 2);
}

TEST_CASE("weierstrass: cubic mesh with |rho| check") {
  const std::string w = temp_path("cubic.json");
  write_file(w, R"({"space":"euclidean","w":[[0,0],[0,0],[0,0],[1,0]]})");
  const std::string out = temp_path("cubic.csv");
  const RunResult r =
      run_cli("weierstrass --w " + w + " --grid 9 9 --xi-max 0.8 --check --out " + out);
  CHECK(r.exit_code == 0);
  std::istringstream is(slurp(out));
  std::string line;
  std::getline(is, line);
  CHECK(line == "re_xi,im_xi,x1,x2,x3,abs_rho");
  double max_rho = 0.0;
  while (std::getline(is, line)) {
    if (line.rfind("#", 0) == 0) continue;
    const auto pos = line.rfind(',');
    max_rho = std::max(max_rho, std::strtod(line.substr(pos + 1).c_str(), nullptr));
  }
  CHECK(max_rho <= 1e-8);

  // OBJ flavour
  const RunResult obj = run_cli("weierstrass --w " + w + " --grid 5 5 --xi-max 0.8 --format obj");
  CHECK(obj.exit_code == 0);
  CHECK(obj.output.rfind("v ", 0) == 0);
}

TEST_CASE("grid output is independent of the thread schedule") {
  const std::string sec = temp_path("sched.json");
  write_file(sec,
             R"({"space":"euclidean","kind":"polynomial","coeffs":[[1,0,0.1,0],[2,1,0.1,0]]})");
  const std::string o1 = temp_path("sched1.csv"), o2 = temp_path("sched2.csv");
  const std::string base = "congruence --section " + sec + " --grid 10 10 --xi-max 0.4 --out ";
  {
    const std::string cmd1 = "LINESPACE_THREADS=1 " + std::string(LINESPACE_CLI_PATH) + " " +
                             base + o1 + " 2>/dev/null";
    const std::string cmd2 = "LINESPACE_THREADS=8 " + std::string(LINESPACE_CLI_PATH) + " " +
                             base + o2 + " 2>/dev/null";
    CHECK(WEXITSTATUS(std::system(cmd1.c_str())) == 0);
    CHECK(WEXITSTATUS(std::system(cmd2.c_str())) == 0);
  }
  const std::string a = slurp(o1), b = slurp(o2);
  CHECK(!a.empty());
  CHECK(a == b);
}

TEST_CASE("weierstrass: degenerate potential is rejected") {
  const std::string w = temp_path("deg.json");
  write_file(w, R"({"space":"euclidean","w":[[0,0],[1,0]]})");
  CHECK(run_cli("weierstrass --w " + w + " --out /dev/null").exit_code == 2);
}
