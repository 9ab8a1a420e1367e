#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli_app.hpp"
#include "doctest.h"
#include "json.hpp"

using nlohmann::json;

namespace {
struct Run {
  int code;
  std::string out, err;
};

Run cli(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  int code = wdiam::cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& body) {
  auto p = std::filesystem::temp_directory_path() / ("wdiam_test_" + name);
  std::ofstream(p) << body;
  return p.string();
}
}  // namespace

TEST_CASE("analyze W3 from stdin") {
  auto r = cli({"analyze", "-"}, R"({"coeffs": [1, 1, 1], "renormalize": true})");
  REQUIRE(r.code == 0);
  auto j = json::parse(r.out);
  CHECK(j["region"] == "symmetric");
  CHECK(j["g2"].get<double>() == doctest::Approx(4.0 / 9).epsilon(1e-14));
}

TEST_CASE("analyze flags near-normalized files") {
  auto f = temp_file("near.json", R"({"coeffs": [0.57735021, 0.57735021, 0.57735021]})");
  auto r = cli({"analyze", f});
  REQUIRE(r.code == 0);
  CHECK(json::parse(r.out)["input"]["renormalized"] == true);
}

TEST_CASE("analyze output round-trips") {
  auto first = cli({"analyze", "-"}, R"({"coeffs": [0.15, 0.3, 0.45, 0.6, 0.5, 0.27], "renormalize": true})");
  REQUIRE(first.code == 0);
  auto second = cli({"analyze", "-"}, first.out);
  REQUIRE(second.code == 0);
  auto a = json::parse(first.out), b = json::parse(second.out);
  a.erase("input");
  b.erase("input");
  CHECK(a == b);
}

TEST_CASE("input errors exit 2 with JSON on stderr") {
  auto r = cli({"analyze", "--coeffs", "0.6", "0.8"});
  CHECK(r.code == 2);
  CHECK(json::parse(r.err)["error"] == "TooFewQubits");
  CHECK(cli({"analyze", "-"}, "{").code == 2);
  CHECK(cli({"analyze", "/nonexistent/file.json"}).code == 2);
  CHECK(cli({"bogus"}).code == 2);
  CHECK(cli({}).code == 2);
  CHECK(cli({"sweep", "--figure", "9"}).code == 2);
  CHECK(cli({"sweep"}).code == 2);
  CHECK(cli({"approx", "g2-asym", "--c", "0.9"}).code == 2);
  CHECK(cli({"approx", "nope"}).code == 2);
  CHECK(cli({"verify", "--nmin", "2"}).code == 2);
}

TEST_CASE("oracle exit codes") {
  auto ok = cli({"oracle", "--coeffs", "1", "1", "1", "--renormalize"});
  REQUIRE(ok.code == 0);
  CHECK(json::parse(ok.out)["g_best"].get<double>() == doctest::Approx(2.0 / 3).epsilon(1e-10));
  auto stuck = cli({"oracle", "--coeffs", "1", "2", "3", "--renormalize", "--max-sweeps", "1",
                    "--tol", "0"});
  CHECK(stuck.code == 4);
  CHECK(json::parse(stuck.err)["error"] == "NoConvergedStart");
}

TEST_CASE("approx formulas") {
  CHECK(cli({"approx", "g-interp", "--bz", "-0.5"}).out == "0.75\n");
  CHECK(std::stod(cli({"approx", "g3", "--coeffs", "0.5773502691896258", "0.5773502691896258",
                       "0.5773502691896258"})
                      .out) == doctest::Approx(2.0 / 3));
  CHECK(std::stod(cli({"approx", "r-two-param", "--m", "10", "--k", "10", "--theta", "0"}).out) ==
        doctest::Approx(std::sqrt(10.0 / 36)));
  CHECK(std::stod(cli({"approx", "r1-estimate", "--n", "19"}).out) ==
        doctest::Approx(1 / std::sqrt(3.0)));
  CHECK(cli({"approx", "g3"}).code == 2);
}

TEST_CASE("sweep writes CSV to a file") {
  auto path = (std::filesystem::temp_directory_path() / "wdiam_test_fig3.csv").string();
  auto r = cli({"sweep", "--figure", "3", "--points", "20", "--out", path});
  REQUIRE(r.code == 0);
  std::ifstream f(path);
  std::string header;
  std::getline(f, header);
  CHECK(header.rfind("theta,", 0) == 0);
  auto spec = temp_file("spec.json", R"({"family": "one-large", "from": -0.9, "to": 0.3, "points": 5})");
  auto s = cli({"sweep", "--spec", spec});
  CHECK(s.code == 0);
  CHECK(std::count(s.out.begin(), s.out.end(), '\n') == 6);
  CHECK(cli({"sweep", "--spec", temp_file("bad.json", "{")}).code == 2);
}

TEST_CASE("small verify run succeeds and reports JSON") {
  auto r = cli({"verify", "--samples", "2000", "--oracle-samples", "20",
                "--no-scaling", "--json", "-"});
  CHECK(r.code == 0);
  CHECK(json::parse(r.out)["passed"] == true);
}

TEST_CASE("verify failing a property exits 5") {
  auto r = cli({"verify", "--samples", "300", "--nmax", "20", "--oracle-samples", "0",
                "--no-scaling", "--tol", "-0.1"});
  CHECK(r.code == 5);
  CHECK(r.out.find("FAIL") != std::string::npos);
}
