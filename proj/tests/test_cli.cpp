#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "parcr/cli.hpp"

using namespace parcr;
using parcr::io::json;

namespace {

struct CliResult {
  int code = -1;
  std::string out;
  std::string err;
};

CliResult run_cli(const std::vector<std::string>& args) {
  std::vector<const char*> argv;
  argv.push_back("parcr");
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  CliResult res;
  res.code = main_impl(static_cast<int>(argv.size()), argv.data(), out, err);
  res.out = out.str();
  res.err = err.str();
  return res;
}

class TempFile {
 public:
  TempFile(std::string path, const std::string& content)
      : path_(std::move(path)) {
    std::ofstream out(path_, std::ios::binary);
    out << content;
  }
  ~TempFile() { std::remove(path_.c_str()); }
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

}  // namespace

TEST_CASE("invariants json document") {
  const CliResult res =
      run_cli({"invariants", "--r", "3", "--g", "2", "--m", "1"});
  REQUIRE(res.code == exit_code::ok);
  const json doc = json::parse(res.out);
  CHECK(doc["params"]["r"] == 3);
  CHECK(doc["complex_dim_moduli"] == 11);
  CHECK(doc["real_dim_moduli"] == 22);
  CHECK(doc["complex_dim_fixed"] == 2);
  CHECK(doc["codim_fixed"] == 9);
  CHECK(doc["gamma_order"] == 81);
  CHECK(doc["component_count"] == 6);
  CHECK_FALSE(doc.contains("par_degree"));
}

TEST_CASE("invariants csv bytes") {
  const CliResult res = run_cli(
      {"invariants", "--r", "3", "--g", "2", "--m", "1", "--format", "csv"});
  REQUIRE(res.code == exit_code::ok);
  CHECK(res.out ==
        "key,value\n"
        "r,3\n"
        "g,2\n"
        "m,1\n"
        "d,1\n"
        "complex_dim_moduli,11\n"
        "real_dim_moduli,22\n"
        "complex_dim_fixed,2\n"
        "codim_fixed,9\n"
        "gamma_order,81\n"
        "component_count,6\n");
}

TEST_CASE("invariants with large genus uses decimal strings") {
  const CliResult res =
      run_cli({"invariants", "--r", "3", "--g", "20", "--m", "0"});
  REQUIRE(res.code == exit_code::ok);
  const json doc = json::parse(res.out);
  CHECK(doc["gamma_order"] == "12157665459056928801");
  CHECK(doc["component_count"] == 1);
  CHECK(doc["complex_dim_moduli"] == 152);
}

TEST_CASE("invariants with a weight file") {
  const TempFile weights("parcr_cli_weights_tmp.json", R"([["1/4","1/2"]])");
  const CliResult res = run_cli({"invariants", "--r", "2", "--g", "2", "--m",
                                 "1", "--weights", weights.path()});
  REQUIRE(res.code == exit_code::ok);
  const json doc = json::parse(res.out);
  CHECK(doc["par_degree"] == "7/4");
  CHECK(doc["par_slope"] == "7/8");
  CHECK(doc["concentrated"] == true);
}

TEST_CASE("weight file with the wrong point count is rejected") {
  const TempFile weights("parcr_cli_weights2_tmp.json",
                         R"([["1/4","1/2"],["0","1/3"]])");
  const CliResult res = run_cli({"invariants", "--r", "2", "--g", "2", "--m",
                                 "1", "--weights", weights.path()});
  CHECK(res.code == exit_code::validation);
  CHECK(res.err.find("validation:") == 0);
}

TEST_CASE("spectrum for one component") {
  const CliResult res = run_cli(
      {"spectrum", "--r", "3", "--g", "2", "--m", "1", "--perm", "021"});
  REQUIRE(res.code == exit_code::ok);
  const json doc = json::parse(res.out);
  CHECK(doc["bundle_spectrum"].dump() == R"({"0":2,"1":3,"2":3})");
  CHECK(doc["component"]["perms"].dump() == R"(["021"])");
  CHECK(doc["component"]["l"].dump() == "[2]");
  CHECK(doc["component"]["combined_spectrum"].dump() ==
        R"({"0":2,"1":4,"2":5})");
  CHECK(doc["component"]["shift"] == "14/3");
}

TEST_CASE("spectrum csv bytes for the full rank-2 listing") {
  const CliResult res = run_cli({"spectrum", "--r", "2", "--g", "2", "--m", "1",
                                 "--all", "--format", "csv"});
  REQUIRE(res.code == exit_code::ok);
  CHECK(res.out ==
        "perms,l,shift,e0,e1\n"
        "01,(1),3/2,1,3\n"
        "10,(1),3/2,1,3\n");
}

TEST_CASE("spectrum with no marked points has one component") {
  const CliResult res = run_cli(
      {"spectrum", "--r", "3", "--g", "2", "--m", "0", "--format", "csv"});
  REQUIRE(res.code == exit_code::ok);
  CHECK(res.out ==
        "perms,l,shift,e0,e1,e2\n"
        ",(),3,2,3,3\n");
}

TEST_CASE("spectrum argument validation") {
  CHECK(run_cli({"spectrum", "--r", "3", "--g", "2", "--m", "0", "--perm",
                 "012"})
            .code == exit_code::validation);
  CHECK(run_cli({"spectrum", "--r", "3", "--g", "2", "--m", "1"}).code ==
        exit_code::validation);
  CHECK(run_cli({"spectrum", "--r", "3", "--g", "2", "--m", "1", "--perm",
                 "012", "--all"})
            .code == exit_code::validation);
  CHECK(run_cli({"spectrum", "--r", "3", "--g", "2", "--m", "1", "--perm",
                 "0a1"})
            .code == exit_code::validation);
  CHECK(run_cli({"spectrum", "--r", "3", "--g", "2", "--m", "2", "--perm",
                 "012"})
            .code == exit_code::validation);
  const CliResult over = run_cli(
      {"spectrum", "--r", "7", "--g", "2", "--m", "2", "--all"});
  CHECK(over.code == exit_code::validation);
  CHECK(over.err.find("listing limit") != std::string::npos);
}

TEST_CASE("shifts csv bytes") {
  const CliResult res = run_cli(
      {"shifts", "--r", "3", "--g", "2", "--m", "1", "--format", "csv"});
  REQUIRE(res.code == exit_code::ok);
  CHECK(res.out ==
        "l,shift,components\n"
        "(1),13/3,3\n"
        "(2),14/3,3\n");
}

TEST_CASE("shifts json document") {
  const CliResult res = run_cli({"shifts", "--r", "3", "--g", "2", "--m", "0"});
  REQUIRE(res.code == exit_code::ok);
  const json doc = json::parse(res.out);
  REQUIRE(doc["table"].size() == 1);
  CHECK(doc["table"][0]["l"].dump() == "[]");
  CHECK(doc["table"][0]["shift"] == "3");
  CHECK(doc["table"][0]["components"] == 1);
}

TEST_CASE("assemble without sector data stays structural") {
  const CliResult res = run_cli({"assemble", "--r", "3", "--g", "2", "--m",
                                 "1"});
  REQUIRE(res.code == exit_code::ok);
  const json doc = json::parse(res.out);
  CHECK(doc["structural_only"] == true);
  CHECK(doc["checks"]["duality"]["ok"] == false);
  CHECK(doc["checks"]["totals"]["assembled"] == 481);
  CHECK(doc["checks"]["totals"]["expected"] == 481);

  const CliResult csv = run_cli({"assemble", "--r", "3", "--g", "2", "--m",
                                 "1", "--format", "csv"});
  REQUIRE(csv.code == exit_code::ok);
  CHECK(csv.out ==
        "degree,dim\n"
        "0,1\n"
        "26/3,240\n"
        "28/3,240\n");
}

TEST_CASE("assemble with palindromic sector data passes") {
  const TempFile sectors("parcr_cli_sectors_tmp.json",
                         R"({"params":{"r":3,"g":2,"m":1,"d":1},
                             "untwisted":[[0,1],[11,2],[22,1]],
                             "prym_quotient":[[0,1],[4,1]]})");
  const CliResult res = run_cli({"assemble", "--r", "3", "--g", "2", "--m", "1",
                                 "--sectors", sectors.path()});
  REQUIRE(res.code == exit_code::ok);
  const json doc = json::parse(res.out);
  CHECK(doc["structural_only"] == false);
  CHECK(doc["checks"]["duality"]["ok"] == true);
  CHECK(doc["checks"]["totals"]["assembled"] == 964);
  CHECK(doc["checks"]["totals"]["expected"] == 964);
}

TEST_CASE("assemble flags asymmetric sector data") {
  const TempFile sectors("parcr_cli_sectors_bad_tmp.json",
                         R"({"untwisted":[[0,1]],"prym_quotient":[[0,1]]})");
  const CliResult res = run_cli({"assemble", "--r", "3", "--g", "2", "--m", "1",
                                 "--sectors", sectors.path()});
  CHECK(res.code == exit_code::property_violation);
  const json doc = json::parse(res.out);
  CHECK(doc["checks"]["duality"]["ok"] == false);
}

TEST_CASE("assemble input failures map to the documented codes") {
  CHECK(run_cli({"assemble", "--r", "3", "--g", "2", "--m", "1", "--sectors",
                 "/nonexistent/sectors.json"})
            .code == exit_code::io_failure);

  const TempFile malformed("parcr_cli_malformed_tmp.json", "{not json");
  CHECK(run_cli({"assemble", "--r", "3", "--g", "2", "--m", "1", "--sectors",
                 malformed.path()})
            .code == exit_code::validation);

  const TempFile mismatched("parcr_cli_mismatch_tmp.json",
                            R"({"params":{"r":3,"g":3,"m":1,"d":1},
                                "untwisted":[[0,1]],
                                "prym_quotient":[[0,1]]})");
  CHECK(run_cli({"assemble", "--r", "3", "--g", "2", "--m", "1", "--sectors",
                 mismatched.path()})
            .code == exit_code::validation);
}

TEST_CASE("invalid geometry reports every violation") {
  const CliResult res = run_cli({"invariants", "--r", "4", "--g", "2"});
  CHECK(res.code == exit_code::validation);
  CHECK(res.err.find("validation:") == 0);

  const CliResult multi =
      run_cli({"invariants", "--r", "6", "--g", "1", "--m", "-2", "--d", "3"});
  CHECK(multi.code == exit_code::validation);
  long long lines = 0;
  for (char ch : multi.err) {
    if (ch == '\n') ++lines;
  }
  CHECK(lines == 4);
}

TEST_CASE("usage errors") {
  CHECK(run_cli({}).code == exit_code::usage);
  CHECK(run_cli({"invariants", "--g", "2"}).code == exit_code::usage);
  CHECK(run_cli({"invariants", "--r", "3", "--g", "2", "--bogus"}).code ==
        exit_code::usage);
  CHECK(run_cli({"invariants", "--r", "3", "--g", "2", "--format", "xml"})
            .code == exit_code::usage);
  CHECK(run_cli({"frobnicate"}).code == exit_code::usage);

  const CliResult help = run_cli({"--help"});
  CHECK(help.code == exit_code::ok);
  CHECK(help.out.find("invariants") != std::string::npos);
}

TEST_CASE("verify quick passes") {
  const CliResult res = run_cli({"verify", "--quick"});
  REQUIRE(res.code == exit_code::ok);
  const json doc = json::parse(res.out);
  CHECK(doc["quick"] == true);
  CHECK(doc["failed"] == 0);
  CHECK(doc["passed"].get<long long>() > 10);

  const CliResult csv = run_cli({"verify", "--quick", "--format", "csv"});
  REQUIRE(csv.code == exit_code::ok);
  CHECK(csv.out.find("status,name,detail\n") == 0);
  CHECK(csv.out.find("FAIL") == std::string::npos);
}

TEST_CASE("documents are byte-stable across runs") {
  const std::vector<std::vector<std::string>> configs{
      {"invariants", "--r", "3", "--g", "2", "--m", "1"},
      {"invariants", "--r", "3", "--g", "2", "--m", "1", "--format", "csv"},
      {"spectrum", "--r", "3", "--g", "2", "--m", "1", "--all"},
      {"spectrum", "--r", "2", "--g", "2", "--m", "2", "--all", "--format",
       "csv"},
      {"shifts", "--r", "5", "--g", "2", "--m", "1"},
      {"shifts", "--r", "5", "--g", "2", "--m", "1", "--format", "csv"},
      {"assemble", "--r", "3", "--g", "2", "--m", "1"},
      {"verify", "--quick"},
      {"verify", "--quick", "--format", "csv"},
  };
  for (const auto& args : configs) {
    const CliResult first = run_cli(args);
    const CliResult second = run_cli(args);
    CHECK(first.code == second.code);
    CHECK(first.out == second.out);
    CHECK(first.err == second.err);
  }
}
