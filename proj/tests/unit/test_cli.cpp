#include <fstream>
#include <sstream>

#include "doctest.h"
#include "eulerstrat/catalog.hpp"
#include "eulerstrat/cli/commands.hpp"

using namespace eulerstrat;

namespace {

const std::filesystem::path data_dir = EULERSTRAT_TEST_DATA_DIR;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const char* name) { return (data_dir / name).string(); }

// Writes a catalog entry's document to a scratch file and returns its path.
std::string emitted(const std::string& example) {
  const auto dir = std::filesystem::temp_directory_path() / "eulerstrat-cli-tests";
  std::filesystem::create_directories(dir);
  const auto path = dir / (example + ".json");
  auto r = run({"catalog", "emit", example});
  REQUIRE(r.code == 0);
  std::ofstream(path) << r.out;
  return path.string();
}

}  // namespace

TEST_CASE("usage errors exit 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"validate"}).code == 2);
  CHECK(run({"verify", data("three_chain.json"), "--formula", "eq99"}).code == 2);
  CHECK(run({"fuzz", "--trials", "many"}).code == 2);
  CHECK(run({"catalog", "explode"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("validate") {
  auto ok = run({"validate", emitted("nodal-cubic")});
  CHECK(ok.code == 0);
  CHECK(ok.out.find("valid") != std::string::npos);
  CHECK(run({"validate", data("diamond.json"), "--json"}).code == 0);
  CHECK(run({"validate", data("normalization_by_reference.json")}).code == 0);

  auto cyclic = run({"validate", data("cyclic.json")});
  CHECK(cyclic.code == 2);
  CHECK(cyclic.err.find("CycleError") != std::string::npos);
  auto kernel = run({"validate", data("inconsistent_kernel.json")});
  CHECK(kernel.code == 2);
  CHECK(kernel.err.find("KernelConsistencyError") != std::string::npos);
  auto waived = run({"validate", data("inconsistent_kernel.json"), "--skip-kernel-validation"});
  CHECK(waived.code == 0);
  CHECK(waived.out.find("1 inconsistent column: X") != std::string::npos);
  CHECK(run({"validate", data("bad_dimension.json")}).code == 2);
  CHECK(run({"validate", data("float_value.json")}).code == 2);
  auto malformed = run({"validate", data("malformed.json")});
  CHECK(malformed.code == 2);
  CHECK(malformed.err.find("line") != std::string::npos);
  CHECK(run({"validate", data("no_such_file.json")}).code == 2);
}

TEST_CASE("bases") {
  auto single = run({"bases", data("singleton.json"), "--json"});
  REQUIRE(single.code == 0);
  auto j = parse_json(single.out);
  for (const auto& [name, m] : j["matrices"].items()) CHECK(m == Json::parse("[[1]]"));

  auto two = run({"bases", emitted("two-chain"), "--json"});
  REQUIRE(two.code == 0);
  auto t = parse_json(two.out);
  CHECK(t["matrices"]["ic-to-open"] == Json::parse("[[1, 2], [0, 1]]"));
  CHECK(t["matrices"]["open-to-ic"] == Json::parse("[[1, -2], [0, 1]]"));

  auto three = run({"bases", data("three_chain.json"), "--json"});
  REQUIRE(three.code == 0);
  auto m = parse_json(three.out)["matrices"]["open-to-ic"];
  CHECK(m == Json::parse("[[1, -2, 7], [0, 1, -5], [0, 0, 1]]"));
  CHECK(run({"bases", data("three_chain.json")}).out.find("open-to-ic") != std::string::npos);

  auto missing = run({"bases", data("missing_links.json")});
  CHECK(missing.code == 2);
  CHECK(missing.err.find("MissingLinkDataError") != std::string::npos);
}

TEST_CASE("decompose") {
  auto r = run({"decompose", data("nodal_cubic.json"), "--function", data("function_nodal.json"), "--json"});
  REQUIRE(r.code == 0);
  auto j = parse_json(r.out);
  CHECK(j["pass"] == true);
  CHECK(j["decompositions"].size() == 6);
  CHECK(j["decompositions"][5]["basis"] == "dense-ic-hat");
  CHECK(j["decompositions"][5]["coefficients"]["node"] == 5 - (-2) * 2);
  CHECK(run({"decompose", data("nodal_cubic.json")}).code == 0);
  CHECK(run({"decompose", data("nodal_cubic.json"), "--function", data("function_unknown_stratum.json")}).code == 2);
  CHECK(run({"decompose", data("nodal_cubic.json"), "--function", data("missing.json")}).code == 2);
  CHECK(run({"decompose", data("missing_links.json")}).code == 2);
}

TEST_CASE("pushforward") {
  auto r = run({"pushforward", data("normalization_by_reference.json"), "--json"});
  REQUIRE(r.code == 0);
  auto j = parse_json(r.out);
  CHECK(j["pushforward"]["node"] == 2);
  CHECK(j["pushforward"]["smooth"] == 1);
  CHECK(j["report"]["pass"] == true);
  auto blow = run({"pushforward", emitted("blow-up"), "--function", data("function_blowup.json")});
  CHECK(blow.code == 0);
  CHECK(blow.out.find("{p: 6, open: 3}") != std::string::npos);
  CHECK(run({"pushforward", data("inconsistent_kernel.json")}).code == 2);
  CHECK(run({"pushforward", data("corrupted_kernel_waived.json")}).code == 0);
}

TEST_CASE("verify") {
  auto eq6 = run({"verify", emitted("blow-up"), "--formula", "eq6", "--json"});
  REQUIRE(eq6.code == 0);
  auto j = parse_json(eq6.out);
  CHECK(j["lhs"] == 4);
  CHECK(j["rhs"] == 4);
  auto c1 = run({"verify", emitted("nodal-cubic"), "--formula", "c1"});
  CHECK(c1.code == 0);
  CHECK(c1.out.find("1 = 1*2 + (1 - 2)*1") != std::string::npos);

  auto corrupted = run({"verify", data("corrupted_kernel_waived.json"), "--formula", "eq6"});
  CHECK(corrupted.code == 1);
  CHECK(corrupted.out.find("FAIL") != std::string::npos);
  CHECK(run({"verify", data("inconsistent_kernel.json"), "--formula", "eq6", "--skip-kernel-validation"}).code == 1);
  CHECK(run({"verify", data("inconsistent_kernel.json"), "--formula", "eq6"}).code == 2);
  CHECK(run({"verify", data("corrupted_kernel_waived.json")}).code == 1);

  auto all = run({"verify", emitted("blow-up"), "--json"});
  CHECK(all.code == 0);
  CHECK(parse_json(all.out)["reports"].size() == 15);
  CHECK(run({"verify", data("three_chain.json")}).code == 0);
  CHECK(run({"verify", data("diamond.json")}).code == 0);
  auto no_dense = run({"verify", data("two_maxima.json"), "--formula", "eq6"});
  CHECK(no_dense.code == 2);
  CHECK(no_dense.err.find("NoDenseStratumError") != std::string::npos);
  CHECK(run({"verify", data("missing_links.json"), "--formula", "eq6"}).code == 0);
  CHECK(run({"verify", data("missing_links.json"), "--formula", "c1"}).code == 2);

  const auto blow = emitted("blow-up");
  CHECK(run({"verify", blow, "--formula", "eq4", "--function", data("function_blowup.json")}).code == 0);
  CHECK(run({"verify", blow, "--formula", "eq6", "--function", data("function_blowup.json")}).code == 2);
  CHECK(run({"verify", blow, "--function", data("function_blowup.json")}).code == 0);
  CHECK(run({"verify", blow, "--formula", "eq11", "--function", data("function_blowup.json")}).code == 2);
  CHECK(run({"verify", data("nodal_cubic.json"), "--formula", "eq11", "--function", data("function_nodal.json")})
            .code == 0);
}

TEST_CASE("fuzz") {
  auto ok = run({"fuzz", "--seed", "0", "--trials", "20", "--strata", "8"});
  CHECK(ok.code == 0);
  CHECK(ok.out.find("PASS") != std::string::npos);
  CHECK(run({"fuzz", "--strata", "1", "--trials", "10"}).code == 0);
  auto fault = run({"fuzz", "--trials", "10", "--inject-fault", "--json"});
  CHECK(fault.code == 1);
  auto j = parse_json(fault.out);
  CHECK(j["pass"] == false);
  CHECK_FALSE(j["counterexamples"].empty());
  CHECK(j["counterexamples"][0].contains("minimized"));
  CHECK(run({"fuzz", "--trials", "10", "--inject-fault", "--json"}).out == fault.out);
  CHECK(run({"fuzz", "--trials", "0"}).code == 2);
  CHECK(run({"fuzz", "--strata", "0"}).code == 2);
}

TEST_CASE("catalog") {
  auto list = run({"catalog", "list"});
  CHECK(list.code == 0);
  CHECK(std::count(list.out.begin(), list.out.end(), '\n') == 6);
  auto json = run({"catalog", "list", "--json"});
  CHECK(parse_json(json.out).size() == 6);
  auto blow = run({"catalog", "run", "blow-up"});
  CHECK(blow.code == 0);
  CHECK(blow.out.find("4 = 1*3 + (2 - 1*1)*1") != std::string::npos);
  CHECK(run({"catalog", "run", "nodal-cubic", "--formula", "c2"}).code == 0);
  CHECK(run({"catalog", "run", "nodal-cubic", "--formula", "eq6"}).code == 2);
  auto unknown = run({"catalog", "run", "klein-bottle"});
  CHECK(unknown.code == 2);
  CHECK(unknown.err.find("UnknownExampleError") != std::string::npos);
  CHECK(run({"catalog", "run"}).code == 2);
  auto emit_out = run({"catalog", "emit", "nodal-cubic-normalization"});
  CHECK(emit_out.code == 0);
  CHECK(std::holds_alternative<MapDocument>(parse_document(parse_json(emit_out.out))));
}
