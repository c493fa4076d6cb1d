#include <doctest.h>

#include "semiq/constructions.hpp"
#include "semiq/errors.hpp"
#include "semiq/pipeline.hpp"

using namespace semiq;

namespace {

std::string example1_inline() {
  return generators_to_json(example1_semigroup()).dump();
}

AnalysisRequest request_for(const std::string& subcommand, const std::string& input) {
  AnalysisRequest r;
  r.subcommand = subcommand;
  r.input = input;
  return r;
}

}  // namespace

TEST_CASE("matrix JSON round trip with strings and integers") {
  QMatrix m = qmat({{"1/2", "-3"}, {"0", "7/5"}});
  CHECK(matrix_from_json(matrix_to_json(m)) == m);
  Json mixed = Json::parse(R"([["1/2", -3], [0, "7/5"]])");
  CHECK(matrix_from_json(mixed) == m);
}

TEST_CASE("matrix parser rejects bad input") {
  CHECK_THROWS_AS(matrix_from_json(Json::parse(R"([["1/0"]])")), Error);
  CHECK_THROWS_AS(matrix_from_json(Json::parse(R"([[1.5]])")), Error);
  CHECK_THROWS_AS(matrix_from_json(Json::parse(R"([[1], [1, 2]])")), Error);
  CHECK_THROWS_AS(matrix_from_json(Json::parse(R"([])")), Error);
  CHECK_THROWS_AS(matrix_from_json(Json::parse(R"(["x"])")), Error);
}

TEST_CASE("generator JSON round trip") {
  GeneratorSet gens = example1_semigroup();
  GeneratorSet back = generators_from_json(generators_to_json(gens));
  CHECK(back.dim == gens.dim);
  REQUIRE(back.generators.size() == gens.generators.size());
  for (std::size_t i = 0; i < gens.generators.size(); ++i) {
    CHECK(back.generators[i] == gens.generators[i]);
  }
  CHECK_THROWS_AS(generators_from_json(Json::parse(R"({"dim": 0, "generators": []})")), Error);
  CHECK_THROWS_AS(generators_from_json(Json::parse(R"({"generators": []})")), Error);
}

TEST_CASE("closure subcommand reports the expected summary") {
  RunResult r = run_request(request_for("closure", example1_inline()));
  CHECK(r.exit_code == 0);
  CHECK(r.report["size"] == 32);
  CHECK(r.report["diameter"] == 1);
  CHECK(r.report["contains_zero"] == false);
  CHECK(r.report["depth_histogram"] == Json::array({32}));
}

TEST_CASE("analyze subcommand matches the 32-element family facts") {
  RunResult r = run_request(request_for("analyze", example1_inline()));
  CHECK(r.exit_code == 0);
  const Json& s = r.report["structure"];
  CHECK(s["irreducible"] == true);
  CHECK(s["r"] == 2);
  CHECK(s["ideal_is_whole_semigroup"] == true);
  CHECK(s["group_order"] == 8);
  CHECK(s["aperiodic"] == false);
}

TEST_CASE("psi subcommand carries frame and theta certificates") {
  RunResult r = run_request(request_for("psi", example1_inline()));
  CHECK(r.exit_code == 0);
  CHECK(r.report["frame"]["u"] == 2);
  CHECK(r.report["frame"]["v"] == 2);
  CHECK(r.report["frame"]["widths"] == Json::array({2, 1}));
  CHECK(r.report["frame"]["overlap_dims"] == Json::array({0, 1}));
  CHECK(r.report["frame"]["coupling_group_orders"] == Json::array({8, 2}));
  CHECK(r.report["injectivity"]["distinct_grids"] == 32);
  REQUIRE(r.report["theta_certificates"].size() == 1);
  CHECK(r.report["theta_certificates"][0]["b"] == 2);
  CHECK(r.report["coupling"]["all_ok"] == true);
  CHECK(r.report["cardinality"]["all_ok"] == true);

  RunResult reducible = run_request(request_for("psi", generators_to_json(s_m_family(3)).dump()));
  CHECK(reducible.exit_code == 0);
  CHECK(reducible.report["stopped_after"] == "structure");
}

TEST_CASE("full verbosity dumps elements, group and power profiles") {
  AnalysisRequest req = request_for("analyze", example1_inline());
  req.verbosity = Verbosity::full;
  RunResult r = run_request(req);
  CHECK(r.exit_code == 0);
  REQUIRE(r.report["closure"].contains("elements"));
  CHECK(r.report["closure"]["elements"].size() == 32);
  const Json& first = r.report["closure"]["elements"][0];
  CHECK(first["depth"] == 1);
  CHECK(first["word"] == Json::array({0}));
  CHECK(matrix_from_json(first["matrix"]) == qmat({{1, 0, 0}, {0, 1, 0}, {1, 0, 0}}));
  CHECK(r.report["structure"]["group"].size() == 8);
  CHECK(r.report["structure"]["power_profiles"].size() == 32);
}

TEST_CASE("full pipeline stops after structure on reducible input") {
  RunResult r = run_request(
      request_for("check-bounds", generators_to_json(s_m_family(3)).dump()));
  CHECK(r.exit_code == 0);
  CHECK(r.report["stopped_after"] == "structure");
  CHECK(r.report["structure"]["irreducible"] == false);
  CHECK(r.report["structure"].contains("witness"));
}

TEST_CASE("full pipeline emits all certificates on the 32-element family") {
  RunResult r = run_request(request_for("check-bounds", example1_inline()));
  CHECK(r.exit_code == 0);
  CHECK(r.report["injectivity"]["ok"] == true);
  CHECK(r.report["coupling"]["all_ok"] == true);
  CHECK(r.report["cardinality"]["all_ok"] == true);
}

TEST_CASE("reports are byte-identical across runs") {
  AnalysisRequest req = request_for("check-bounds", example1_inline());
  RunResult a = run_request(req);
  RunResult b = run_request(req);
  CHECK(a.report.dump() == b.report.dump());
}

TEST_CASE("construct emits families that re-analyze identically") {
  AnalysisRequest req = request_for("construct", "");
  req.family = "lower";
  req.n = 3;
  req.signed_entries = true;
  RunResult emitted = run_request(req);
  REQUIRE(emitted.exit_code == 0);
  CHECK(emitted.report["family"]["ne_count"] == 9);

  RunResult reanalyzed = run_request(request_for("closure", emitted.report.dump()));
  CHECK(reanalyzed.exit_code == 0);
  CHECK(reanalyzed.report["size"] == 31);
}

TEST_CASE("exit codes distinguish limit, input and internal failures") {
  AnalysisRequest limit = request_for("closure", example1_inline());
  limit.max_elements = 3;
  CHECK(run_request(limit).exit_code == 2);

  CHECK(run_request(request_for("closure", "{not json")).exit_code == 3);
  CHECK(run_request(request_for("closure", "/nonexistent/path.json")).exit_code == 3);
  CHECK(run_request(request_for("frobnicate", example1_inline())).exit_code == 3);

  AnalysisRequest bad_family = request_for("construct", "");
  bad_family.family = "unknown";
  CHECK(run_request(bad_family).exit_code == 3);

  RunResult err = run_request(request_for("closure", "{not json"));
  CHECK(err.report.contains("error"));
  CHECK(err.report["error"]["kind"] == "input");
}

TEST_CASE("rees subcommand round trip") {
  std::string input = R"({"group": [[0,1],[1,0]], "sandwich": [[0, null],[null, 0]]})";
  RunResult r = run_request(request_for("rees", input));
  CHECK(r.exit_code == 0);
  CHECK(r.report["size"] == 9);
  CHECK(r.report["associative"] == true);
  for (const Json& idem : r.report["nonzero_idempotents"]) {
    CHECK(idem["local_group_ok"] == true);
  }

  std::string zero_row = R"({"group": [[0,1],[1,0]], "sandwich": [[null, null],[0, 0]]})";
  CHECK(run_request(request_for("rees", zero_row)).exit_code == 3);
}

TEST_CASE("mortality subcommand") {
  RunResult r = run_request(
      request_for("mortality", R"({"dim": 2, "generators": [[["0","1"],["0","0"]]]})"));
  CHECK(r.exit_code == 0);
  CHECK(r.report["threshold"] == 2);
  CHECK(r.report["trace"]["leaf"] == false);
}
