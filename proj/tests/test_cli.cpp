#include <filesystem>
#include <fstream>
#include <random>

#include "doctest.h"
#include "prym/cli.hpp"
#include "prym/instances.hpp"

using namespace prym;

namespace {

const char* kExample = R"({"p": 7, "k": 1, "f": [0, 1, 0], "g": [1, 1, 1], "h": [1, 0, -1]})";

RunResult run_on(const std::string& command, const std::string& text) {
  JobSpec job;
  job.command = command;
  job.input_text = text;
  return run(job);
}

std::string error_message(const RunResult& r) { return r.report.at("error").at("message").get<std::string>(); }

}  // namespace

TEST_CASE("split report") {
  const RunResult r = run_on("split", kExample);
  REQUIRE(r.exit_code == kExitPass);
  const Json& s = r.report.at("result").at("split");
  for (const char* key : {"a", "b", "c", "F", "X", "D", "A_inverse"}) CHECK(s.contains(key));

  const Field f7 = Field::prime(7);
  const auto c = BiellipticQuartic::from_ints(f7, {0, 1, 0}, {1, 1, 1}, {1, 0, -1});
  CHECK(s.at("F") == to_json(split(c).sextic));
  CHECK(r.report.at("schema") == kReportSchema);
  CHECK(r.report.at("status") == "pass");
  CHECK(r.report.at("counting_invocations") == 0);
}

TEST_CASE("rejected inputs never count") {
  // f = g makes fg a square
  const RunResult r = run_on("verify", R"({"p": 7, "f": [0, 1, 0], "g": [0, 1, 0], "h": [1, 0, 1]})");
  CHECK(r.exit_code == kExitRejected);
  CHECK(r.report.at("counting_invocations") == 0);
  CHECK(r.report.at("error").at("kind") == "rejected-input");

  const RunResult v = run_on("validate", R"({"p": 7, "f": [0, 1, 0], "g": [0, 1, 0], "h": [1, 0, 1]})");
  CHECK(v.exit_code == kExitRejected);
  CHECK(v.report.at("counting_invocations") == 0);
}

TEST_CASE("strict documents") {
  const RunResult unknown = run_on("split", R"({"p": 7, "f": [0, 1, 0], "g": [1, 1, 1], "h": [1, 0, -1], "q": 1})");
  CHECK(unknown.exit_code == kExitRejected);
  CHECK(error_message(unknown).find("\"q\"") != std::string::npos);

  const RunResult missing = run_on("split", R"({"p": 7, "f": [0, 1, 0], "h": [1, 0, -1]})");
  CHECK(missing.exit_code == kExitRejected);
  CHECK(error_message(missing).find("\"g\"") != std::string::npos);

  const RunResult short_row = run_on("split", R"({"p": 7, "f": [0, 1], "g": [1, 1, 1], "h": [1, 0, -1]})");
  CHECK(short_row.exit_code == kExitRejected);
  CHECK(error_message(short_row).find("\"f\"") != std::string::npos);

  const RunResult bad_p = run_on("split", R"({"p": 9, "f": [0, 1, 0], "g": [1, 1, 1], "h": [1, 0, -1]})");
  CHECK(bad_p.exit_code == kExitRejected);

  const RunResult k_alone = run_on("split", R"({"k": 2, "f": [0, 1, 0], "g": [1, 1, 1], "h": [1, 0, -1]})");
  CHECK(k_alone.exit_code == kExitRejected);

  const RunResult not_json = run_on("split", "{\"p\": 7,");
  CHECK(not_json.exit_code == kExitRejected);
  CHECK(not_json.report.at("error").at("kind") == "parse");

  JobSpec none;
  none.command = "split";
  CHECK(run(none).exit_code == kExitRejected);
}

TEST_CASE("rational documents and --p") {
  const char* doc = R"({"f": ["1/2", 1, 0], "g": [1, 1, 1], "h": [1, 0, -1]})";
  const RunResult q = run_on("split", doc);
  REQUIRE(q.exit_code == kExitPass);
  CHECK(q.report.at("field").at("characteristic") == 0);

  JobSpec job;
  job.command = "split";
  job.input_text = doc;
  job.p = 7;
  const RunResult r = run(job);
  REQUIRE(r.exit_code == kExitPass);
  CHECK(r.report.at("field").at("characteristic") == 7);
  // 1/2 = 4 mod 7
  CHECK(r.report.at("input").at("f").at(0) == 4);

  job.input_text = kExample;
  job.p = 11;
  CHECK(run(job).exit_code == kExitRejected);

  const RunResult vq = run_on("verify", doc);
  CHECK(vq.exit_code == kExitPass);
  CHECK(vq.report.at("result").at("verifications").size() == 3);
}

TEST_CASE("reports replay to the same result") {
  const RunResult first = run_on("verify", kExample);
  REQUIRE(first.exit_code == kExitPass);
  CHECK(first.report.at("counting_invocations").get<int>() > 0);
  const RunResult again = run_on("verify", first.report.dump());
  REQUIRE(again.exit_code == kExitPass);
  CHECK(strip_timings(first.report) == strip_timings(again.report));
  CHECK_FALSE(strip_timings(first.report).contains("elapsed_seconds"));
}

TEST_CASE("bruin command") {
  RunResult zero = run_on("bruin", R"({"p": 5, "f": [0, 1, 0], "g": [1, 1, 1], "h": [1, 0, -1], "epsilon": 0})");
  CHECK(zero.exit_code == kExitRejected);
  CHECK(zero.report.at("counting_invocations") == 0);

  // a random fiber, reproducible from the seed and from the report
  JobSpec job;
  job.command = "bruin";
  job.input_text = R"({"p": 5, "f": [0, 1, 0], "g": [1, 1, 1], "h": [1, 0, -1]})";
  job.seed = 7;
  job.depth = 2;
  const RunResult r = run(job);
  REQUIRE(r.exit_code == kExitPass);
  CHECK(r.report.at("input").contains("epsilon"));
  CHECK(r.report.at("result").at("bruin").at("passed") == true);
  CHECK(strip_timings(run(job).report) == strip_timings(r.report));

  JobSpec replay;
  replay.command = "bruin";
  replay.input_text = r.report.dump();
  replay.depth = 2;
  CHECK(strip_timings(run(replay).report) == strip_timings(r.report));

  job.depth = 9;
  CHECK(run(job).exit_code == kExitRejected);
}

TEST_CASE("resource caps exit with 4") {
  JobSpec job;
  job.command = "verify";
  job.input_text = kExample;
  job.cap_evals = 10;
  const RunResult r = run(job);
  CHECK(r.exit_code == kExitResource);
  CHECK(r.report.at("error").at("kind") == "resource-limit");
}

TEST_CASE("disc-check") {
  JobSpec job;
  job.command = "disc-check";
  const RunResult r = run(job);
  CHECK(r.exit_code == kExitPass);
  CHECK(r.report.at("result").at("discriminant") == "-1099511627776");

  job.input_text = kExample;
  CHECK(run(job).report.at("result").contains("curve_discriminant"));
}

TEST_CASE("exit codes by error kind") {
  for (ErrorKind k : {ErrorKind::invalid_field, ErrorKind::unsupported_field, ErrorKind::field_mismatch,
                      ErrorKind::singular_matrix, ErrorKind::degenerate_input, ErrorKind::rejected_input,
                      ErrorKind::degree, ErrorKind::parse})
    CHECK(exit_code_for(k) == kExitRejected);
  CHECK(exit_code_for(ErrorKind::resource_limit) == kExitResource);
  for (ErrorKind k : {ErrorKind::undefined_resultant, ErrorKind::resultant_indeterminate, ErrorKind::model,
                      ErrorKind::inconsistent_counts, ErrorKind::internal_contradiction})
    CHECK(exit_code_for(k) == kExitInternal);

  JobSpec job;
  job.command = "frobnicate";
  CHECK(run(job).exit_code == kExitRejected);
}

TEST_CASE("emit writes atomically") {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / ("prym_cli_test_" + std::to_string(std::random_device{}()));
  fs::create_directories(dir);
  JobSpec job;
  job.command = "split";
  job.input_text = kExample;
  job.out_path = (dir / "report.json").string();
  const RunResult r = run(job);
  emit(job, r);
  REQUIRE(fs::exists(dir / "report.json"));
  std::ifstream in(dir / "report.json");
  CHECK(Json::parse(in) == r.report);
  int files = 0;
  for (const auto& e : fs::directory_iterator(dir)) {
    CHECK(e.path().extension() != ".tmp");
    ++files;
  }
  CHECK(files == 1);

  job.format = "text";
  job.out_path = (dir / "report.txt").string();
  emit(job, r);
  std::ifstream txt(dir / "report.txt");
  const std::string body((std::istreambuf_iterator<char>(txt)), std::istreambuf_iterator<char>());
  CHECK(body.find("X : y^2 = ") != std::string::npos);
  fs::remove_all(dir);
}
