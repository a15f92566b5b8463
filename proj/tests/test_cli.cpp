#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

#include "fixtures.hpp"
#include "manp/errors.hpp"
#include "manp/json_io.hpp"
#include "manp/verify.hpp"

using namespace manp;

namespace {

struct Run {
  int status = -1;
  std::string out;
};

Run run_cli(const std::string& args, const std::string& input = "") {
  std::string command = std::string(MANP_BINARY) + " " + args + " 2>/dev/null";
  if (!input.empty()) command = "printf '%s' '" + input + "' | " + command;
  Run r;
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buffer{};
  std::size_t got = 0;
  while ((got = std::fread(buffer.data(), 1, buffer.size(), pipe)) > 0) r.out.append(buffer.data(), got);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::vector<Partition> parts_of(const std::vector<std::string>& texts) {
  std::vector<Partition> out;
  for (const auto& t : texts) out.push_back(parse_partition(t));
  return out;
}

}  // namespace

TEST_CASE("cmd_verify examples") {
  const auto r32 = cmd_verify(Partition{3, 2}, FieldSpec::gf(2), {});
  CHECK(r32.verdict == Verdict::equal);
  CHECK(r32.candidates == 16);
  CHECK(r32.observed == parts_of({"2,2,1", "2,1,1,1", "1^5"}));

  const auto r211 = cmd_verify(Partition{2, 1, 1}, FieldSpec::gf(2), {});
  CHECK(r211.verdict == Verdict::equal);
  CHECK(r211.candidates == 512);
  CHECK(r211.observed == enumerate_partitions(4));

  const auto r11 = cmd_verify(Partition{1, 1}, FieldSpec::gf(2), {});
  CHECK(r11.verdict == Verdict::equal);
  CHECK(r11.observed == parts_of({"2", "1,1"}));
  CHECK(r11.nilpotent == 4);

  VerifyOptions sampled;
  sampled.mode = VerifyMode::sampled;
  sampled.samples = 3000;
  sampled.seed = 5;
  const auto s = cmd_verify(fixtures::golden_mu(), FieldSpec::gf(3), sampled);
  CHECK(s.verdict != Verdict::mismatch);
  CHECK(s.nilpotent == 3000);
  CHECK(to_string(s.verdict) == (s.verdict == Verdict::equal ? "equal" : "subset"));

  sampled.nilpotent_sampler = false;
  sampled.samples = 500;
  const auto u = cmd_verify(Partition{2, 1, 1}, FieldSpec::gf(5), sampled);
  CHECK(u.verdict != Verdict::mismatch);
  CHECK(u.candidates == 500);
  CHECK(u.nilpotent < 500);

  CHECK_THROWS_AS(cmd_verify(Partition{2}, FieldSpec::rational(), {}), PreconditionViolated);
  VerifyOptions tight;
  tight.budget = 100;
  CHECK_THROWS_AS(cmd_verify(Partition{1, 1, 1, 1}, FieldSpec::gf(2), tight), BudgetExceeded);
}

TEST_CASE("cmd_roundtrip examples") {
  const auto golden = cmd_roundtrip(fixtures::golden_mu(), Partition{5, 3, 3, 3, 1, 1});
  CHECK(golden.ok);
  CHECK(golden.stage == "done");
  CHECK(golden.exit_code() == 0);

  const auto bad = cmd_roundtrip(Partition{2, 2}, Partition{3, 1});
  CHECK_FALSE(bad.ok);
  CHECK(bad.stage == "compatible");
  CHECK(bad.exit_code() == 1);

  for (int n = 1; n <= 6; ++n) {
    const auto r = cmd_roundtrip(Partition{n}, ord(std::vector<int>(static_cast<std::size_t>(n), 1)),
                                 FieldSpec::rational());
    CHECK(r.ok);
    CHECK(r.certificate->c == 0);
    CHECK(r.certificate->epsilon_sum() == 0);
  }
  for (int n = 1; n <= 6; ++n)
    for (const Partition& mu : enumerate_partitions(n))
      for (const Partition& nu : enumerate_shapes(mu)) REQUIRE(cmd_roundtrip(mu, nu, FieldSpec::gf(3)).ok);
}

TEST_CASE("command line: check, enumerate and errors") {
  const auto ok = run_cli("check --mu 3,3,2,1^8 --nu 5,3,3,3,1,1");
  CHECK(ok.status == 0);
  const auto doc = nlohmann::json::parse(ok.out);
  CHECK(doc["compatible"] == true);
  CHECK(doc["certificate"]["lambda"] == "3,2,2,1");
  CHECK(doc["certificate"]["epsilon"] == nlohmann::json::array({2, 1, 1, 2}));
  CHECK(doc["certificate"]["d"] == 2);

  const auto no = run_cli("check --mu 2,2 --nu 3,1");
  CHECK(no.status == 1);
  CHECK(nlohmann::json::parse(no.out)["compatible"] == false);

  const auto csv = run_cli("enumerate --mu 2,1,1 --format csv");
  CHECK(csv.status == 0);
  CHECK(csv.out == "shape\n4\n\"3,1\"\n\"2,2\"\n\"2,1,1\"\n\"1,1,1,1\"\n");

  CHECK(run_cli("check --mu 2,1 --nu 2").status == 2);
  CHECK(run_cli("check --mu 2,x --nu 3").status == 2);
  CHECK(run_cli("bogus").status == 2);
  CHECK(run_cli("").status == 2);
}

TEST_CASE("command line: matrices through JSON") {
  const auto w = run_cli("witness --mu 2,1,1 --nu 4");
  REQUIRE(w.status == 0);
  const auto doc = nlohmann::json::parse(w.out);
  const auto a = matrix_from_json(doc["a"]);
  CHECK(nilpotent_shape(a) == Partition{4});
  CHECK(doc["a"]["rows"][0][2] == 1);

  const std::string golden = matrix_to_json(fixtures::golden_matrix(Gf2{})).dump();
  const auto shape = run_cli("shape --mu 3,3,2,1^8", golden);
  CHECK(shape.status == 0);
  CHECK(shape.out.find("5,3,3,3,1,1") != std::string::npos);

  const auto reduced = run_cli("reduce --mu 3,3,2,1^8", golden);
  CHECK(reduced.status == 0);
  const auto rdoc = nlohmann::json::parse(reduced.out);
  CHECK(matrix_from_json(rdoc["matrix"]) == ExactMatrix(fixtures::golden_matrix(Gf2{})));

  CHECK(run_cli("shape --mu 3,2", "{\"field\": \"gf2\", \"rows\": [[1]]}").status == 2);
  CHECK(run_cli("shape --mu 2,1", "not json").status == 2);
}

TEST_CASE("command line: verify, roundtrip and pair listings") {
  const auto v = run_cli("verify --mu 2,1,1");
  CHECK(v.status == 0);
  CHECK(nlohmann::json::parse(v.out)["verdict"] == "equal");

  const auto s = run_cli("verify --mu 3,1,1 --field gf:3 --mode sample --samples 200 --seed 4");
  CHECK(s.status == 0);

  CHECK(run_cli("verify --mu 1,1,1,1,1,1").status == 2);
  CHECK(run_cli("roundtrip --mu 3,3,2,1^8 --nu 5,3,3,3,1,1").status == 0);
  CHECK(run_cli("roundtrip --mu 2,2 --nu 3,1").status == 1);

  const auto comp = run_cli("components --n 4 --j 3 --format csv");
  CHECK(comp.status == 0);
  CHECK(comp.out.find("\"2,1,1\",4\n") != std::string::npos);
  CHECK(run_cli("components --n 4 --j 4").status == 2);

  const auto vnab = run_cli("vnab --n 4 --a 2 --b 2");
  CHECK(vnab.status == 0);
  CHECK(nlohmann::json::parse(vnab.out).size() > 0);
}
