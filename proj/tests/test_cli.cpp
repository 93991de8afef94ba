#include "doctest.h"
#include "wiman/cli.hpp"
#include "wiman/util.hpp"

using namespace wiman;
using cli::json;

TEST_SUITE_BEGIN("cli");

TEST_CASE("automorphism report round-trips and is reproducible") {
  auto r1 = cli::run({"aut", "--p", "19", "--format", "json"});
  CHECK(r1.exit_code == 0);
  CHECK(r1.report["results"]["closure_order"] == 120);
  CHECK(r1.report["results"]["s5_certificate"] == true);
  CHECK(r1.report["results"]["census"]["2"] == 25);
  CHECK(r1.report["seed"] == 0);

  // round-trip
  json parsed = json::parse(r1.report.dump());
  CHECK(parsed == r1.report);

  // byte-identical reruns once the wall clock is stripped
  auto r2 = cli::run({"aut", "--p", "19", "--format", "json"});
  json a = r1.report, b = r2.report;
  a.erase("wall_ms");
  b.erase("wall_ms");
  CHECK(a.dump() == b.dump());
}

TEST_CASE("curve analysis exit codes track the verdict") {
  auto max19 = cli::run({"curve", "analyze", "--p", "19"});
  CHECK(max19.exit_code == 0);
  auto not7 = cli::run({"curve", "analyze", "--p", "7"});
  CHECK(not7.exit_code == 1);
  CHECK(not7.report["results"]["genus"] == 6);
  CHECK(not7.report["results"]["maximal"] == false);
}

TEST_CASE("criterion scan") {
  auto r = cli::run({"kawakita", "scan", "--from", "7", "--to", "100", "--format", "json"});
  CHECK(r.exit_code == 0);
  CHECK(r.report["results"]["all_agree"] == true);
  std::vector<u64> zeros = r.report["results"]["residue_zero_primes"];
  CHECK(zeros == std::vector<u64>{19, 29, 79});
}

TEST_CASE("hermitian stats") {
  auto r = cli::run({"hermitian", "stats", "--q", "3", "--model", "M1", "--format", "json"});
  CHECK(r.exit_code == 0);
  CHECK(r.report["results"]["points"] == 28);
  auto bad = cli::run({"hermitian", "stats", "--q", "3", "--model", "M9"});
  CHECK(bad.exit_code == 2);
}

TEST_CASE("classification of an explicit matrix") {
  auto r = cli::run({"classify", "--q", "19", "--matrix", "t,0,0;0,1,0;0,0,1", "--format", "json"});
  CHECK(r.exit_code == 0);
  CHECK(r.report["results"]["projective_order"] == 4);
  CHECK(r.report["results"]["type"] == "A");
  CHECK(r.report["results"]["contribution"] == 20);

  auto bad = cli::run({"classify", "--q", "19", "--matrix", "1,1,0;0,1,0;0,0,1"});
  CHECK(bad.exit_code == 2);  // parsable but not unitary
  auto worse = cli::run({"classify", "--q", "19", "--matrix", "x,0;1"});
  CHECK(worse.exit_code == 2);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(cli::run({"no-such-subcommand"}).exit_code == 2);
  CHECK(cli::run({"aut", "--frobnicate"}).exit_code == 2);
  CHECK(cli::run({"aut", "--p", "4"}).exit_code == 2);  // not prime
  CHECK(cli::run({"exclude", "--q", "19", "--facts", "/no/such/file.tsv"}).exit_code == 2);
}

TEST_CASE("exclusion without facts is honestly inconclusive") {
  auto r = cli::run({"exclude", "--q", "19", "--format", "json"});
  CHECK(r.exit_code == 1);
  CHECK(r.report["results"]["verdict"] == "inconclusive");
  std::vector<u64> pending = r.report["results"]["pending"];
  CHECK(pending == std::vector<u64>{16, 20, 24});
  CHECK(r.report["provenance"]["recorded_external"] == 0);
}

TEST_SUITE_END();
