#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sys/wait.h>
#include <unistd.h>

#include "ramsey/cache.hpp"
#include "ramsey/report.hpp"
#include "ramsey/version.hpp"

using namespace ramsey;
using nlohmann::ordered_json;
namespace fs = std::filesystem;

namespace {

fs::path fresh_dir(const std::string& tag) {
  fs::path dir = fs::temp_directory_path() / ("ramsey-test-" + tag + "-" + std::to_string(::getpid()));
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

std::string run_cli(const std::string& args, int* exitCode) {
  const std::string cmd = std::string(RAMSEY_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[512];
  while (fgets(buf, sizeof buf, pipe)) out += buf;
  int status = pclose(pipe);
  *exitCode = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return out;
}

}  // namespace

TEST_CASE("verdict json round trip") {
  OracleVerdict v = brute_generalized_ramsey(RamseyQuery::classical(3, 3), 8);
  OracleVerdict back = verdict_from_json(verdict_to_json(v));
  CHECK(back.value == v.value);
  CHECK(back.witnessG6 == v.witnessG6);
  CHECK(back.stats.graphsVisited == v.stats.graphsVisited);
  CHECK(back.stats.graphsAfterFilter == v.stats.graphsAfterFilter);
}

TEST_CASE("config hashes are stable and sensitive") {
  SweepConfig a{4, 6, std::nullopt, 2, 5, 10, 1};
  SweepConfig b{4, 6, std::nullopt, 2, 5, 10, 8};  // jobs do not affect results
  SweepConfig c{4, 6, std::nullopt, 2, 6, 10, 1};
  CHECK(config_hash(a) == config_hash(b));
  CHECK(config_hash(a) != config_hash(c));
}

TEST_CASE("result cache stores, reloads and invalidates on version change") {
  fs::path dir = fresh_dir("cache");
  {
    ResultCache cache(dir);
    CHECK_FALSE(cache.lookup("k1").has_value());
    cache.store("k1", ordered_json{{"value", 6}});
    cache.store("k2", ordered_json{{"value", 9}});
  }
  {
    ResultCache cache(dir);
    auto hit = cache.lookup("k1");
    REQUIRE(hit.has_value());
    CHECK((*hit)["value"] == 6);
    CHECK(cache.hits() == 1);
  }
  // stale version header drops everything
  {
    std::ofstream f(dir / "cache.jsonl", std::ios::trunc);
    f << ordered_json{{"toolVersion", "0.0.0"}}.dump() << "\n";
    f << ordered_json{{"key", "k1"}, {"value", ordered_json{{"value", 42}}}}.dump() << "\n";
  }
  {
    ResultCache cache(dir);
    CHECK_FALSE(cache.lookup("k1").has_value());
    cache.store("k3", ordered_json{{"value", 1}});
  }
  {
    ResultCache cache(dir);
    CHECK_FALSE(cache.lookup("k1").has_value());
    CHECK(cache.lookup("k3").has_value());
  }
  fs::remove_all(dir);
}

TEST_CASE("sweep reports: pass status, determinism, cache coherence") {
  SweepConfig cfg;
  cfg.nLo = 4;
  cfg.nHi = 5;
  cfg.kLo = 2;
  cfg.kHi = 3;
  cfg.pMax = 8;
  cfg.jobs = 2;

  fs::path dirA = fresh_dir("sweep-a");
  fs::path dirB = fresh_dir("sweep-b");

  ResultCache cacheA(dirA);
  ordered_json cold = run_sweep(cfg, &cacheA);
  CHECK(sweep_passed(cold));
  CHECK(cold["summary"]["mismatches"] == 0);
  CHECK(cold["summary"]["witnessFailures"] == 0);
  CHECK(cold["summary"]["boundViolations"] == 0);
  CHECK(cold["cells"].size() == 5 * 2);  // (n=4: r 1..2, n=5: r 1..3) x (k 2..3)
  for (const auto& cell : cold["cells"]) {
    CHECK(cell["witness"]["verified"] == true);
    if (!cell["match"].is_null()) CHECK(cell["match"] == true);
  }

  // fresh-cache determinism: identical bodies apart from timings
  ResultCache cacheB(dirB);
  ordered_json cold2 = run_sweep(cfg, &cacheB);
  CHECK(strip_timings(cold).dump() == strip_timings(cold2).dump());

  // warm run answers from the cache and produces the same body
  uint64_t before = cacheA.hits();
  ordered_json warm = run_sweep(cfg, &cacheA);
  CHECK(cacheA.hits() - before == 10);  // every comparable cell served from cache
  ordered_json coldStripped = strip_timings(cold);
  ordered_json warmStripped = strip_timings(warm);
  // the cache flag flips; everything else is byte-identical
  for (auto& cell : coldStripped["cells"]) cell.erase("oracleFromCache");
  for (auto& cell : warmStripped["cells"]) cell.erase("oracleFromCache");
  CHECK(coldStripped.dump() == warmStripped.dump());

  fs::remove_all(dirA);
  fs::remove_all(dirB);
}

TEST_CASE("cli exit codes and output") {
  int code = 0;
  std::string out = run_cli("eval --n 5 --r 2 --k 4", &code);
  CHECK(code == kExitOk);
  CHECK(out.find("= 7") != std::string::npos);
  CHECK(out.find("triangles") != std::string::npos);
  CHECK(out.find("3K2") != std::string::npos);

  out = run_cli("eval --n 4 --r 1 --k 2", &code);
  CHECK(code == kExitOk);
  CHECK(out.find("= 4") != std::string::npos);
  CHECK(out.find("trivial") != std::string::npos);

  run_cli("eval --n 4 --r 3 --k 3", &code);
  CHECK(code == kExitDomainError);

  fs::path dir = fresh_dir("cli-cache");
  out = run_cli("oracle --n 3 --r 1 --k 3 --pmax 8 --cache-dir " + dir.string(), &code);
  CHECK(code == kExitOk);
  CHECK(out.find("= 6") != std::string::npos);
  out = run_cli("oracle --n 3 --r 1 --k 3 --pmax 8 --cache-dir " + dir.string(), &code);
  CHECK(out.find("cache hit") != std::string::npos);

  run_cli("oracle --n 3 --r 1 --k 5 --pmax 8 --cache-dir " + dir.string(), &code);
  CHECK(code == kExitBudget);

  out = run_cli("encode --order 3 --edges 0-1,0-2,1-2", &code);
  CHECK(code == kExitOk);
  CHECK(out.find("Bw") != std::string::npos);
  out = run_cli("decode Bw", &code);
  CHECK(code == kExitOk);
  CHECK(out.find("order 3") != std::string::npos);
  run_cli("decode not-a-graph6~~~", &code);
  CHECK(code == kExitDomainError);

  // environment-variable override for the cache directory
  fs::path envDir = fresh_dir("cli-env-cache");
  {
    const std::string cmd = "RAMSEY_CACHE_DIR=" + envDir.string() + " " + RAMSEY_CLI_PATH +
                            " oracle --n 3 --r 1 --k 3 --pmax 8 >/dev/null 2>&1";
    REQUIRE(std::system(cmd.c_str()) == 0);
    CHECK(fs::exists(envDir / "cache.jsonl"));
  }
  fs::remove_all(envDir);

  fs::path sweepDir = fresh_dir("cli-sweep");
  fs::path reportFile = sweepDir / "report.json";
  out = run_cli("sweep --n 4..4 --k 2..2 --pmax 8 --cache-dir " + sweepDir.string() +
                    " --out " + reportFile.string(),
                &code);
  CHECK(code == kExitOk);
  CHECK(fs::exists(reportFile));
  std::ifstream f(reportFile);
  ordered_json report = ordered_json::parse(f);
  CHECK(sweep_passed(report));

  fs::remove_all(dir);
  fs::remove_all(sweepDir);
}
