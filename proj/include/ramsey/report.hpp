#pragma once
// Sweep driver and report serialization. Reports are JSON with a stable
// field order and a schema version; graphs appear as graph6 strings. Two
// runs with the same configuration produce byte-identical reports apart
// from the elapsedMs timing fields.

#include <optional>
#include <string>

#include <json.hpp>

#include "ramsey/cache.hpp"
#include "ramsey/oracle.hpp"

namespace ramsey {

inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 2;
inline constexpr int kExitDomainError = 3;
inline constexpr int kExitBudget = 4;

struct SweepConfig {
  int nLo = 4, nHi = 4;
  // When unset, r runs over the full deficiency range 1..n-2 per n.
  std::optional<std::pair<int, int>> rRange;
  int kLo = 2, kHi = 2;
  int pMax = kDefaultOracleBudget;
  int jobs = 1;
};

std::string config_hash(const SweepConfig& cfg);
std::string oracle_cache_key(const RamseyQuery& q, int pMax);

nlohmann::ordered_json verdict_to_json(const OracleVerdict& v);
OracleVerdict verdict_from_json(const nlohmann::ordered_json& j);

// Full formula-vs-oracle sweep: per cell the closed-formula value, witness
// verification, the oracle recomputation when the predicted value fits the
// budget, and a bound-soundness pass over every graph the oracle visits.
// Oracle verdicts are looked up in / appended to the cache when one is given.
nlohmann::ordered_json run_sweep(const SweepConfig& cfg, ResultCache* cache);

bool sweep_passed(const nlohmann::ordered_json& report);

// Copy with every timing field removed; used for byte-level comparisons.
nlohmann::ordered_json strip_timings(const nlohmann::ordered_json& j);

}  // namespace ramsey
