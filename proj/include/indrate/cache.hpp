#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "indrate/induced.hpp"

namespace indrate {

// Optional on-disk cache of grid evaluations, keyed by the canonical row
// space and the exact channel bits. Disabled unless INDRATE_CACHE_DIR is
// set; values round-trip exactly, so cached and fresh runs emit identical
// artifacts.
class EvalCache {
 public:
  // Reads the directory from the environment; disabled when unset/empty.
  static EvalCache from_environment();
  explicit EvalCache(std::string dir) : dir_(std::move(dir)) {}

  bool enabled() const { return !dir_.empty(); }
  std::optional<EntropySummary> load(const std::vector<std::uint64_t>& key,
                                     const PauliDist& dist) const;
  void store(const std::vector<std::uint64_t>& key, const PauliDist& dist,
             const EntropySummary& summary) const;

 private:
  std::string entry_path(const std::vector<std::uint64_t>& key,
                         const PauliDist& dist) const;
  std::string dir_;
};

inline constexpr const char* kCacheDirEnvVar = "INDRATE_CACHE_DIR";

}  // namespace indrate
