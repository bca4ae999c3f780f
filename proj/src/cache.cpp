#include "indrate/cache.hpp"

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace indrate {

namespace {

std::uint64_t fnv1a(const void* data, std::size_t len, std::uint64_t h) {
  const auto* bytes = static_cast<const unsigned char*>(data);
  for (std::size_t i = 0; i < len; ++i) {
    h ^= bytes[i];
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string tag(const std::vector<std::uint64_t>& key, const PauliDist& dist) {
  // The full key is echoed into the entry, so the hash only names the file.
  std::ostringstream ss;
  for (std::uint64_t word : key) ss << word << ' ';
  ss << std::hexfloat << dist.p_i << ' ' << dist.p_x << ' ' << dist.p_y << ' '
     << dist.p_z;
  return ss.str();
}

}  // namespace

EvalCache EvalCache::from_environment() {
  const char* dir = std::getenv(kCacheDirEnvVar);
  return EvalCache(dir == nullptr ? std::string() : std::string(dir));
}

std::string EvalCache::entry_path(const std::vector<std::uint64_t>& key,
                                  const PauliDist& dist) const {
  std::string t = tag(key, dist);
  std::uint64_t h = fnv1a(t.data(), t.size(), 0xcbf29ce484222325ULL);
  char name[32];
  std::snprintf(name, sizeof name, "%016llx.txt", static_cast<unsigned long long>(h));
  return dir_ + "/" + name;
}

std::optional<EntropySummary> EvalCache::load(const std::vector<std::uint64_t>& key,
                                              const PauliDist& dist) const {
  if (!enabled()) return std::nullopt;
  std::ifstream in(entry_path(key, dist));
  if (!in) return std::nullopt;
  std::string stored_tag;
  if (!std::getline(in, stored_tag) || stored_tag != tag(key, dist)) {
    return std::nullopt;  // hash collision or stale format
  }
  // 17 significant digits round-trip doubles exactly (hexfloat input is not
  // parseable with libstdc++ streams).
  EntropySummary s;
  in >> s.h_joint >> s.h_syndrome >> s.h_conditional >> s.rate;
  if (!in) return std::nullopt;
  return s;
}

void EvalCache::store(const std::vector<std::uint64_t>& key, const PauliDist& dist,
                      const EntropySummary& summary) const {
  if (!enabled()) return;
  std::error_code ec;
  std::filesystem::create_directories(dir_, ec);
  std::string path = entry_path(key, dist);
  std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) return;  // cache is best effort
    char line[256];
    std::snprintf(line, sizeof line, "%.17g %.17g %.17g %.17g", summary.h_joint,
                  summary.h_syndrome, summary.h_conditional, summary.rate);
    out << tag(key, dist) << '\n' << line << '\n';
  }
  std::filesystem::rename(tmp, path, ec);
}

}  // namespace indrate
