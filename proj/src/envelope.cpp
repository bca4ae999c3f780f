#include "indrate/envelope.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <mutex>
#include <ostream>
#include <stdexcept>

#include "indrate/cache.hpp"
#include "indrate/errors.hpp"
#include "indrate/parallel.hpp"

namespace indrate {

namespace {

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string json_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size() + 2);
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

// NaN has no JSON literal; emit null.
std::string json_number(double v) {
  if (std::isnan(v)) return "null";
  return format_double(v);
}

bool candidate_beats(const CandidateCode& a, const CandidateCode& b) {
  // Equal rates resolve to smaller n, then larger k, then smallest key.
  if (a.n != b.n) return a.n < b.n;
  if (a.k != b.k) return a.k > b.k;
  return a.key < b.key;
}

}  // namespace

ChannelPoint skewed_point(double p, double eta) {
  SkewedParams q = skewed_from_total_error(p, eta);
  return ChannelPoint{p, q.q_x, q.q_z, skewed_dist(q.q_x, q.q_z)};
}

ChannelPoint explicit_point(const PauliDist& dist) {
  return ChannelPoint{1.0 - dist.p_i, kNan, kNan, dist};
}

std::vector<ChannelPoint> skewed_grid(double p_lo, double p_hi, std::size_t count,
                                      double eta) {
  if (count == 0) throw std::invalid_argument("grid: need at least one point");
  if (count == 1) return {skewed_point(p_lo, eta)};
  std::vector<ChannelPoint> grid;
  grid.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    double p = p_lo + (p_hi - p_lo) * static_cast<double>(i) /
                          static_cast<double>(count - 1);
    grid.push_back(skewed_point(p, eta));
  }
  return grid;
}

CandidateCode make_candidate(CheckRows rows, std::int32_t r_x) {
  CandidateCode code;
  code.n = rows.empty() ? 0 : rows[0].n;
  code.k = code.n - static_cast<std::uint32_t>(rows.size());
  code.r_x = r_x;
  code.key = canonical_key(rows);
  code.text = render_code(rows);
  code.rows = std::move(rows);
  return code;
}

std::vector<std::vector<EntropySummary>> evaluate_grid(
    const std::vector<CandidateCode>& codes, const std::vector<ChannelPoint>& grid,
    const EvalLimits& limits, unsigned threads) {
  // Duplicate row spaces (different generator fillings) evaluate once.
  std::map<std::vector<std::uint64_t>, std::size_t> group_of;
  std::vector<std::size_t> group(codes.size());
  std::vector<std::size_t> representative;
  for (std::size_t c = 0; c < codes.size(); ++c) {
    auto [it, inserted] = group_of.try_emplace(codes[c].key, representative.size());
    if (inserted) representative.push_back(c);
    group[c] = it->second;
  }

  const std::size_t cells = representative.size() * grid.size();
  std::vector<EntropySummary> unique(cells);
  const EntropySummary nan_summary{kNan, kNan, kNan, kNan};
  const EvalCache cache = EvalCache::from_environment();
  parallel_for(cells, threads, [&](std::size_t cell) {
    const std::size_t g = cell / grid.size();
    const std::size_t pt = cell % grid.size();
    const CandidateCode& code = codes[representative[g]];
    if (auto cached = cache.load(code.key, grid[pt].dist)) {
      unique[cell] = *cached;
      return;
    }
    try {
      Tableau tab = build_tableau(code.rows);
      unique[cell] = evaluate(tab, grid[pt].dist, limits, 1);
      cache.store(code.key, grid[pt].dist, unique[cell]);
    } catch (const MemoryCapExceededError&) {
      unique[cell] = nan_summary;
    } catch (const CosetCapExceededError&) {
      unique[cell] = nan_summary;
    }
  });

  std::vector<std::vector<EntropySummary>> out(codes.size());
  for (std::size_t c = 0; c < codes.size(); ++c) {
    out[c].reserve(grid.size());
    for (std::size_t pt = 0; pt < grid.size(); ++pt) {
      out[c].push_back(unique[group[c] * grid.size() + pt]);
    }
  }
  return out;
}

std::vector<EnvelopePoint> build_envelope(
    const std::vector<CandidateCode>& codes, const std::vector<ChannelPoint>& grid,
    const std::vector<std::vector<EntropySummary>>& summaries) {
  if (summaries.size() != codes.size()) {
    throw std::invalid_argument("build_envelope: summary matrix shape mismatch");
  }
  std::vector<EnvelopePoint> envelope;
  envelope.reserve(grid.size());
  for (std::size_t pt = 0; pt < grid.size(); ++pt) {
    EnvelopePoint ep;
    ep.point = grid[pt];
    ep.r_hash = hashing_bound(grid[pt].dist);
    ep.r_ind_best = kNan;
    ep.h_conditional_best = kNan;
    for (std::size_t c = 0; c < codes.size(); ++c) {
      double rate = summaries[c][pt].rate;
      if (std::isnan(rate)) continue;
      bool take = ep.best_index < 0 || rate > ep.r_ind_best ||
                  (rate == ep.r_ind_best &&
                   candidate_beats(codes[c], codes[static_cast<std::size_t>(ep.best_index)]));
      if (take) {
        ep.best_index = static_cast<std::ptrdiff_t>(c);
        ep.r_ind_best = rate;
        ep.h_conditional_best = summaries[c][pt].h_conditional;
      }
    }
    if (ep.best_index >= 0) {
      const CandidateCode& best = codes[static_cast<std::size_t>(ep.best_index)];
      ep.n = best.n;
      ep.k = best.k;
      ep.code = best.text;
      ep.improved = ep.r_ind_best > ep.r_hash;
    }
    envelope.push_back(std::move(ep));
  }
  return envelope;
}

std::vector<EnvelopePoint> build_envelope(const std::vector<CandidateCode>& codes,
                                          const std::vector<ChannelPoint>& grid,
                                          const EvalLimits& limits, unsigned threads) {
  return build_envelope(codes, grid, evaluate_grid(codes, grid, limits, threads));
}

ThresholdResult improvement_threshold(const CheckRows& rows, double eta, double p_lo,
                                      double p_hi, double tol, const EvalLimits& limits,
                                      unsigned threads) {
  if (!(p_lo < p_hi)) throw std::invalid_argument("threshold: need p_lo < p_hi");
  if (!(tol > 0)) throw std::invalid_argument("threshold: tol must be positive");
  Tableau tab = build_tableau(rows);
  auto f = [&](double p) {
    PauliDist dist = dist_from_total_p(p, eta);
    return evaluate(tab, dist, limits, threads).rate - hashing_bound(dist);
  };
  double f_lo = f(p_lo);
  double f_hi = f(p_hi);
  if (f_lo == 0.0 || f_hi == 0.0 || (f_lo < 0) == (f_hi < 0)) {
    throw NoBracketError("R_ind - R_hash does not change sign over [p_lo, p_hi]");
  }
  double lo = p_lo, hi = p_hi;
  while (hi - lo > tol) {
    double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;  // hit double resolution
    double f_mid = f(mid);
    if (f_mid == 0.0) {
      lo = hi = mid;
      break;
    }
    if ((f_mid < 0) == (f_lo < 0)) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  ThresholdResult result;
  result.n = tab.n;
  result.k = tab.k;
  result.p_star = 0.5 * (lo + hi);
  result.bracket = hi - lo;
  return result;
}

void write_envelope_csv(std::ostream& out, const std::vector<EnvelopePoint>& points,
                        std::uint64_t seed) {
  out << "# seed=" << seed << "\n";
  out << "p,q_X,q_Z,R_hash,R_ind_best,n,k,code,H_L_given_S,improved\n";
  for (const EnvelopePoint& ep : points) {
    out << format_double(ep.point.p) << ',' << format_double(ep.point.q_x) << ','
        << format_double(ep.point.q_z) << ',' << format_double(ep.r_hash) << ',';
    if (ep.best_index >= 0) {
      out << format_double(ep.r_ind_best) << ',' << ep.n << ',' << ep.k << ",\""
          << ep.code << "\"," << format_double(ep.h_conditional_best) << ','
          << (ep.improved ? "true" : "false");
    } else {
      out << ",,,,,false";
    }
    out << "\n";
  }
}

void write_envelope_json(std::ostream& out, const std::vector<EnvelopePoint>& points,
                         const std::vector<CandidateCode>& codes, std::uint64_t seed,
                         const std::vector<std::pair<std::string, std::string>>& run_echo) {
  out << "{\n  \"run\": {";
  bool first = true;
  for (const auto& [key, value] : run_echo) {
    if (!first) out << ", ";
    out << '"' << json_escape(key) << "\": \"" << json_escape(value) << '"';
    first = false;
  }
  out << "},\n  \"seed\": " << seed << ",\n  \"points\": [\n";
  for (std::size_t i = 0; i < points.size(); ++i) {
    const EnvelopePoint& ep = points[i];
    out << "    {\"p\": " << json_number(ep.point.p)
        << ", \"q_X\": " << json_number(ep.point.q_x)
        << ", \"q_Z\": " << json_number(ep.point.q_z)
        << ", \"R_hash\": " << json_number(ep.r_hash)
        << ", \"R_ind_best\": " << json_number(ep.r_ind_best);
    if (ep.best_index >= 0) {
      const CandidateCode& best = codes[static_cast<std::size_t>(ep.best_index)];
      out << ", \"n\": " << ep.n << ", \"k\": " << ep.k;
      if (best.r_x >= 0) out << ", \"r_X\": " << best.r_x;
      out << ", \"code\": \"" << json_escape(ep.code) << '"';
    } else {
      out << ", \"n\": null, \"k\": null, \"code\": null";
    }
    out << ", \"H_L_given_S\": " << json_number(ep.h_conditional_best)
        << ", \"improved\": " << (ep.improved ? "true" : "false") << '}';
    out << (i + 1 < points.size() ? ",\n" : "\n");
  }
  out << "  ]\n}\n";
}

}  // namespace indrate
