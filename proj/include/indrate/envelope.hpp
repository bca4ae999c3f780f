#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "indrate/codes.hpp"
#include "indrate/induced.hpp"
#include "indrate/search.hpp"

namespace indrate {

// One channel on the sweep axis. q_x/q_z are NaN for channels not built
// from the skewed family.
struct ChannelPoint {
  double p = 0.0;
  double q_x = 0.0;
  double q_z = 0.0;
  PauliDist dist;
};

// `count` points uniform in p over [p_lo, p_hi], skewed family at fixed eta.
std::vector<ChannelPoint> skewed_grid(double p_lo, double p_hi, std::size_t count,
                                      double eta);
ChannelPoint skewed_point(double p, double eta);
ChannelPoint explicit_point(const PauliDist& dist);

struct CandidateCode {
  CheckRows rows;
  std::uint32_t n = 0;
  std::uint32_t k = 0;
  std::int32_t r_x = -1;  // standard-form r_X when it came from the search
  std::vector<std::uint64_t> key;  // canonical_key(rows)
  std::string text;                // render_code(rows)
};

CandidateCode make_candidate(CheckRows rows, std::int32_t r_x = -1);

// Exact R_ind for every (code, point) cell; evaluations are cached on the
// canonical row space, cells run in parallel, and per-cell cap errors are
// recorded as NaN summaries instead of aborting the grid.
std::vector<std::vector<EntropySummary>> evaluate_grid(
    const std::vector<CandidateCode>& codes, const std::vector<ChannelPoint>& grid,
    const EvalLimits& limits = {}, unsigned threads = 1);

struct EnvelopePoint {
  ChannelPoint point;
  double r_hash = 0.0;
  double r_ind_best = 0.0;           // NaN when no candidate evaluated
  double h_conditional_best = 0.0;   // H(L|S) of the best code
  std::ptrdiff_t best_index = -1;    // into the candidate list
  std::uint32_t n = 0;
  std::uint32_t k = 0;
  std::string code;
  bool improved = false;             // r_ind_best > r_hash
};

// Per grid point the best induced rate over all candidates, ties broken by
// smaller n, then larger k, then lexicographically smallest canonical key.
// The baseline is reported alongside, never injected into the maximum.
std::vector<EnvelopePoint> build_envelope(const std::vector<CandidateCode>& codes,
                                          const std::vector<ChannelPoint>& grid,
                                          const EvalLimits& limits = {},
                                          unsigned threads = 1);
std::vector<EnvelopePoint> build_envelope(
    const std::vector<CandidateCode>& codes, const std::vector<ChannelPoint>& grid,
    const std::vector<std::vector<EntropySummary>>& summaries);

struct ThresholdResult {
  std::uint32_t n = 0;
  std::uint32_t k = 0;
  double p_star = 0.0;
  double bracket = 0.0;  // final bisection interval width
};

// Smallest p at which the code's induced rate exceeds the baseline, by
// bisection on f(p) = R_ind(p) - R_hash(p) over the skewed family at fixed
// eta. Requires a sign change over [p_lo, p_hi] (NoBracketError otherwise);
// every f evaluation is exact.
ThresholdResult improvement_threshold(const CheckRows& rows, double eta, double p_lo,
                                      double p_hi, double tol = 1e-9,
                                      const EvalLimits& limits = {},
                                      unsigned threads = 1);

// CSV schema (fixed): p,q_X,q_Z,R_hash,R_ind_best,n,k,code,H_L_given_S,improved
// with floats at 17 significant digits. The JSON document mirrors the rows
// and carries the run echo.
void write_envelope_csv(std::ostream& out, const std::vector<EnvelopePoint>& points,
                        std::uint64_t seed);
void write_envelope_json(std::ostream& out, const std::vector<EnvelopePoint>& points,
                         const std::vector<CandidateCode>& codes, std::uint64_t seed,
                         const std::vector<std::pair<std::string, std::string>>& run_echo);

}  // namespace indrate
