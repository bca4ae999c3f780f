#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "indrate/codes.hpp"
#include "indrate/envelope.hpp"
#include "indrate/errors.hpp"
#include "indrate/parallel.hpp"
#include "indrate/search.hpp"

namespace {

using namespace indrate;

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// "skewed:eta=<float>[,p=<float>]" or an explicit "pI,pX,pY,pZ".
struct ChannelSpec {
  bool skewed = false;
  double eta = 1.0;
  std::optional<double> p;
  PauliDist dist;  // explicit channels only
};

ChannelSpec parse_channel(const std::string& text) {
  ChannelSpec spec;
  if (text.rfind("skewed:", 0) == 0) {
    spec.skewed = true;
    bool have_eta = false;
    std::stringstream ss(text.substr(7));
    std::string item;
    while (std::getline(ss, item, ',')) {
      auto eq = item.find('=');
      if (eq == std::string::npos) {
        throw Error("bad channel spec item \"" + item + "\"");
      }
      std::string key = item.substr(0, eq);
      double value = std::stod(item.substr(eq + 1));
      if (key == "eta") {
        spec.eta = value;
        have_eta = true;
      } else if (key == "p") {
        spec.p = value;
      } else {
        throw Error("unknown channel spec key \"" + key + "\"");
      }
    }
    if (!have_eta) throw Error("skewed channel spec needs eta=<float>");
    return spec;
  }
  std::stringstream ss(text);
  std::string item;
  std::vector<double> probs;
  while (std::getline(ss, item, ',')) probs.push_back(std::stod(item));
  if (probs.size() != 4) {
    throw Error("channel spec must be skewed:eta=... or pI,pX,pY,pZ");
  }
  spec.dist = make_dist(probs[0], probs[1], probs[2], probs[3]);
  return spec;
}

// "lo:hi:count", inclusive endpoints, uniform in p.
struct GridSpec {
  double lo = 0.0;
  double hi = 0.0;
  std::size_t count = 0;
};

GridSpec parse_grid(const std::string& text) {
  GridSpec g;
  if (std::sscanf(text.c_str(), "%lf:%lf:%zu", &g.lo, &g.hi, &g.count) != 3 ||
      g.count == 0) {
    throw Error("bad grid spec \"" + text + "\", expected lo:hi:count");
  }
  return g;
}

std::vector<ChannelPoint> resolve_points(const ChannelSpec& channel,
                                         const std::optional<double>& p_flag,
                                         const std::optional<GridSpec>& grid) {
  if (!channel.skewed) {
    if (p_flag || grid) {
      throw Error("--p/--p-grid apply only to skewed channel specs");
    }
    return {explicit_point(channel.dist)};
  }
  int sources = (channel.p ? 1 : 0) + (p_flag ? 1 : 0) + (grid ? 1 : 0);
  if (sources > 1) {
    throw Error("give the noise level at most once: p= in the spec, --p, or --p-grid");
  }
  if (sources == 0) return skewed_grid(0.2496778, 0.2708333, 50, channel.eta);
  if (grid) return skewed_grid(grid->lo, grid->hi, grid->count, channel.eta);
  double p = channel.p ? *channel.p : *p_flag;
  return {skewed_point(p, channel.eta)};
}

struct OutputTargets {
  std::ostream* csv = nullptr;
  std::ostream* json = nullptr;
  std::ofstream csv_file;
  std::ofstream json_file;
};

// --out is a base path; the format picks which artifacts appear next to it.
void open_outputs(OutputTargets& t, const std::string& out, const std::string& format) {
  bool want_csv = format == "csv" || format == "both";
  bool want_json = format == "json" || format == "both";
  if (!want_csv && !want_json) throw Error("--format must be csv, json, or both");
  if (out.empty()) {
    if (want_csv && want_json) {
      throw Error("--format both needs --out");
    }
    (want_csv ? t.csv : t.json) = &std::cout;
    return;
  }
  if (want_csv) {
    t.csv_file.open(out + ".csv");
    if (!t.csv_file) throw Error("cannot open " + out + ".csv");
    t.csv = &t.csv_file;
  }
  if (want_json) {
    t.json_file.open(out + ".json");
    if (!t.json_file) throw Error("cannot open " + out + ".json");
    t.json = &t.json_file;
  }
}

using RunEcho = std::vector<std::pair<std::string, std::string>>;

void write_table_csv(std::ostream& out, std::uint64_t seed,
                     const std::vector<std::string>& header,
                     const std::vector<std::vector<std::string>>& rows) {
  out << "# seed=" << seed << "\n";
  for (std::size_t i = 0; i < header.size(); ++i) {
    out << header[i] << (i + 1 < header.size() ? "," : "\n");
  }
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      out << row[i] << (i + 1 < row.size() ? "," : "\n");
    }
  }
}

void write_table_json(std::ostream& out, std::uint64_t seed, const RunEcho& echo,
                      const std::vector<std::string>& header,
                      const std::vector<std::vector<std::string>>& rows,
                      const std::vector<bool>& quoted) {
  out << "{\n  \"run\": {";
  for (std::size_t i = 0; i < echo.size(); ++i) {
    out << (i ? ", " : "") << '"' << echo[i].first << "\": \"" << echo[i].second
        << '"';
  }
  out << "},\n  \"seed\": " << seed << ",\n  \"points\": [\n";
  for (std::size_t r = 0; r < rows.size(); ++r) {
    out << "    {";
    for (std::size_t i = 0; i < header.size(); ++i) {
      out << (i ? ", " : "") << '"' << header[i] << "\": ";
      if (quoted[i]) {
        out << '"' << rows[r][i] << '"';
      } else {
        out << (rows[r][i] == "nan" ? "null" : rows[r][i]);
      }
    }
    out << (r + 1 < rows.size() ? "},\n" : "}\n");
  }
  out << "  ]\n}\n";
}

int run_hashing(const ChannelSpec& channel, const std::optional<double>& p_flag,
                const std::optional<GridSpec>& grid, const std::string& out,
                const std::string& format, std::uint64_t seed, const RunEcho& echo) {
  auto points = resolve_points(channel, p_flag, grid);
  std::vector<std::string> header = {"p", "q_X", "q_Z", "R_hash"};
  std::vector<std::vector<std::string>> rows;
  for (const ChannelPoint& pt : points) {
    rows.push_back({format_double(pt.p), format_double(pt.q_x), format_double(pt.q_z),
                    format_double(hashing_bound(pt.dist))});
  }
  OutputTargets targets;
  open_outputs(targets, out, format);
  if (targets.csv) write_table_csv(*targets.csv, seed, header, rows);
  if (targets.json) {
    write_table_json(*targets.json, seed, echo, header, rows,
                     {false, false, false, false});
  }
  return 0;
}

int run_eval(const std::string& code_text, const ChannelSpec& channel,
             const std::optional<double>& p_flag, const std::optional<GridSpec>& grid,
             const std::string& out, const std::string& format, std::uint64_t seed,
             unsigned threads, const RunEcho& echo) {
  auto points = resolve_points(channel, p_flag, grid);
  std::vector<CandidateCode> codes;
  codes.push_back(make_candidate(parse_code(code_text)));
  auto envelope = build_envelope(codes, points, EvalLimits{}, threads);
  OutputTargets targets;
  open_outputs(targets, out, format);
  if (targets.csv) write_envelope_csv(*targets.csv, envelope, seed);
  if (targets.json) write_envelope_json(*targets.json, envelope, codes, seed, echo);
  return 0;
}

int run_search(const SearchConfig& config, const ChannelSpec& channel,
               const std::optional<double>& p_flag, const std::optional<GridSpec>& grid,
               const std::string& out, std::uint64_t seed, unsigned threads,
               const RunEcho& echo) {
  auto points = resolve_points(channel, p_flag, grid);
  std::vector<CandidateCode> codes;
  sweep(config, [&](const StandardFormShape& shape, const CheckRows& rows) {
    codes.push_back(make_candidate(rows, static_cast<std::int32_t>(shape.r_x)));
  });
  auto envelope = build_envelope(codes, points, EvalLimits{}, threads);
  OutputTargets targets;
  open_outputs(targets, out, "both");
  write_envelope_csv(*targets.csv, envelope, seed);
  write_envelope_json(*targets.json, envelope, codes, seed, echo);
  return 0;
}

int run_threshold(const std::string& code_text, double eta, double p_lo, double p_hi,
                  double tol, const std::string& out, const std::string& format,
                  std::uint64_t seed, unsigned threads, const RunEcho& echo) {
  CheckRows rows = parse_code(code_text);
  ThresholdResult result =
      improvement_threshold(rows, eta, p_lo, p_hi, tol, EvalLimits{}, threads);
  std::vector<std::string> header = {"n", "k", "code", "eta", "p_star", "bracket"};
  std::vector<std::vector<std::string>> table = {
      {std::to_string(result.n), std::to_string(result.k), render_code(rows),
       format_double(eta), format_double(result.p_star), format_double(result.bracket)}};
  OutputTargets targets;
  open_outputs(targets, out, format);
  if (targets.csv) {
    // The code field may contain commas.
    auto quoted_rows = table;
    quoted_rows[0][2] = '"' + quoted_rows[0][2] + '"';
    write_table_csv(*targets.csv, seed, header, quoted_rows);
  }
  if (targets.json) {
    write_table_json(*targets.json, seed, echo, header, table,
                     {false, false, true, false, false, false});
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact induced-rate engine for stabilizer channel transforms"};
  app.require_subcommand(1);

  std::string channel_text;
  std::string code_text;
  std::string grid_text;
  std::string out_path;
  std::string format = "csv";
  std::optional<double> p_flag;
  std::uint64_t seed = 0;
  unsigned threads = default_threads();

  auto add_common = [&](CLI::App* cmd, bool with_channel) {
    if (with_channel) {
      cmd->add_option("--channel", channel_text,
                      "skewed:eta=<f>[,p=<f>] or pI,pX,pY,pZ")
          ->required();
      cmd->add_option("--p", p_flag, "single total error probability p = 1-p_I");
      cmd->add_option("--p-grid", grid_text,
                      "grid lo:hi:count, uniform in p "
                      "(default 0.2496778:0.2708333:50)");
    }
    cmd->add_option("--out", out_path, "output base path (writes <out>.csv/.json)");
    cmd->add_option("--format", format, "csv|json|both");
    cmd->add_option("--seed", seed, "recorded into every artifact");
    cmd->add_option("--threads", threads, "worker threads (1 = serial)");
  };

  CLI::App* hashing = app.add_subcommand("hashing", "baseline hashing-bound curve");
  add_common(hashing, true);

  CLI::App* eval = app.add_subcommand("eval", "induced rate of one code over a grid");
  eval->add_option("--code", code_text, "rows like \"ZZI,IZZ\" or allz:n=/zrep:n=")
      ->required();
  add_common(eval, true);

  SearchConfig config;
  CLI::App* search = app.add_subcommand("search", "standard-form sweep + envelope");
  search->add_option("--nmin", config.n_min, "smallest blocklength");
  search->add_option("--nmax", config.n_max, "largest blocklength");
  search->add_option("--T", config.budget, "DFS iteration budget per (n,k,r_X)");
  search->add_option("--samples", config.sample_count,
                     "random candidates per oversized cell");
  add_common(search, true);

  double eta = 0.0, p_lo = 0.0, p_hi = 0.0, tol = 1e-9;
  CLI::App* threshold =
      app.add_subcommand("threshold", "smallest p where R_ind exceeds R_hash");
  threshold->add_option("--code", code_text, "code under test")->required();
  threshold->add_option("--eta", eta, "bias ratio q_X/q_Z")->required();
  threshold->add_option("--p-lo", p_lo, "bracket lower end")->required();
  threshold->add_option("--p-hi", p_hi, "bracket upper end")->required();
  threshold->add_option("--tol", tol, "bisection interval width target");
  add_common(threshold, false);

  CLI11_PARSE(app, argc, argv);

  try {
    std::optional<GridSpec> grid;
    if (!grid_text.empty()) grid = parse_grid(grid_text);
    RunEcho echo;
    if (app.got_subcommand(hashing) || app.got_subcommand(eval) ||
        app.got_subcommand(search)) {
      echo.emplace_back("channel", channel_text);
      if (p_flag) echo.emplace_back("p", format_double(*p_flag));
      if (!grid_text.empty()) echo.emplace_back("p_grid", grid_text);
    }
    if (app.got_subcommand(hashing)) {
      echo.emplace_back("subcommand", "hashing");
      ChannelSpec channel = parse_channel(channel_text);
      return run_hashing(channel, p_flag, grid, out_path, format, seed, echo);
    }
    if (app.got_subcommand(eval)) {
      echo.emplace_back("subcommand", "eval");
      echo.emplace_back("code", code_text);
      ChannelSpec channel = parse_channel(channel_text);
      return run_eval(code_text, channel, p_flag, grid, out_path, format, seed,
                      threads, echo);
    }
    if (app.got_subcommand(search)) {
      echo.emplace_back("subcommand", "search");
      echo.emplace_back("nmin", std::to_string(config.n_min));
      echo.emplace_back("nmax", std::to_string(config.n_max));
      echo.emplace_back("T", std::to_string(config.budget));
      echo.emplace_back("samples", std::to_string(config.sample_count));
      config.seed = seed;
      ChannelSpec channel = parse_channel(channel_text);
      if (out_path.empty()) throw Error("search needs --out");
      return run_search(config, channel, p_flag, grid, out_path, seed, threads, echo);
    }
    if (app.got_subcommand(threshold)) {
      echo.emplace_back("subcommand", "threshold");
      echo.emplace_back("code", code_text);
      echo.emplace_back("eta", format_double(eta));
      echo.emplace_back("p_lo", format_double(p_lo));
      echo.emplace_back("p_hi", format_double(p_hi));
      echo.emplace_back("tol", format_double(tol));
      return run_threshold(code_text, eta, p_lo, p_hi, tol, out_path, format, seed,
                           threads, echo);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
