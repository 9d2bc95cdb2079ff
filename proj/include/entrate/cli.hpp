// Copyright 2026 The entrate Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Command-line front end. run() is the whole program minus main(), so tests
// can drive it in-process. Exit codes: 0 success, 1 a regime-valid bound was
// violated, 2 invalid input.

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "entrate/assumption.hpp"
#include "entrate/bounds.hpp"
#include "entrate/errors.hpp"
#include "entrate/functions.hpp"
#include "entrate/harness.hpp"

namespace entrate::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitInvalid = 2;

/// Default output directory when --out is not given.
inline constexpr const char* kOutDirEnv = "ENTRATE_OUT_DIR";

inline std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, sep)) {
    if (!cur.empty()) out.push_back(cur);
  }
  return out;
}

inline double parse_double(const std::string& s) {
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (s.empty() || end != s.c_str() + s.size() || !std::isfinite(v)) {
    throw ParameterError("not a number: '" + s + "'");
  }
  return v;
}

inline int parse_int(const std::string& s) {
  const double v = parse_double(s);
  if (v != std::floor(v) || std::abs(v) > 1e9) throw ParameterError("not an integer: '" + s + "'");
  return static_cast<int>(v);
}

/// `a:b:step` (inclusive of b up to rounding) or a comma-separated list.
inline std::vector<double> parse_real_grid(const std::string& s) {
  std::vector<double> out;
  const auto parts = split(s, ':');
  if (s.find(':') != std::string::npos) {
    if (parts.size() != 3) throw ParameterError("range grid must be start:stop:step");
    const double a = parse_double(parts[0]), b = parse_double(parts[1]), step = parse_double(parts[2]);
    if (!(step > 0.0)) throw ParameterError("range grid step must be positive");
    for (int k = 0;; ++k) {
      const double v = std::round((a + k * step) * 1e12) / 1e12;
      if (v > b + 1e-12) break;
      out.push_back(v);
      if (k > 1000000) throw ParameterError("range grid too large");
    }
  } else {
    for (const auto& t : split(s, ',')) out.push_back(parse_double(t));
  }
  if (out.empty()) throw ParameterError("empty grid '" + s + "'");
  return out;
}

/// `a:b` (inclusive) or a comma-separated list of integers.
inline std::vector<int> parse_int_grid(const std::string& s) {
  std::vector<int> out;
  if (s.find(':') != std::string::npos) {
    const auto parts = split(s, ':');
    if (parts.size() != 2) throw ParameterError("integer range must be start:stop");
    const int a = parse_int(parts[0]), b = parse_int(parts[1]);
    for (int v = a; v <= b; ++v) out.push_back(v);
  } else {
    for (const auto& t : split(s, ',')) out.push_back(parse_int(t));
  }
  if (out.empty()) throw ParameterError("empty grid '" + s + "'");
  return out;
}

inline std::vector<Layout> parse_layouts(const std::string& s) {
  std::vector<Layout> out;
  for (const auto& item : split(s, ',')) {
    Layout l;
    for (const auto& d : split(item, 'x')) l.push_back(parse_int(d));
    out.push_back(std::move(l));
  }
  if (out.empty()) throw ParameterError("no layouts given");
  return out;
}

inline std::vector<std::string> parse_list(const std::vector<std::string>& raw) {
  std::vector<std::string> out;
  for (const auto& r : raw) {
    for (auto& t : split(r, ',')) out.push_back(std::move(t));
  }
  return out;
}

inline std::filesystem::path output_path(const std::string& flag, const std::string& default_name) {
  if (!flag.empty()) return flag;
  const char* dir = std::getenv(kOutDirEnv);
  return std::filesystem::path(dir && *dir ? dir : ".") / default_name;
}

inline void write_file(const std::filesystem::path& path, const std::string& content) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream os(path, std::ios::binary);
  if (!os) throw ParameterError("cannot open output file " + path.string());
  os << content;
  if (!os) throw ParameterError("failed writing " + path.string());
}

struct ScanFlags {
  std::string config;
  std::uint64_t seed = 0;
  int trials = 0;
  std::string dims, p_grid, layouts, hamiltonian;
  std::vector<std::string> functions, specs;
  double min_eig = 0.0, dt = 0.0;
  int workers = 0, refine_steps = 0;
  std::string out, json;
};

inline void add_scan_flags(CLI::App* sub, ScanFlags& f, bool sie) {
  sub->add_option("--config", f.config, "ScanConfig JSON file; flags override its fields");
  sub->add_option("--seed", f.seed, "master seed");
  sub->add_option("--trials", f.trials, "number of trials");
  sub->add_option("--min-eig", f.min_eig, "spectral floor of Y");
  sub->add_option("--workers", f.workers, "concurrent workers");
  sub->add_option("--out", f.out, "CSV output path");
  sub->add_option("--json", f.json, "JSON report path");
  if (sie) {
    sub->add_option("--layouts", f.layouts, "layouts d_a x d_A x d_B x d_b, comma separated");
    sub->add_option("--spec", f.specs, "entropies: vn, renyi:<a>, tsallis:<q>");
    sub->add_option("--hamiltonian", f.hamiltonian, "random or identity");
  } else {
    sub->add_option("--dims", f.dims, "dimensions, e.g. 2,3 or 2:6");
    sub->add_option("--fn", f.functions, "functions: log, power:<beta>");
    sub->add_option("--p-grid", f.p_grid, "p values: list or start:stop:step");
    sub->add_option("--dt", f.dt, "finite-difference step");
    sub->add_option("--refine-steps", f.refine_steps, "local refinement steps (tightness)");
  }
}

inline ScanConfig build_config(CLI::App* sub, const ScanFlags& f) {
  ScanConfig cfg;
  if (!f.config.empty()) {
    std::ifstream is(f.config);
    if (!is) throw ParameterError("cannot read config " + f.config);
    nlohmann::json j;
    try {
      is >> j;
      cfg = j.get<ScanConfig>();
    } catch (const nlohmann::json::exception& e) {
      throw ParameterError(std::string("invalid config JSON: ") + e.what());
    }
  }
  auto given = [&](const char* name) { return sub->get_option_no_throw(name) && sub->count(name) > 0; };
  if (given("--seed")) cfg.master_seed = f.seed;
  if (given("--trials")) cfg.trials = f.trials;
  if (given("--min-eig")) cfg.min_eig = f.min_eig;
  if (given("--workers")) cfg.workers = f.workers;
  if (given("--dims")) cfg.dims = parse_int_grid(f.dims);
  if (given("--fn")) cfg.functions = parse_list(f.functions);
  if (given("--p-grid")) cfg.p_grid = parse_real_grid(f.p_grid);
  if (given("--dt")) cfg.dt = f.dt;
  if (given("--refine-steps")) cfg.refine_steps = f.refine_steps;
  if (given("--layouts")) cfg.layouts = parse_layouts(f.layouts);
  if (given("--spec")) cfg.specs = parse_list(f.specs);
  if (given("--hamiltonian")) cfg.hamiltonian = f.hamiltonian;
  cfg.validate();
  return cfg;
}

inline int emit_scan(const ScanReport& rep, const ScanFlags& f, std::ostream& out) {
  std::ostringstream csv;
  write_csv(csv, rep);
  const auto csv_path = output_path(f.out, rep.kind + ".csv");
  write_file(csv_path, csv.str());
  if (!f.json.empty()) write_file(f.json, report_to_json(rep).dump(2) + "\n");
  const ScanSummary& s = rep.summary;
  out << rep.kind << ": " << rep.config.trials << " trials, " << s.comparisons << " comparisons ("
      << s.valid_comparisons << " regime-valid), " << s.violations << " violations, " << rep.errors.size()
      << " trial errors, max ratio " << short_number(s.max_ratio) << "; wrote " << csv_path.string() << "\n";
  return s.violations == 0 ? kExitOk : kExitViolation;
}

inline std::string bounds_table_csv(const ScalarFunction& f, const std::vector<double>& grid) {
  std::ostringstream os;
  os << "p,function,theorem_p,theorem_1mp,theorem_min,theorem_p_licensed,theorem_1mp_licensed,power,power_valid,"
        "ak,sim9,sim9_valid,lv,lv_valid,sim_binary\n";
  for (double p : grid) {
    const TheoremBound tb = theorem_bound(p, f);
    const ClassicBounds cb = classic_bounds(p);
    os << format_number(p) << ',' << f.name() << ',' << format_number(tb.branch_p) << ','
       << format_number(tb.branch_1mp) << ',' << format_number(tb.min) << ','
       << (theorem_branch_licensed(f, p) ? 1 : 0) << ',' << (theorem_branch_licensed(f, 1.0 - p) ? 1 : 0) << ',';
    if (f.kind() == FunctionKind::SignedPower && p <= 0.5) {
      const BoundRecord pb = power_bound_record(p, f.beta());
      os << format_number(pb.value) << ',' << (pb.regime_valid ? 1 : 0);
    } else {
      os << ',';
    }
    os << ',' << (f.has_antiderivative() ? format_number(ak_bound(p, f)) : std::string()) << ','
       << format_number(cb.sim9.value) << ',' << (cb.sim9.regime_valid ? 1 : 0) << ',' << format_number(cb.lv.value)
       << ',' << (cb.lv.regime_valid ? 1 : 0) << ',' << format_number(cb.sim_binary.value) << '\n';
  }
  return os.str();
}

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"entrate: entropy-rate bound verification toolkit"};
  app.require_subcommand(1);

  ScanFlags sim_flags, sie_flags, tight_flags;
  CLI::App* sim = app.add_subcommand("verify-sim", "scan max mixing rates against commutator bounds");
  add_scan_flags(sim, sim_flags, false);
  CLI::App* sie = app.add_subcommand("verify-sie", "scan entangling rates against entangling bounds");
  add_scan_flags(sie, sie_flags, true);
  CLI::App* tight = app.add_subcommand("tightness", "ratio of max mixing rate to the theorem bound");
  add_scan_flags(tight, tight_flags, false);

  std::string a_fn = "log", a_out;
  double a_p = 0.1;
  int a_grid = 300;
  CLI::App* assume = app.add_subcommand("assumption", "grid-check the growth condition for f at p");
  assume->add_option("--fn", a_fn, "function: log, power:<beta>");
  assume->add_option("--p", a_p, "p in (0, 1)")->required();
  assume->add_option("--grid", a_grid, "grid points per axis");
  assume->add_option("--out", a_out, "JSON report path");

  std::string b_fn = "log", b_grid = "0.05:0.5:0.05", b_out;
  CLI::App* table = app.add_subcommand("bounds-table", "closed-form bound values over a p grid");
  table->add_option("--fn", b_fn, "function: log, power:<beta>");
  table->add_option("--p-grid", b_grid, "p values: list or start:stop:step");
  table->add_option("--out", b_out, "CSV output path (default: stdout)");

  std::string s_kind, s_db = "2:64", s_out;
  double s_alpha = 0.0, s_q = 0.0;
  CLI::App* sweep = app.add_subcommand("sweep", "Renyi/Tsallis dimension bounds over d_B");
  sweep->add_option("--kind", s_kind, "renyi or tsallis")->required();
  sweep->add_option("--alpha", s_alpha, "Renyi order");
  sweep->add_option("--q", s_q, "Tsallis order");
  sweep->add_option("--db", s_db, "d_B grid: start:stop or list");
  sweep->add_option("--out", s_out, "CSV output path (default: stdout)");

  std::vector<std::string> argv_store{"entrate"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "entrate: " << e.what() << "\n";
    return kExitInvalid;
  }

  try {
    if (sim->parsed()) return emit_scan(verify_sim_bounds(build_config(sim, sim_flags)), sim_flags, out);
    if (sie->parsed()) return emit_scan(verify_sie_bounds(build_config(sie, sie_flags)), sie_flags, out);
    if (tight->parsed()) return emit_scan(tightness_scan(build_config(tight, tight_flags)), tight_flags, out);

    if (assume->parsed()) {
      const ScalarFunction f = parse_function(a_fn);
      const AssumptionReport rep = check_assumption(f, a_p, a_grid);
      nlohmann::json j{{"function", rep.function},     {"p", rep.p},
                       {"grid_size", rep.grid_size},   {"pairs_tested", rep.pairs_tested},
                       {"violation_count", rep.violation_count},
                       {"certified", rep.certified},   {"proven_regime", rep.proven_regime},
                       {"note", rep.note}};
      if (f.kind() == FunctionKind::SignedPower && f.beta() > 0.0) {
        const GammaThreshold g = gamma_threshold(f.beta());
        j["gamma"] = g.gamma;
        j["p_max"] = g.p_max;
      }
      nlohmann::json v = nlohmann::json::array();
      for (const auto& x : rep.violations) v.push_back({{"x", x.x}, {"y", x.y}, {"lhs", x.lhs}, {"rhs", x.rhs}});
      j["violations"] = std::move(v);
      write_file(output_path(a_out, "assumption.json"), j.dump(2) + "\n");
      out << "assumption: " << rep.function << " at p=" << short_number(rep.p) << ": " << rep.note << "\n";
      return rep.proven_regime && !rep.certified ? kExitViolation : kExitOk;
    }

    if (table->parsed()) {
      const std::string csv = bounds_table_csv(parse_function(b_fn), parse_real_grid(b_grid));
      if (b_out.empty()) out << csv;
      else write_file(b_out, csv);
      return kExitOk;
    }

    if (sweep->parsed()) {
      const std::vector<int> grid = parse_int_grid(s_db);
      std::ostringstream os;
      os << "d_B,kind,order,bound,regime_valid\n";
      double prev = 0.0;
      bool increasing = true, decreasing = true;
      for (std::size_t k = 0; k < grid.size(); ++k) {
        BoundRecord r;
        double order;
        if (s_kind == "renyi") {
          order = s_alpha;
          r = renyi_dim_bound(grid[k], s_alpha);
        } else if (s_kind == "tsallis") {
          order = s_q;
          r = tsallis_dim_bound(grid[k], s_q);
        } else {
          throw ParameterError("sweep: --kind must be renyi or tsallis");
        }
        if (k > 0) {
          increasing = increasing && r.value > prev;
          decreasing = decreasing && r.value < prev;
        }
        prev = r.value;
        os << grid[k] << ',' << s_kind << ',' << format_number(order) << ',' << format_number(r.value) << ','
           << (r.regime_valid ? 1 : 0) << '\n';
      }
      if (s_out.empty()) {
        out << os.str();
      } else {
        write_file(s_out, os.str());
        out << "sweep: " << grid.size() << " rows, "
            << (increasing ? "strictly increasing" : decreasing ? "strictly decreasing" : "not monotone") << "\n";
      }
      return kExitOk;
    }
  } catch (const Error& e) {
    err << "entrate: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "entrate: " << e.what() << "\n";
    return kExitInvalid;
  }
  return kExitInvalid;
}

}  // namespace entrate::cli
