// Copyright 2026 The Incidence Authors
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

// Command-line front end. run() is the whole program; tools/incidence_cli.cpp
// only forwards argv. Exit codes: 0 success, 1 verification mismatch,
// 2 input error.

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "incidence/curves.hpp"
#include "incidence/extremal.hpp"
#include "incidence/incidence.hpp"
#include "incidence/io.hpp"
#include "incidence/specialize.hpp"
#include "incidence/sumproduct.hpp"

namespace incidence::cli {

inline constexpr int kOk = 0;
inline constexpr int kMismatch = 1;
inline constexpr int kInputError = 2;

/// Ten significant digits.
inline std::string fmt_real(double v) {
  std::ostringstream os;
  os << std::setprecision(10) << v;
  return os.str();
}

inline json report_json(const IncidenceReport& r) {
  json j{{"m", r.m},
         {"n", r.n},
         {"incidences", r.incidences},
         {"st_bound", r.st_bound},
         {"st_ratio", r.st_ratio},
         {"main_term_ratio", nullptr}};
  if (r.main_term_ratio) j["main_term_ratio"] = *r.main_term_ratio;
  return j;
}

inline void print_report(std::ostream& out, const IncidenceReport& r) {
  out << "m = " << r.m << "\n"
      << "n = " << r.n << "\n"
      << "incidences = " << r.incidences << "\n"
      << "st_bound = " << fmt_real(r.st_bound) << "\n"
      << "st_ratio = " << fmt_real(r.st_ratio) << "\n"
      << "main_term_ratio = " << (r.main_term_ratio ? fmt_real(*r.main_term_ratio) : std::string("n/a")) << "\n";
}

inline json line_json(const Line& l) { return json::array({l.a().encoding(), l.b().encoding(), l.c().encoding()}); }

struct Options {
  std::string family;
  std::uint64_t n = 0;
  std::string out_path;
  std::string ratio = "2";
  std::string start = "1";
  std::string step = "1";
  std::string in_path;
  std::size_t threads = 0;
  std::uint64_t k = 2;
  std::uint64_t s = 1;
  std::size_t trials = 100;
  std::uint64_t seed = 0;
  std::size_t max_retries = 32;
  std::uint64_t nmax = 0;
  double eps = 0.0;
  std::string report_path;
};

class Runner {
 public:
  Runner(std::ostream& out, std::ostream& err) : out_(out), err_(err) {}

  int gen(const Options& o) {
    const auto family = parse_family(o.family);
    if (!family) throw InputError("unknown family '" + o.family + "'");
    FamilyParams params{parse_rational(o.start), parse_rational(o.step), parse_rational(o.ratio)};
    ConfigFile file{Configuration(TowerDescriptor::rationals()), {}, {}};
    auto generated = generate(*family, o.n, params);
    if (auto* cfg = std::get_if<Configuration>(&generated))
      file.config = std::move(*cfg);
    else
      file.sets.emplace("A", std::get<ElementSet>(std::move(generated)));
    const std::string text = config_to_json(file).dump(2) + "\n";
    if (o.out_path.empty()) {
      out_ << text;
    } else {
      std::ofstream f(o.out_path);
      if (!f) throw InputError("cannot write '" + o.out_path + "'");
      f << text;
      out_ << "wrote " << o.out_path << ": " << file.config.points().size() << " points, "
           << file.config.lines().size() << " lines";
      for (const auto& [name, s] : file.sets) out_ << ", set " << name << " of size " << s.size();
      out_ << "\n";
    }
    return kOk;
  }

  int count(const Options& o) {
    const ConfigFile file = read_config_file(o.in_path);
    const auto report = count_incidences(file.config, o.threads ? o.threads : default_thread_count());
    print_duplicates(file);
    print_report(out_, report);
    return emit(o, report_json(report), kOk);
  }

  int rich(const Options& o) {
    const ConfigFile file = read_config_file(o.in_path);
    const auto res = rich_lines(file.config, o.k);
    out_ << "n = " << o.k << "\n"
         << "m = " << file.config.points().size() << "\n"
         << "rich_lines = " << res.records.size() << "\n"
         << "ratio = " << fmt_real(res.ratio) << "  (|L_n| / (m^2/n^3 + m/n))\n";
    json recs = json::array();
    for (const auto& r : res.records) {
      out_ << "  " << r.line << " richness " << r.richness << "\n";
      recs.push_back({{"line", line_json(r.line)}, {"richness", r.richness}});
    }
    return emit(o, json{{"n", o.k}, {"m", file.config.points().size()}, {"records", recs}, {"ratio", res.ratio}}, kOk);
  }

  int beck(const Options& o) {
    const ConfigFile file = read_config_file(o.in_path);
    const auto r = beck_report(file.config.points());
    out_ << "m = " << r.m << "\n"
         << "max_richness = " << r.max_richness << "\n"
         << "num_connecting_lines = " << r.num_connecting_lines << "\n";
    return emit(o, json{{"m", r.m}, {"max_richness", r.max_richness}, {"num_connecting_lines", r.num_connecting_lines}},
                kOk);
  }

  int sumprod(const Options& o) {
    const ConfigFile file = read_config_file(o.in_path);
    if (file.sets.empty()) throw InputError("'" + o.in_path + "' has no sets");
    json doc = json::object();
    for (const auto& [name, set] : file.sets) {
      const auto r = es_report(set);
      out_ << name << ": |A| = " << r.size_a << ", |A+A| = " << r.size_sum << ", |A.A| = " << r.size_prod
           << ", exponent_ratio = " << fmt_real(r.exponent_ratio) << "\n";
      doc[name] = {{"size_a", r.size_a},
                   {"size_sum", r.size_sum},
                   {"size_prod", r.size_prod},
                   {"exponent_ratio", r.exponent_ratio}};
    }
    out_ << "exponent_ratio = max(|A+A|, |A.A|) / |A|^(14/11) with the implied constant taken as 1\n";
    return emit(o, json{{"sets", doc}, {"convention", "implied constant taken as 1"}}, kOk);
  }

  int specialize(const Options& o) {
    const ConfigFile file = read_config_file(o.in_path);
    const auto r = invariance_check(file.config, o.trials, o.seed, o.max_retries);
    out_ << "trials = " << r.trials << "\n"
         << "passes = " << r.passes << "\n"
         << "failures = " << r.failures << "\n"
         << "mismatched_entries = " << r.mismatched_entries << "\n"
         << "rejected_assignments = " << r.rejected_assignments << "\n"
         << (r.ok() ? "incidence matrix preserved in every trial\n" : "MISMATCH: incidence matrix changed\n");
    json asg = json::array();
    for (const auto& a : r.assignments) {
      json item = json::object();
      for (const auto& [name, v] : a) item[name] = to_string(v);
      asg.push_back(std::move(item));
    }
    json doc{{"seed", o.seed},
             {"trials", r.trials},
             {"passes", r.passes},
             {"failures", r.failures},
             {"mismatched_entries", r.mismatched_entries},
             {"rejected_assignments", r.rejected_assignments},
             {"assignments", asg}};
    return emit(o, doc, r.ok() ? kOk : kMismatch);
  }

  int dof(const Options& o) {
    const ConfigFile file = read_config_file(o.in_path);
    std::vector<Curve> curves = file.curves;
    if (curves.empty())
      for (const auto& l : file.config.lines()) curves.push_back(Curve::from_line(l));
    const auto& pts = file.config.points();
    const auto violations = dof_check(pts, curves, static_cast<unsigned>(o.k), static_cast<unsigned>(o.s));
    const auto inc = count_curve_incidences(pts, curves);
    const double ratio = curve_bound_ratio(inc, pts.size(), curves.size(), static_cast<unsigned>(o.k), o.eps);
    out_ << "m = " << pts.size() << "\n"
         << "curves = " << curves.size() << "\n"
         << "incidences = " << inc << "\n"
         << "bound_ratio = " << fmt_real(ratio) << "  (k = " << o.k << ", eps = " << o.eps << ")\n"
         << "violations = " << violations.size() << "\n";
    json vs = json::array();
    for (const auto& v : violations) {
      const bool subset = v.kind == DofViolation::Kind::subset;
      out_ << "  " << (subset ? "subset" : "pair") << " points {";
      for (std::size_t i = 0; i < v.points.size(); ++i) out_ << (i ? "," : "") << v.points[i];
      out_ << "} curves {";
      for (std::size_t i = 0; i < v.curves.size(); ++i) out_ << (i ? "," : "") << v.curves[i];
      out_ << "}\n";
      vs.push_back({{"kind", subset ? "subset" : "pair"}, {"points", v.points}, {"curves", v.curves}});
    }
    json doc{{"m", pts.size()}, {"curves", curves.size()}, {"incidences", inc},
             {"bound_ratio", ratio}, {"k", o.k},              {"s", o.s},
             {"violations", vs}};
    return emit(o, doc, violations.empty() ? kOk : kMismatch);
  }

  int verify(const Options& o) {
    const auto family = parse_family(o.family);
    if (!family || !is_incidence_family(*family)) throw InputError("verify needs st_grid, point_heavy or line_heavy");
    if (o.nmax < 1) throw InputError("--nmax must be at least 1");
    const std::size_t threads = o.threads ? o.threads : default_thread_count();
    bool all_ok = true;
    json rows = json::array();
    out_ << "N\tm\tn\tI\texpected\tmain_term_ratio\tst_ratio\tstatus\n";
    for (std::uint64_t n = 1; n <= o.nmax; ++n) {
      const auto r = count_incidences(generate_configuration(*family, n), threads);
      const std::uint64_t expected = expected_incidences(*family, n);
      const bool ok = r.incidences == expected;
      all_ok = all_ok && ok;
      out_ << n << "\t" << r.m << "\t" << r.n << "\t" << r.incidences << "\t" << expected << "\t"
           << (r.main_term_ratio ? fmt_real(*r.main_term_ratio) : "n/a") << "\t" << fmt_real(r.st_ratio) << "\t"
           << (ok ? "ok" : "MISMATCH") << "\n";
      json row = report_json(r);
      row["N"] = n;
      row["expected"] = expected;
      row["ok"] = ok;
      rows.push_back(std::move(row));
    }
    return emit(o, json{{"family", o.family}, {"rows", rows}, {"ok", all_ok}}, all_ok ? kOk : kMismatch);
  }

 private:
  void print_duplicates(const ConfigFile& file) {
    if (file.config.duplicate_points() || file.config.duplicate_lines())
      err_ << "warning: dropped " << file.config.duplicate_points() << " duplicate points and "
           << file.config.duplicate_lines() << " duplicate lines\n";
  }

  int emit(const Options& o, const json& doc, int code) {
    if (o.report_path.empty()) return code;
    const std::string text = doc.dump(2) + "\n";
    if (o.report_path == "-") {
      out_ << text;
    } else {
      std::ofstream f(o.report_path);
      if (!f) throw InputError("cannot write '" + o.report_path + "'");
      f << text;
    }
    return code;
  }

  std::ostream& out_;
  std::ostream& err_;
};

/// Parses argv and runs one subcommand.
inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  CLI::App app{"Exact point-line incidence experiments over fields of characteristic zero", "incidence"};
  app.require_subcommand(1);
  Options o;

  auto add_report = [&](CLI::App* sub) {
    sub->add_option("--report", o.report_path, "Write the structured (JSON) report to PATH ('-' for stdout)");
  };
  auto add_in = [&](CLI::App* sub) { sub->add_option("--in", o.in_path, "Config file")->required(); };

  auto* gen = app.add_subcommand("gen", "Generate a family and write it as a config file");
  gen->add_option("--family", o.family, "st_grid | point_heavy | line_heavy | square_grid | "
                                        "arithmetic_progression | geometric_progression")
      ->required();
  gen->add_option("--n", o.n, "Family size N (>= 1)")->required();
  gen->add_option("--out", o.out_path, "Output path (default: stdout)");
  gen->add_option("--ratio", o.ratio, "Geometric ratio");
  gen->add_option("--start", o.start, "First term of a progression");
  gen->add_option("--step", o.step, "Arithmetic difference");

  auto* count = app.add_subcommand("count", "Exact incidence count and Szemeredi-Trotter ratios");
  add_in(count);
  count->add_option("--threads", o.threads, "Worker threads (default: $INCIDENCE_THREADS or hardware)");
  add_report(count);

  auto* rich = app.add_subcommand("rich", "Lines of the file carrying at least K of its points");
  add_in(rich);
  rich->add_option("--k", o.k, "Richness threshold (>= 2)")->required();
  add_report(rich);

  auto* beck = app.add_subcommand("beck", "Connecting-line statistics of the point set");
  add_in(beck);
  add_report(beck);

  auto* sumprod = app.add_subcommand("sumprod", "Sum and product set sizes for each set");
  add_in(sumprod);
  add_report(sumprod);

  auto* spec = app.add_subcommand("specialize", "Check that generic specialization preserves the incidence matrix");
  add_in(spec);
  spec->add_option("--trials", o.trials, "Number of specializations")->default_val(100);
  spec->add_option("--seed", o.seed, "Seed for every random draw")->default_val(0);
  spec->add_option("--max-retries", o.max_retries, "Draws per trial before giving up")->default_val(32);
  add_report(spec);

  auto* dof = app.add_subcommand("dof", "Degrees-of-freedom / multiplicity-type check (curves, else lines)");
  add_in(dof);
  dof->add_option("--k", o.k, "Degrees of freedom")->required();
  dof->add_option("--s", o.s, "Multiplicity type")->required();
  dof->add_option("--eps", o.eps, "Exponent slack used in the reported bound ratio")->default_val(0.0);
  add_report(dof);

  auto* verify = app.add_subcommand("verify", "Generate, count and compare with the closed-form count");
  verify->add_option("--family", o.family, "st_grid | point_heavy | line_heavy")->required();
  verify->add_option("--nmax", o.nmax, "Largest N")->required();
  verify->add_option("--threads", o.threads, "Worker threads");
  add_report(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return kOk;
    }
    err << "error: " << e.what() << "\nrun with --help for usage\n";
    return kInputError;
  }

  Runner runner(out, err);
  try {
    if (gen->parsed()) return runner.gen(o);
    if (count->parsed()) return runner.count(o);
    if (rich->parsed()) return runner.rich(o);
    if (beck->parsed()) return runner.beck(o);
    if (sumprod->parsed()) return runner.sumprod(o);
    if (spec->parsed()) return runner.specialize(o);
    if (dof->parsed()) return runner.dof(o);
    if (verify->parsed()) return runner.verify(o);
  } catch (const SpecializationError& e) {
    err << "error: " << e.what() << "\n";
    return e.reason() == SpecializationError::Reason::retries_exhausted ? kMismatch : kInputError;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}

}  // namespace incidence::cli
