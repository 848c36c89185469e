// Copyright 2026 The isoframe Authors
// SPDX-License-Identifier: Apache-2.0
//
// isoframe: restricted defect, table reproduction, perturbation sweeps and
// family verification for POVM vector sets.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "isoframe/constructions.hpp"
#include "isoframe/core.hpp"
#include "isoframe/defect.hpp"
#include "isoframe/family.hpp"
#include "isoframe/kernels.hpp"
#include "isoframe/report_io.hpp"
#include "isoframe/robustness.hpp"
#include "isoframe/tables.hpp"
#include "isoframe/vector_io.hpp"

namespace {

using namespace isoframe;
using json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitUsage = 64;
constexpr int kExitInternal = 70;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  double tol = 1e-8;
  std::uint64_t seed = 1;
  int samples = 8;
  std::string out;
  std::string format = "text";
  bool long_running = false;
};

std::string fmt6(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

std::string pair_name(const Pair& p) {
  return "R" + std::to_string(p.first + 1) + "," + std::to_string(p.second + 1);
}

int thread_count() {
  const char* env = std::getenv("ISOFRAME_THREADS");
  if (env == nullptr) return 1;
  const int n = std::atoi(env);
  return n > 0 ? n : 1;
}

void emit(const RunConfig& cfg, const std::string& text) {
  if (cfg.out.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream f(cfg.out);
  if (!f) throw UsageError("cannot write " + cfg.out);
  f << text;
  if (!text.empty() && text.back() != '\n') f << '\n';
}

// Positional words name a built-in structure, or a single path names a vector file.
NamedStructure resolve(const std::vector<std::string>& words, const RunConfig& cfg) {
  if (words.empty()) throw UsageError("missing structure");
  NamedStructure s;
  if (words.size() == 1 && std::filesystem::exists(words[0])) {
    s.name = words[0];
    s.vectors = load_vectors(words[0], &s.declared_accuracy);
    s.unitary = unitary_from_gram(gram_from_vectors(*s.vectors));
  } else {
    try {
      s = make_structure(words);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
  if (s.long_running && !cfg.long_running) {
    throw UsageError(s.name + " is a long-running structure; pass --long-running");
  }
  return s;
}

DefectOptions defect_options(const RunConfig& cfg) {
  DefectOptions opt;
  opt.tol = cfg.tol;
  opt.long_running = cfg.long_running;
  return opt;
}

int cmd_defect(const std::vector<std::string>& words, int gauge_row, const RunConfig& cfg) {
  const NamedStructure s = resolve(words, cfg);
  DefectOptions opt = defect_options(cfg);
  opt.gauge = GaugeChoice{gauge_row};
  const DefectReport rep = restricted_defect(s.unitary, opt);
  if (cfg.format == "json") {
    emit(cfg, defect_report_json(rep, s.name));
  } else {
    std::ostringstream out;
    out << defect_report_summary(rep, s.name) << "\n"
        << "  method=" << rep.method << " sigma_max=" << fmt6(rep.sigma_max)
        << " gauge_residual=" << fmt6(rep.gauge_residual) << " gap_log10=" << fmt6(rep.gap_log10)
        << (rep.complete ? "" : " [rank certified only for the computed extremes]") << "\n";
    emit(cfg, out.str());
  }
  return kExitOk;
}

int cmd_tables(int which, const RunConfig& cfg) {
  if (which < 1 || which > 3) throw UsageError("table must be 1, 2 or 3");
  const std::vector<TableCell> cells = reproduce_table(which, {cfg.tol, cfg.long_running});
  const bool ok = table_matches(cells);
  std::ostringstream out;
  if (cfg.format == "json") {
    json j = json::array();
    for (const auto& c : cells) {
      json e;
      e["table"] = c.table;
      e["cell"] = c.label;
      e["published"] = c.published;
      if (c.evaluated) {
        e["computed"] = c.computed;
        e["status"] = !c.graded ? "reported" : c.pass ? "pass" : "fail";
      } else {
        e["status"] = "skipped";
      }
      e["note"] = c.note;
      j.push_back(e);
    }
    out << j.dump(2);
  } else if (cfg.format == "csv") {
    out << "table,cell,published,computed,status,note\n";
    for (const auto& c : cells) {
      out << c.table << ',' << c.label << ',' << c.published << ','
          << (c.evaluated ? std::to_string(c.computed) : "") << ','
          << (c.evaluated ? (!c.graded ? "reported" : c.pass ? "pass" : "fail") : "skipped") << ','
          << c.note << '\n';
    }
  } else {
    for (const auto& c : cells) {
      char buf[256];
      std::snprintf(buf, sizeof buf, "table %s  %-22s published=%-5s computed=%-5s %s%s%s", c.table.c_str(),
                    c.label.c_str(), c.published.c_str(),
                    c.evaluated ? std::to_string(c.computed).c_str() : "-",
                    c.evaluated ? (!c.graded ? "reported" : c.pass ? "pass" : "FAIL") : "skipped",
                    c.note.empty() ? "" : "  ", c.note.c_str());
      out << buf << '\n';
    }
    out << (ok ? "all comparable cells match\n" : "mismatch against the published table\n");
  }
  emit(cfg, out.str());
  return ok ? kExitOk : kExitMismatch;
}

std::vector<double> parse_grid(const std::string& spec) {
  double lo = 0.0;
  double hi = 0.0;
  int points = 0;
  char tail = 0;
  if (std::sscanf(spec.c_str(), "%lf:%lf:%d%c", &lo, &hi, &points, &tail) != 3 || points < 2 ||
      !(hi > lo) || hi > 0.0) {
    throw UsageError("grid must be LO:HI:POINTS with exponents LO < HI <= 0 and POINTS >= 2");
  }
  return log_grid(lo, hi, points);
}

int cmd_robustness(const std::vector<std::string>& words, const std::string& grid,
                   const std::string& variant, const RunConfig& cfg) {
  SweepOptions opt;
  opt.s_grid = parse_grid(grid);
  if (variant == "appendix") {
    opt.variant = BoundVariant::Appendix;
  } else if (variant == "main") {
    opt.variant = BoundVariant::MainText;
  } else {
    throw UsageError("variant must be appendix or main");
  }
  const NamedStructure s = resolve(words, cfg);
  if (!s.vectors) throw UsageError(s.name + " has no vector realization to perturb");
  opt.samples = cfg.samples;
  opt.seed = cfg.seed;
  opt.tol = cfg.tol;
  opt.threads = thread_count();
  const RobustnessReport rep = singular_sweep(*s.vectors, opt, s.name);
  if (cfg.format == "json") {
    json j;
    j["structure"] = rep.name;
    j["d"] = rep.d;
    j["N"] = rep.n;
    j["samples"] = rep.samples;
    j["seed"] = rep.seed;
    j["tol"] = rep.tol;
    j["nullity"] = rep.nullity;
    j["sigma1_reference"] = rep.sigma1_reference;
    j["f_value"] = rep.f_value;
    j["s_max_bound"] = rep.s_max_bound;
    j["warnings"] = rep.warnings;
    json pts = json::array();
    for (const auto& p : rep.points) {
      pts.push_back({{"s", p.s},
                     {"sigma0_mean", p.sigma0_mean},
                     {"sigma1_mean", p.sigma1_mean},
                     {"sigma0_min", p.sigma0_min},
                     {"sigma0_max", p.sigma0_max},
                     {"sigma1_min", p.sigma1_min},
                     {"sigma1_max", p.sigma1_max}});
    }
    j["points"] = pts;
    emit(cfg, j.dump(2));
  } else {
    emit(cfg, robustness_csv(rep));
  }
  return kExitOk;
}

int cmd_family(const std::vector<std::string>& words, int range, const RunConfig& cfg) {
  const NamedStructure s = resolve(words, cfg);
  DefectOptions opt = defect_options(cfg);
  const DefectReport rep = restricted_defect(s.unitary, opt);
  std::ostringstream out;
  json j;
  j["structure"] = s.name;
  j["kernel_dim"] = rep.nullity;
  j["gauge_dim"] = rep.gauge_dim;
  j["free_parameters"] = rep.free_parameters;
  if (rep.free_parameters == 0) {
    j["families"] = json::array();
    j["note"] = "no kernel directions beyond gauge";
    if (cfg.format == "json") {
      emit(cfg, j.dump(2));
    } else {
      out << s.name << ": kernel dimension " << rep.nullity << ", gauge " << rep.gauge_dim
          << "; no kernel directions beyond gauge\n";
      emit(cfg, out.str());
    }
    return kExitOk;
  }
  if (rep.nullity > 6) {
    j["families"] = json::array();
    j["note"] = "lattice search skipped for kernel dimension above 6";
    if (cfg.format == "json") {
      emit(cfg, j.dump(2));
    } else {
      out << s.name << ": kernel dimension " << rep.nullity << ", gauge " << rep.gauge_dim
          << "; lattice search skipped for kernel dimension above 6\n";
      emit(cfg, out.str());
    }
    return kExitOk;
  }
  const FamilySearch fs = find_integer_families(s.unitary, range);
  if (cfg.format == "csv") {
    std::string text;
    for (const auto& f : fs.families) text += family_csv(f);
    emit(cfg, text);
    return kExitOk;
  }
  json pivots = json::array();
  for (const auto& p : fs.pivots) pivots.push_back(pair_name(p));
  j["pivots"] = pivots;
  j["realness_constraint"] = fs.realness_vacuous ? "vacuous (real kernel)" : "applied";
  j["candidates_tested"] = fs.candidates_tested;
  json fams = json::array();
  for (const auto& f : fs.families) {
    std::vector<int> c;
    for (long i = 0; i < f.pivot_coefficients.size(); ++i) {
      c.push_back(static_cast<int>(std::lround(f.pivot_coefficients(i))));
    }
    fams.push_back({{"label", f.label}, {"pivot_coefficients", c}, {"max_residual", f.max_residual},
                    {"points", f.t_grid.size()}});
  }
  j["families"] = fams;
  if (cfg.format == "json") {
    emit(cfg, j.dump(2));
    return kExitOk;
  }
  out << s.name << ": kernel dimension " << fs.kernel_dim << ", gauge " << rep.gauge_dim
      << ", pivots";
  for (const auto& p : fs.pivots) out << ' ' << pair_name(p);
  out << "\n  realness constraint: " << (fs.realness_vacuous ? "vacuous (real kernel)" : "applied")
      << "\n  integer directions tested: " << fs.candidates_tested
      << "\n  verified families through U: " << fs.families.size() << "\n";
  for (const auto& f : fs.families) {
    out << "  " << f.label << "  max residual " << fmt6(f.max_residual) << " over "
        << f.t_grid.size() << " points\n";
  }
  if (fs.families.empty()) out << "  no verified family found\n";
  emit(cfg, out.str());
  return kExitOk;
}

SymmetryMatrix parse_symmetry(const std::string& spec, const VectorSet& v) {
  if (spec == "etf" || (spec == "auto" && v.size() > v.d)) return symmetry_etf(v.d, v.size());
  if (spec.rfind("mub:", 0) == 0) return symmetry_mub(v.d, std::stoi(spec.substr(4)));
  throw UsageError("symmetry must be auto, etf or mub:M");
}

int cmd_verify(const std::string& path, const std::string& symmetry, double threshold,
               const RunConfig& cfg) {
  double acc = 0.0;
  const VectorSet v = load_vectors(path, &acc);
  const SymmetryMatrix s = parse_symmetry(symmetry, v);
  const double povm = verify_povm(v);
  const double sym = verify_symmetry(v, s);
  const double limit = std::max(threshold, 10.0 * acc);
  const bool ok = povm <= limit && sym <= limit;
  json j;
  j["file"] = path;
  j["d"] = v.d;
  j["N"] = v.size();
  j["declared_accuracy"] = acc;
  j["povm_deviation"] = povm;
  j["symmetry_deviation"] = sym;
  j["threshold"] = limit;
  j["valid"] = ok;
  std::ostringstream out;
  out << path << ": d=" << v.d << " N=" << v.size() << " povm deviation " << fmt6(povm)
      << ", symmetry deviation " << fmt6(sym) << " -> " << (ok ? "pass" : "FAIL") << "\n";
  if (ok && v.size() > 2 * v.d) {
    const HermitianUnitary u = unitary_from_gram(gram_from_vectors(v));
    DefectOptions opt = defect_options(cfg);
    const SigmaOne s1 = measure_sigma1(u, opt);
    const double f = f_bound(v.d, v.size());
    const double s_max = s1.sigma1 / (2.0 * f);
    const bool certified = acc < s_max;
    j["sigma1"] = s1.sigma1;
    j["f"] = f;
    j["s_max"] = s_max;
    j["defect_certified"] = certified;
    out << "  sigma1=" << fmt6(s1.sigma1) << " f=" << fmt6(f) << " s_max=" << fmt6(s_max)
        << " declared accuracy " << fmt6(acc) << " -> "
        << (certified ? "inside the confidence region" : "outside the confidence region") << "\n";
  }
  emit(cfg, cfg.format == "json" ? j.dump(2) : out.str());
  return ok ? kExitOk : kExitInvalid;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"isoframe: restricted defect and isolation analysis of POVM vector sets"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig cfg;
  app.add_option("--tol", cfg.tol, "relative rank threshold")->check(CLI::PositiveNumber);
  app.add_option("--seed", cfg.seed, "random seed");
  app.add_option("--samples", cfg.samples, "perturbations per grid point")->check(CLI::Range(1, 1 << 20));
  app.add_option("--format", cfg.format, "output format")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--out", cfg.out, "write output to this file");
  app.add_flag("--long-running", cfg.long_running, "allow systems beyond the dense limit");

  std::vector<std::string> words;
  int gauge_row = 0;
  auto* defect = app.add_subcommand("defect", "restricted defect of a structure or vector file");
  defect->add_option("structure", words, "structure words or a vector file")->required();
  defect->add_option("--gauge-row", gauge_row, "row whose support pairs are pinned (-1: none)");

  int which = 0;
  auto* tables = app.add_subcommand("tables", "reproduce a published table");
  tables->add_option("which", which, "1, 2 or 3")->required();

  std::string grid = "-10:-1:19";
  std::string variant = "appendix";
  auto* robust = app.add_subcommand("robustness", "singular-value perturbation sweep (CSV)");
  robust->add_option("structure", words)->required();
  robust->add_option("--grid", grid, "log10 grid LO:HI:POINTS");
  robust->add_option("--variant", variant, "bound variant: appendix or main");

  int range = 3;
  auto* family = app.add_subcommand("family", "verified one-parameter families through U");
  family->add_option("structure", words)->required();
  family->add_option("--range", range, "integer coefficient range in pivot coordinates")
      ->check(CLI::Range(1, 6));

  std::string path;
  std::string symmetry = "auto";
  double threshold = 1e-10;
  auto* verify = app.add_subcommand("verify", "check a vector file against its symmetry");
  verify->add_option("file", path)->required();
  verify->add_option("--symmetry", symmetry, "auto, etf or mub:M");
  verify->add_option("--threshold", threshold, "largest accepted deviation");

  auto* list = app.add_subcommand("list", "list built-in structures");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*defect) return cmd_defect(words, gauge_row, cfg);
    if (*tables) return cmd_tables(which, cfg);
    if (*robust) return cmd_robustness(words, grid, variant, cfg);
    if (*family) return cmd_family(words, range, cfg);
    if (*verify) return cmd_verify(path, symmetry, threshold, cfg);
    if (*list) {
      std::string text;
      for (const auto& line : structure_registry()) text += line + "\n";
      text += std::string("simd: ") + kernels::isa_name(kernels::active_isa()) + "\n";
      emit(cfg, text);
      return kExitOk;
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    std::cerr << "parse error (line " << e.line() << "): " << e.what() << "\n";
    return kExitInvalid;
  } catch (const ValidationError& e) {
    std::cerr << "validation failed: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitUsage;
}
