// Copyright 2026 The isoframe Authors
// SPDX-License-Identifier: Apache-2.0

// One line per acceptance criterion; exit status 1 when any of them fails.
// Pass --long-running to include the large SIC, MUB and ETF cases.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "isoframe/constructions.hpp"
#include "isoframe/core.hpp"
#include "isoframe/defect.hpp"
#include "isoframe/family.hpp"
#include "isoframe/robustness.hpp"
#include "isoframe/tables.hpp"

namespace isoframe {
namespace {

bool g_long_running = false;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " [fail: " << what << "]";
    }
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

DefectReport defect_of(const std::vector<std::string>& spec, bool long_running = false) {
  DefectOptions opt;
  opt.long_running = long_running;
  return restricted_defect(make_structure(spec).unitary, opt);
}

void criterion1(Outcome& o) {
  const auto t0 = std::chrono::steady_clock::now();
  const DefectReport r = defect_of({"mub", "2", "2"});
  const double dt = seconds_since(t0);
  o.detail << "z=" << r.z << " tau=" << r.tau_paper << " r=" << r.r << " Delta=" << r.delta_paper
           << " (" << dt << " s)";
  o.require(r.z == 2 && r.tau_paper == 1 && r.r == 1 && r.delta_paper == 0, "counts");
  o.require(dt < 1.0, "runtime");
}

void criterion2(Outcome& o) {
  struct Case {
    std::string d;
    int r;
    bool long_running;
  };
  std::vector<Case> cases{{"4", 141, false}, {"8", 2233, false}, {"9", 3556, false}};
  if (g_long_running) cases.push_back({"16", 34545, true});
  for (const Case& c : cases) {
    const auto t0 = std::chrono::steady_clock::now();
    const DefectReport r = defect_of({"mub", c.d}, c.long_running);
    o.detail << " d=" << c.d << ": r=" << r.r << " Delta=" << r.delta_paper << " ("
             << seconds_since(t0) << " s)";
    o.require(r.r == c.r && r.delta_paper == 0, "mub " + c.d);
  }
}

void criterion3(Outcome& o) {
  const HermitianUnitary u = sic3_unitary();
  const DefectReport r = restricted_defect(u);
  o.detail << "tau=" << r.tau_paper << " r=" << r.r << " Delta=" << r.delta_paper;
  o.require(r.tau_paper == 28 && r.r == 24 && r.delta_paper == 4, "counts");
  const FamilySearch fs = sic3_families(256, 1e-10);
  double residual = 0.0;
  double modulus_dev = 0.0;
  for (const FamilyCandidate& f : fs.families) {
    residual = std::max(residual, f.max_residual);
    for (double t : period_grid(16)) {
      const FamilyPoint p = evaluate_family(u, f.offset, f.direction, t);
      GramMatrix g;
      g.d = 3;
      g.entries = gram_of(p.v, 3);
      const GramMatrix h = gram_from_vectors(vectors_from_gram(g));
      for (int i = 0; i < 9; ++i) {
        for (int j = i + 1; j < 9; ++j) {
          modulus_dev = std::max(modulus_dev, std::abs(std::norm(h.entries(i, j)) - 0.25));
        }
      }
    }
  }
  o.detail << "; families=" << fs.families.size() << " (expected 6), max residual=" << residual
           << ", moduli^2 deviation=" << modulus_dev;
  o.require(fs.families.size() == 6, "family count");
  o.require(residual <= 1e-10, "family residual");
  o.require(modulus_dev <= 1e-12, "equiangularity");
}

void criterion4(Outcome& o) {
  for (int d : {4, 5}) {
    const NamedStructure s = make_structure({"sic", std::to_string(d)});
    const DefectReport r = restricted_defect(s.unitary);
    const SigmaOne s1 = measure_sigma1(s.unitary);
    const ConfidenceRegion c = confidence_region(s1.sigma1, d, d * d, s.declared_accuracy);
    o.detail << " d=" << d << ": Delta=" << r.delta_paper << " nullity=" << r.nullity
             << " gauge=" << r.gauge_dim << " s_max=" << c.s_max << " > " << s.declared_accuracy;
    o.require(r.delta_paper == 0 && r.nullity == 0 && r.gauge_dim == 0, "sic " + std::to_string(d));
    o.require(c.s_max > s.declared_accuracy, "confidence " + std::to_string(d));
  }
  std::vector<std::vector<std::string>> rest{{"sic", "6"}, {"sic", "7"}, {"sic", "8"}, {"hoggar"}};
  if (g_long_running) {
    for (int d : {9, 10, 11, 12}) rest.push_back({"sic", std::to_string(d)});
  }
  for (const auto& spec : rest) {
    const DefectReport r = defect_of(spec, true);
    const std::string name = spec.size() > 1 ? "d=" + spec[1] : spec[0];
    o.detail << " " << name << ": Delta=" << r.delta_paper;
    o.require(r.delta_paper == 0 && r.free_parameters == 0, name);
  }
}

void table_criterion(Outcome& o, int which) {
  TableOptions opt;
  opt.long_running = g_long_running;
  const std::vector<TableCell> cells = reproduce_table(which, opt);
  int graded = 0;
  std::vector<std::string> mismatches;
  for (const TableCell& c : cells) {
    if (!c.evaluated || !c.graded || c.published == "?" || c.published == "<>") continue;
    ++graded;
    if (!c.pass) mismatches.push_back(c.label + " computed " + std::to_string(c.computed) + " vs " + c.published);
  }
  o.detail << graded << " graded cells";
  for (const std::string& m : mismatches) o.require(false, m);
  o.require(table_matches(cells), "table");
}

void criterion6(Outcome& o) {
  table_criterion(o, 2);
  for (int k : {2, 3, 5, 7}) {
    const int delta = defect_of({"etf-fourier", std::to_string(k)}).delta_paper;
    o.require(delta == etf_prime_delta(k), "closed form k=" + std::to_string(k));
  }
  o.detail << ", closed form checked for k = 2, 3, 5, 7";
}

// Largest shift of the fixed-system singular values over Monte-Carlo
// perturbations, relative to f(d, N) s.
void criterion8a(Outcome& o) {
  double worst_ratio = 0.0;
  for (const auto& spec : std::vector<std::vector<std::string>>{{"sic", "3"}, {"mub", "4"}}) {
    const NamedStructure s = make_structure(spec);
    const VectorSet& v = *s.vectors;
    const HermitianUnitary& ref = s.unitary;
    std::vector<double> sv0 = singular_values(build_linear_system(ref, GaugeChoice{}).matrix);
    const double f = f_bound(v.d, v.size());
    std::uint64_t stream = 0;
    for (double sv : {1e-8, 1e-6, 1e-4}) {
      double worst = 0.0;
      for (int k = 0; k < 100; ++k) {
        std::vector<double> sv1 = perturbed_singular_values(
            perturb_vectors(v, sv, 7, stream, static_cast<std::uint64_t>(k)), ref, GaugeChoice{});
        sv1.resize(sv0.size(), 0.0);
        for (size_t i = 0; i < sv0.size(); ++i) worst = std::max(worst, std::abs(sv1[i] - sv0[i]));
      }
      ++stream;
      worst_ratio = std::max(worst_ratio, worst / (f * sv));
    }
  }
  o.detail << "worst shift / (f s) = " << worst_ratio;
  o.require(worst_ratio <= 1.0, "bound exceeded");
}

double spearman(const std::vector<double>& x, const std::vector<double>& y) {
  auto ranks = [](const std::vector<double>& v) {
    std::vector<size_t> idx(v.size());
    for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](size_t a, size_t b) { return v[a] < v[b]; });
    std::vector<double> r(v.size());
    for (size_t i = 0; i < idx.size(); ++i) r[idx[i]] = static_cast<double>(i);
    return r;
  };
  const std::vector<double> rx = ranks(x);
  const std::vector<double> ry = ranks(y);
  const double n = static_cast<double>(x.size());
  double d2 = 0.0;
  for (size_t i = 0; i < x.size(); ++i) d2 += (rx[i] - ry[i]) * (rx[i] - ry[i]);
  return 1.0 - 6.0 * d2 / (n * (n * n - 1.0));
}

// The crossover is where the upper bound on sigma0 meets the lower bound on
// sigma1, s_max = sigma1 / (2 f).
void criterion8b(Outcome& o) {
  for (const auto& spec : std::vector<std::vector<std::string>>{{"sic", "4"}, {"mub", "4"}}) {
    SweepOptions opt;
    opt.s_grid = log_grid(-10, -1, 19);
    opt.samples = 8;
    opt.threads = 4;
    const NamedStructure s = make_structure(spec);
    const RobustnessReport rep = singular_sweep(*s.vectors, opt, s.name);
    std::vector<double> xs;
    std::vector<double> s0;
    double lo = 1e300;
    double hi = 0.0;
    for (const SweepPoint& p : rep.points) {
      xs.push_back(p.s);
      s0.push_back(p.sigma0_mean);
      if (p.s <= rep.s_max_bound) {
        lo = std::min(lo, p.sigma1_mean);
        hi = std::max(hi, p.sigma1_mean);
      }
    }
    const double rho = spearman(xs, s0);
    const double variation = hi > 0.0 ? (hi - lo) / lo : 1.0;
    o.detail << " " << s.name << ": spearman=" << rho << " crossover=" << rep.s_max_bound
             << " sigma1 variation=" << variation;
    o.require(rho > 0.99, s.name + " sigma0 trend");
    o.require(variation < 0.1, s.name + " sigma1 stability");
  }
}

void criterion8c(Outcome& o) {
  const auto t0 = std::chrono::steady_clock::now();
  DefectOptions opt;
  opt.long_running = true;
  const NamedStructure s = make_structure({"sic", "16"});
  const SigmaOne s1 = measure_sigma1(s.unitary, opt);
  const ConfidenceRegion c = confidence_region(s1.sigma1, 16, 256, 0.0);
  o.detail << "sigma1=" << s1.sigma1 << " (" << s1.method << ", " << seconds_since(t0)
           << " s) s_max=" << c.s_max;
  o.require(c.s_max >= 2e-3 && c.s_max <= 8e-3, "edge outside [2e-3, 8e-3]");
}

void criterion8(Outcome& o) {
  Outcome a, b, c;
  criterion8a(a);
  criterion8b(b);
  criterion8c(c);
  o.detail << "(a) " << (a.pass ? "pass " : "FAIL ") << a.detail.str() << "; (b) "
           << (b.pass ? "pass" : "FAIL") << b.detail.str() << "; (c) " << (c.pass ? "pass " : "FAIL ")
           << c.detail.str();
  o.pass = a.pass && b.pass && c.pass;
}

void criterion9(Outcome& o) {
  const std::vector<std::vector<std::string>> specs{
      {"mub", "4"},         {"mub", "3", "2"}, {"sic", "3"},          {"sic", "4"},
      {"etf-fourier", "3"}, {"ks", "yu-oh-13"}, {"ks", "cabello-18"}};
  std::mt19937_64 rng(2024);
  double round_trip = 0.0;
  int conjugations = 0;
  for (const auto& spec : specs) {
    const NamedStructure s = make_structure(spec);
    const GramMatrix g = s.vectors ? gram_from_vectors(*s.vectors) : gram_from_unitary(s.unitary);
    const GramMatrix back = gram_from_vectors(vectors_from_gram(gram_from_unitary(unitary_from_gram(g))));
    round_trip = std::max(round_trip, (back.entries - g.entries).cwiseAbs().maxCoeff());

    const DefectReport r = restricted_defect(s.unitary);
    o.require(r.gauge_residual <= r.tol * r.sigma_max, s.name + " gauge residual");

    std::vector<int> perm(static_cast<size_t>(s.unitary.n));
    for (size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * std::acos(-1.0));
    for (int k = 0; k < 20; ++k) {
      std::shuffle(perm.begin(), perm.end(), rng);
      std::vector<double> ph(perm.size());
      for (double& x : ph) x = angle(rng);
      const bool ok = defect_invariance_check(s.unitary, perm, ph);
      o.require(ok, s.name + " conjugation");
      conjugations += ok ? 1 : 0;
    }

    int rank0 = -1;
    for (int row : {0, 1, 2}) {
      DefectOptions opt;
      opt.gauge = GaugeChoice{row};
      const DefectReport rr = restricted_defect(s.unitary, opt);
      if (rank0 < 0) rank0 = rr.r;
      o.require(rr.r == rank0, s.name + " rank across gauge rows");
    }
  }
  o.detail << "round trip " << round_trip << ", " << conjugations << " conjugations invariant";
  o.require(round_trip <= 1e-10, "round trip");
}

}  // namespace
}  // namespace isoframe

int main(int argc, char** argv) {
  using namespace isoframe;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--long-running") == 0) g_long_running = true;
  }
  const std::vector<std::function<void(Outcome&)>> criteria{
      criterion1, criterion2, criterion3, criterion4, [](Outcome& o) { table_criterion(o, 1); },
      criterion6, [](Outcome& o) { table_criterion(o, 3); }, criterion8, criterion9};
  int failed = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      criteria[i](o);
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << " [error: " << e.what() << "]";
    }
    std::printf("criterion %zu: %s %s\n", i + 1, o.pass ? "PASS" : "FAIL", o.detail.str().c_str());
    std::fflush(stdout);
    failed += o.pass ? 0 : 1;
  }
  return failed == 0 ? 0 : 1;
}
