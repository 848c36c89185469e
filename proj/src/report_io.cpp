// Copyright 2026 The isoframe Authors
// SPDX-License-Identifier: Apache-2.0

#include "isoframe/report_io.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace isoframe {

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string defect_report_json(const DefectReport& rep, const std::string& name) {
  nlohmann::ordered_json j;
  if (!name.empty()) j["structure"] = name;
  j["N"] = rep.n;
  j["d"] = rep.d;
  j["z"] = rep.z;
  j["tau_paper"] = rep.tau_paper;
  j["tau_effective"] = rep.tau_effective;
  j["support"] = rep.support_size;
  j["gauge_row"] = rep.gauge_row;
  j["row_degree"] = rep.row_degree;
  j["rows"] = rep.rows;
  j["r"] = rep.r;
  j["delta_paper"] = rep.delta_paper;
  j["delta_consistent"] = rep.delta_consistent;
  j["nullity"] = rep.nullity;
  j["gauge_dim"] = rep.gauge_dim;
  j["free_parameters"] = rep.free_parameters;
  j["gauge_residual"] = rep.gauge_residual;
  j["tol"] = rep.tol;
  j["sigma_max"] = rep.sigma_max;
  j["gap_index"] = rep.gap_index;
  j["gap_log10"] = rep.gap_log10;
  j["method"] = rep.method;
  j["complete"] = rep.complete;
  const size_t k = std::min<size_t>(10, rep.svals.size());
  std::vector<double> smallest(rep.svals.end() - static_cast<std::ptrdiff_t>(k), rep.svals.end());
  std::reverse(smallest.begin(), smallest.end());
  j["smallest_singular_values"] = smallest;
  return j.dump(2, ' ', false, nlohmann::json::error_handler_t::strict);
}

std::string defect_report_summary(const DefectReport& rep, const std::string& name) {
  char buf[512];
  std::snprintf(buf, sizeof buf,
                "%s%sN=%d d=%d z=%d tau=%d r=%d Delta=%d nullity=%d gauge=%d free=%d%s",
                name.c_str(), name.empty() ? "" : ": ", rep.n, rep.d, rep.z, rep.tau_paper, rep.r,
                rep.delta_paper, rep.nullity, rep.gauge_dim, rep.free_parameters,
                rep.delta_consistent ? "" : " [tau < r: bookkeeping mismatch]");
  return buf;
}

}  // namespace isoframe
