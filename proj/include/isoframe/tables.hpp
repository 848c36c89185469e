// Copyright 2026 The isoframe Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

namespace isoframe {

// One cell of a published table next to the computed value.
struct TableCell {
  std::string table;
  std::string label;
  std::string published;  // "?" and "<>" mark cells without a published value
  int computed = 0;
  bool evaluated = false;
  bool graded = true;  // false: reported next to the published value, not compared
  bool pass = false;
  std::string note;
};

struct TableOptions {
  double tol = 1e-8;
  bool long_running = false;
};

// Table 1: restricted defect of m MUB in dimension d.
// Table 2: restricted defect of the Fourier ETF(k(k-1)/2, k^2).
// Table 3: z, tau, r, Delta and free parameters of the three KS sets.
std::vector<TableCell> reproduce_table(int which, const TableOptions& opt = {});

// True when no graded cell mismatches.
bool table_matches(const std::vector<TableCell>& cells);

}  // namespace isoframe
