// Copyright 2026 The isoframe Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace isoframe {

using cplx = std::complex<double>;
using MatC = Eigen::MatrixXcd;
using MatR = Eigen::MatrixXd;
using VecC = Eigen::VectorXcd;
using VecR = Eigen::VectorXd;
using Pair = std::pair<int, int>;

struct Tolerances {
  double norm = 1e-12;
  double unit = 1e-10;
  double povm = 1e-10;
  double zero = 1e-10;
  double rank = 1e-8;
};

// Input structure fails a validation predicate (POVM property, unitarity, ...).
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, int line)
      : std::runtime_error(what + " (line " + std::to_string(line) + ")"), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// N unit vectors in dimension d, stored as the columns of a d x N matrix.
struct VectorSet {
  int d = 0;
  MatC vectors;
  std::vector<std::string> labels;

  int size() const { return static_cast<int>(vectors.cols()); }
  VecC operator[](int j) const { return vectors.col(j); }
};

struct GramMatrix {
  MatC entries;
  int d = 0;

  int size() const { return static_cast<int>(entries.rows()); }
};

struct SymmetryMatrix {
  enum class Kind { Etf, Mub, Custom };
  MatR entries;
  Kind kind = Kind::Custom;
};

// U = I - (2d/N) G together with its support pattern (i < j, |U_ij| > eps_zero).
struct HermitianUnitary {
  MatC entries;
  int d = 0;
  int n = 0;
  std::vector<Pair> support;
};

}  // namespace isoframe
