// Copyright 2026 The isoframe Authors
// SPDX-License-Identifier: Apache-2.0

#include "isoframe/vector_io.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace isoframe {

namespace {

using nlohmann::json;

int line_of(const std::string& text, std::size_t byte) {
  const auto end = text.begin() + static_cast<std::ptrdiff_t>(std::min(byte, text.size()));
  return 1 + static_cast<int>(std::count(text.begin(), end, '\n'));
}

double number(const json& x, int line) {
  if (x.is_number()) return x.get<double>();
  if (x.is_string()) {
    const std::string s = x.get<std::string>();
    char* end = nullptr;
    const double v = std::strtod(s.c_str(), &end);
    if (end != s.c_str() && *end == '\0') return v;
  }
  throw ParseError("entry is not a number", line);
}

std::string fmt17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace

VectorSet parse_vectors(const std::string& text, double* declared_accuracy) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed vector file: ") + e.what(), line_of(text, e.byte));
  }
  const int last = line_of(text, text.size());
  if (!doc.is_object() || !doc.contains("d") || !doc.contains("N") || !doc.contains("entries")) {
    throw ParseError("vector file needs fields d, N, entries", 1);
  }
  const int d = doc["d"].get<int>();
  const int n = doc["N"].get<int>();
  const json& entries = doc["entries"];
  if (d <= 0 || n <= 0) throw ParseError("d and N must be positive", 1);
  if (!entries.is_array() || entries.size() != static_cast<std::size_t>(d) * n) {
    throw ParseError("entries count does not match d*N", last);
  }
  const double accuracy = doc.value("accuracy", 0.0);
  VectorSet v;
  v.d = d;
  v.vectors.resize(d, n);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < d; ++i) {
      const json& e = entries[static_cast<std::size_t>(j) * d + i];
      if (!e.is_array() || e.size() != 2) throw ParseError("entry is not a [re, im] pair", last);
      v.vectors(i, j) = cplx(number(e[0], last), number(e[1], last));
    }
    const double dev = std::abs(v.vectors.col(j).norm() - 1.0);
    if (dev > std::max(10.0 * accuracy, 1e-13)) {
      throw ValidationError("vector " + std::to_string(j) + " not normalized beyond declared accuracy");
    }
  }
  if (doc.contains("labels")) v.labels = doc["labels"].get<std::vector<std::string>>();
  if (declared_accuracy != nullptr) *declared_accuracy = accuracy;
  return v;
}

VectorSet load_vectors(const std::string& path, double* declared_accuracy) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_vectors(ss.str(), declared_accuracy);
}

std::string format_vectors(const VectorSet& v, double declared_accuracy) {
  std::ostringstream out;
  out << "{\n  \"d\": " << v.d << ",\n  \"N\": " << v.size() << ",\n  \"accuracy\": "
      << fmt17(declared_accuracy) << ",\n  \"entries\": [\n";
  for (int j = 0; j < v.size(); ++j) {
    for (int i = 0; i < v.d; ++i) {
      const cplx z = v.vectors(i, j);
      out << "    [" << fmt17(z.real()) << ", " << fmt17(z.imag()) << "]";
      out << ((j + 1 == v.size() && i + 1 == v.d) ? "\n" : ",\n");
    }
  }
  out << "  ]";
  if (!v.labels.empty()) out << ",\n  \"labels\": " << json(v.labels).dump();
  out << "\n}\n";
  return out.str();
}

void save_vectors(const VectorSet& v, const std::string& path, double declared_accuracy) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << format_vectors(v, declared_accuracy);
}

}  // namespace isoframe
