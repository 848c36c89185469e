// Copyright 2026 The isoframe Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>

#include "isoframe/types.hpp"

namespace isoframe {

// JSON document: {"d": D, "N": N, "accuracy": A, "entries": [[re, im], ...]}
// with entries row-major over the N vectors (vector j occupies entries
// j*d .. j*d+d-1). Numbers may be JSON numbers or decimal strings of any length.
VectorSet parse_vectors(const std::string& text, double* declared_accuracy = nullptr);
VectorSet load_vectors(const std::string& path, double* declared_accuracy = nullptr);

std::string format_vectors(const VectorSet& v, double declared_accuracy = 0.0);
void save_vectors(const VectorSet& v, const std::string& path, double declared_accuracy = 0.0);

}  // namespace isoframe
