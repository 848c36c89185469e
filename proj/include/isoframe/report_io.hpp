// Copyright 2026 The isoframe Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>

#include "isoframe/defect.hpp"

namespace isoframe {

// Structured document with every report field and the 10 smallest singular values.
std::string defect_report_json(const DefectReport& rep, const std::string& name = "");
// One line, human readable.
std::string defect_report_summary(const DefectReport& rep, const std::string& name = "");

// %.17g
std::string format_double(double x);

}  // namespace isoframe
