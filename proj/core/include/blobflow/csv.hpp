// Copyright 2026 The blobflow Authors
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

#include <filesystem>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "blobflow/energy_spec.hpp"
#include "blobflow/integrate.hpp"
#include "blobflow/metrics.hpp"

namespace blobflow {

// 17 significant digits, enough to parse back to the same double.
std::string format_real(double v);

void write_snapshots_csv(std::ostream& os, std::span<const Snapshot> snapshots,
                         double p, BallConvention balls);
void write_metrics_csv(std::ostream& os, const MetricSeries& series);
void write_errors_csv(std::ostream& os, std::span<const double> keys,
                      std::span<const double> errors);

// Writes to a sibling temporary and renames it into place.
void write_file_atomic(const std::filesystem::path& path, const std::string& contents);

}  // namespace blobflow
