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

#include "blobflow/csv.hpp"

#include <array>
#include <charconv>
#include <fstream>

#include "blobflow/energy.hpp"
#include "blobflow/error.hpp"

namespace blobflow {

std::string format_real(double v) {
  std::array<char, 64> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v,
                                 std::chars_format::general, 17);
  return std::string(buf.data(), res.ptr);
}

void write_snapshots_csv(std::ostream& os, std::span<const Snapshot> snapshots,
                         double p, BallConvention balls) {
  const int dim = snapshots.empty() ? 1 : snapshots.front().system.dim();
  os << (dim == 1 ? "t,i,x,w,ball\n" : "t,i,x,y,w,ball\n");
  for (const auto& snap : snapshots) {
    const auto& sys = snap.system;
    const auto vols = ball_volumes(sys, p, balls);
    const std::string t = format_real(snap.t);
    for (std::size_t i = 0; i < sys.size(); ++i) {
      os << t << ',' << i;
      for (double c : sys.point(i)) os << ',' << format_real(c);
      os << ',' << format_real(sys.weight(i)) << ',' << format_real(vols[i]) << '\n';
    }
  }
}

void write_metrics_csv(std::ostream& os, const MetricSeries& series) {
  os << "t,energy_total,energy_internal,energy_confine,energy_interact,m2,entropy\n";
  for (std::size_t k = 0; k < series.size(); ++k) {
    const auto& e = series.energy[k];
    os << format_real(series.times[k]) << ',' << format_real(e.total) << ','
       << format_real(e.internal) << ',' << format_real(e.confinement) << ','
       << format_real(e.interaction) << ',' << format_real(series.second_moment[k]) << ','
       << format_real(series.entropy[k]) << '\n';
  }
}

void write_errors_csv(std::ostream& os, std::span<const double> keys,
                      std::span<const double> errors) {
  if (keys.size() != errors.size()) {
    throw Error(ErrorCode::InvalidArgument, "error table columns differ in length");
  }
  os << "N_or_T,error\n";
  for (std::size_t k = 0; k < keys.size(); ++k) {
    os << format_real(keys[k]) << ',' << format_real(errors[k]) << '\n';
  }
}

void write_file_atomic(const std::filesystem::path& path, const std::string& contents) {
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::IoError, "cannot write '" + tmp.string() + "'");
    out << contents;
    if (!out.flush()) throw Error(ErrorCode::IoError, "short write to '" + tmp.string() + "'");
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    throw Error(ErrorCode::IoError, "cannot rename into '" + path.string() + "': " + ec.message());
  }
}

}  // namespace blobflow
