// Copyright 2026 The qoptics Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Plot-ready tables with a metadata block, written as CSV or JSON.

#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "qoptics/classical_spectra.hpp"
#include "qoptics/detection.hpp"

namespace qoptics {

using Cell = std::variant<Real, long long, std::string>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  /// Throws DomainError if the row width differs from the header.
  void add_row(std::vector<Cell> row);
};

/// Ordered key/value pairs written ahead of the table.
using Metadata = std::vector<std::pair<std::string, std::string>>;

enum class Format { kCsv, kJson };

Format parse_format(std::string_view text);
std::string_view extension(Format format);

/// 17 significant digits; nan and inf spelled out.
std::string format_real(Real value);

/// "# key: value" lines, a header row, then one line per row.
void write_csv(std::ostream& os, const Table& table, const Metadata& meta);
/// {"config": {key: value}, "columns": [...], "rows": [[...], ...]}.
void write_json(std::ostream& os, const Table& table, const Metadata& meta);
/// Writes stem + extension and returns the path.
std::filesystem::path write_table(const std::filesystem::path& stem, const Table& table,
                                  const Metadata& meta, Format format);

/// t,re,im
Table to_table(const ComplexTimeSeries& series);
/// freq_hz,value
Table to_table(const SpectralDensity& spectrum);
/// x,p,<value_name> in row-major grid order.
Table to_table(const WignerGrid& grid, const std::string& value_name);
/// x,density
Table to_table(const Marginal& marginal);
/// theta,value
Table to_table(const TomographyDataset& data);
/// x,p
Table to_table(const HeterodyneSamples& samples);
/// count
Table to_table(const Eigen::VectorXi& counts);

/// Reads a theta,value CSV (comment lines starting with '#' are skipped)
/// and groups samples by exact angle.
TomographyDataset read_tomography_csv(std::istream& is);

}  // namespace qoptics
