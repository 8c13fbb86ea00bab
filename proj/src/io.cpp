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

#include "qoptics/io.hpp"

#include <cmath>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

#include <fmt/format.h>

#include "json.hpp"

namespace qoptics {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

std::string cell_text(const Cell& cell) {
  return std::visit(Overloaded{[](Real v) { return format_real(v); },
                               [](long long v) { return std::to_string(v); },
                               [](const std::string& v) { return v; }},
                    cell);
}

nlohmann::ordered_json cell_json(const Cell& cell) {
  using Json = nlohmann::ordered_json;
  return std::visit(Overloaded{[](Real v) { return std::isfinite(v) ? Json(v) : Json(format_real(v)); },
                               [](long long v) { return Json(v); },
                               [](const std::string& v) { return Json(v); }},
                    cell);
}

std::string csv_field(const std::string& text) {
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string out = "\"";
  for (char c : text) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

void Table::add_row(std::vector<Cell> row) {
  require(row.size() == columns.size(),
          fmt::format("row has {} cells but the table has {} columns", row.size(), columns.size()));
  rows.push_back(std::move(row));
}

Format parse_format(std::string_view text) {
  if (text == "csv") return Format::kCsv;
  if (text == "json") return Format::kJson;
  throw DomainError(fmt::format("unknown format '{}', expected csv or json", text));
}

std::string_view extension(Format format) { return format == Format::kCsv ? ".csv" : ".json"; }

std::string format_real(Real value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  return fmt::format("{:.17g}", value);
}

void write_csv(std::ostream& os, const Table& table, const Metadata& meta) {
  for (const auto& [key, value] : meta) os << "# " << key << ": " << value << '\n';
  for (std::size_t i = 0; i < table.columns.size(); ++i)
    os << (i ? "," : "") << csv_field(table.columns[i]);
  os << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << csv_field(cell_text(row[i]));
    os << '\n';
  }
}

void write_json(std::ostream& os, const Table& table, const Metadata& meta) {
  nlohmann::ordered_json doc;
  doc["config"] = nlohmann::ordered_json::object();
  for (const auto& [key, value] : meta) doc["config"][key] = value;
  doc["columns"] = table.columns;
  auto rows = nlohmann::ordered_json::array();
  for (const auto& row : table.rows) {
    auto r = nlohmann::ordered_json::array();
    for (const auto& cell : row) r.push_back(cell_json(cell));
    rows.push_back(std::move(r));
  }
  doc["rows"] = std::move(rows);
  os << doc.dump(1) << '\n';
}

std::filesystem::path write_table(const std::filesystem::path& stem, const Table& table,
                                  const Metadata& meta, Format format) {
  std::filesystem::path path = stem;
  path += std::string(extension(format));
  std::ofstream os(path, std::ios::binary);
  if (!os) throw DomainError(fmt::format("cannot open '{}' for writing", path.string()));
  if (format == Format::kCsv)
    write_csv(os, table, meta);
  else
    write_json(os, table, meta);
  if (!os) throw DomainError(fmt::format("failed writing '{}'", path.string()));
  return path;
}

Table to_table(const ComplexTimeSeries& series) {
  Table t{{"t", "re", "im"}, {}};
  t.rows.reserve(static_cast<std::size_t>(series.size()));
  for (Eigen::Index i = 0; i < series.size(); ++i)
    t.rows.push_back({series.time(i), series.samples[i].real(), series.samples[i].imag()});
  return t;
}

Table to_table(const SpectralDensity& spectrum) {
  Table t{{"freq_hz", "value"}, {}};
  t.rows.reserve(static_cast<std::size_t>(spectrum.freqs.size()));
  for (Eigen::Index i = 0; i < spectrum.freqs.size(); ++i)
    t.rows.push_back({spectrum.freqs[i], spectrum.values[i]});
  return t;
}

Table to_table(const WignerGrid& grid, const std::string& value_name) {
  Table t{{"x", "p", value_name}, {}};
  t.rows.reserve(static_cast<std::size_t>(grid.values.size()));
  for (Eigen::Index i = 0; i < grid.x_axis.size(); ++i)
    for (Eigen::Index j = 0; j < grid.p_axis.size(); ++j)
      t.rows.push_back({grid.x_axis[i], grid.p_axis[j], grid.values(i, j)});
  return t;
}

Table to_table(const Marginal& marginal) {
  Table t{{"x", "density"}, {}};
  for (Eigen::Index i = 0; i < marginal.x.size(); ++i) t.rows.push_back({marginal.x[i], marginal.density[i]});
  return t;
}

Table to_table(const TomographyDataset& data) {
  Table t{{"theta", "value"}, {}};
  for (const auto& q : data.angles)
    for (Eigen::Index i = 0; i < q.values.size(); ++i) t.rows.push_back({q.theta, q.values[i]});
  return t;
}

Table to_table(const HeterodyneSamples& samples) {
  Table t{{"x", "p"}, {}};
  for (Eigen::Index i = 0; i < samples.rows(); ++i) t.rows.push_back({samples(i, 0), samples(i, 1)});
  return t;
}

Table to_table(const Eigen::VectorXi& counts) {
  Table t{{"count"}, {}};
  for (Eigen::Index i = 0; i < counts.size(); ++i) t.rows.push_back({static_cast<long long>(counts[i])});
  return t;
}

TomographyDataset read_tomography_csv(std::istream& is) {
  std::map<Real, std::vector<Real>> groups;
  std::string line;
  bool header = false;
  int line_no = 0;
  while (std::getline(is, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    if (!header) {
      require(line == "theta,value", fmt::format("expected header 'theta,value', got '{}'", line));
      header = true;
      continue;
    }
    std::istringstream fields(line);
    std::string a, b;
    require(std::getline(fields, a, ',') && std::getline(fields, b),
            fmt::format("line {}: expected two fields", line_no));
    try {
      groups[std::stod(a)].push_back(std::stod(b));
    } catch (const std::exception&) {
      throw DomainError(fmt::format("line {}: cannot parse '{}'", line_no, line));
    }
  }
  require(header, "tomography CSV has no 'theta,value' header");
  TomographyDataset data;
  for (auto& [theta, values] : groups)
    data.angles.push_back({theta, Eigen::Map<VectorXr>(values.data(), static_cast<Eigen::Index>(values.size()))});
  return data;
}

}  // namespace qoptics
