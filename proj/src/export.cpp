// Copyright 2026 The qpc Authors
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

#include "qpc/export.hpp"

#include <charconv>
#include <cmath>
#include <utility>

#include "qpc/error.hpp"

namespace qpc {

std::string format_number(double value) {
  // to_chars is locale independent, unlike printf.
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

ExportTable::ExportTable(std::string command, std::vector<std::string> columns) : columns_(std::move(columns)) {
  metadata_["command"] = std::move(command);
  metadata_["parameters"] = nlohmann::ordered_json::object();
  metadata_["version"] = std::string(kToolVersion);
  metadata_["columns"] = columns_;
}

void ExportTable::add_row(std::initializer_list<double> values) { add_row(std::vector<double>(values)); }

void ExportTable::add_row(const std::vector<double>& values) {
  if (values.size() != columns_.size()) throw Error(ErrorCode::OutOfRange, "row width does not match the header");
  for (double v : values) {
    if (!std::isfinite(v)) throw Error(ErrorCode::OutOfRange, "non-finite value in export row");
  }
  rows_.push_back(values);
}

void ExportTable::write(std::ostream& os, ExportFormat format) const {
  if (format == ExportFormat::Csv) {
    write_csv(os);
  } else {
    write_json(os);
  }
}

void ExportTable::write_csv(std::ostream& os) const {
  for (std::size_t i = 0; i < columns_.size(); ++i) os << (i ? "," : "") << columns_[i];
  os << "\n";
  for (const auto& row : rows_) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << format_number(row[i]);
    os << "\n";
  }
}

void ExportTable::write_json(std::ostream& os) const {
  nlohmann::ordered_json doc;
  doc["metadata"] = metadata_;
  auto& records = doc["records"] = nlohmann::ordered_json::array();
  for (const auto& row : rows_) {
    nlohmann::ordered_json rec = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < row.size(); ++i) rec[columns_[i]] = row[i];
    records.push_back(std::move(rec));
  }
  os << doc.dump(2) << "\n";
}

}  // namespace qpc
