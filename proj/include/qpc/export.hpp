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

// Tabular output for the command-line tool. CSV carries the column header
// and rows only; JSON wraps the same rows with a metadata object.

#ifndef QPC_EXPORT_HPP_
#define QPC_EXPORT_HPP_

#include <initializer_list>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace qpc {

inline constexpr std::string_view kToolVersion = "0.1.0";

enum class ExportFormat { Csv, Json };

class ExportTable {
 public:
  // Metadata records the command name, its parameters and the tool version.
  ExportTable(std::string command, std::vector<std::string> columns);

  // Throws Error(OutOfRange) on a width mismatch or a non-finite value.
  void add_row(std::initializer_list<double> values);
  void add_row(const std::vector<double>& values);

  nlohmann::ordered_json& parameters() { return metadata_["parameters"]; }
  const std::vector<std::string>& columns() const { return columns_; }
  const std::vector<std::vector<double>>& rows() const { return rows_; }

  void write(std::ostream& os, ExportFormat format) const;
  void write_csv(std::ostream& os) const;
  void write_json(std::ostream& os) const;

 private:
  std::vector<std::string> columns_;
  std::vector<std::vector<double>> rows_;
  nlohmann::ordered_json metadata_;
};

// 17 significant digits, "." decimal separator, independent of locale.
std::string format_number(double value);

}  // namespace qpc

#endif  // QPC_EXPORT_HPP_
