#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "json.hpp"

namespace gutmyc::cli {

enum class OutputFormat { json, csv, table };

// One flat output row. JSON output may additionally carry nested detail.
struct Row {
  std::vector<std::pair<std::string, nlohmann::ordered_json>> fields;
  nlohmann::ordered_json detail = nlohmann::ordered_json::object();

  Row& add(std::string key, nlohmann::ordered_json value) {
    fields.emplace_back(std::move(key), std::move(value));
    return *this;
  }
};

// JSON lines, RFC 4180 CSV with a header row, or a whitespace-aligned table.
// Rows are emitted in the order they are written.
class RowWriter {
 public:
  RowWriter(std::ostream& out, OutputFormat format, std::vector<std::string> columns);

  void write(const Row& row);
  void finish();

 private:
  std::string cell(const nlohmann::ordered_json& v) const;

  std::ostream& out_;
  OutputFormat format_;
  std::vector<std::string> columns_;
  bool header_written_ = false;
  std::vector<std::vector<std::string>> table_;
};

std::string csv_escape(std::string_view s);

}  // namespace gutmyc::cli
