#include "output.hpp"

#include <algorithm>
#include <iomanip>

namespace gutmyc::cli {

std::string csv_escape(std::string_view s) {
  if (s.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

RowWriter::RowWriter(std::ostream& out, OutputFormat format, std::vector<std::string> columns)
    : out_(out), format_(format), columns_(std::move(columns)) {
  if (format_ == OutputFormat::table) table_.push_back(columns_);
}

std::string RowWriter::cell(const nlohmann::ordered_json& v) const {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

void RowWriter::write(const Row& row) {
  switch (format_) {
    case OutputFormat::json: {
      nlohmann::ordered_json obj = nlohmann::ordered_json::object();
      for (const auto& [k, v] : row.fields) obj[k] = v;
      for (const auto& [k, v] : row.detail.items()) obj[k] = v;
      out_ << obj.dump() << '\n';
      break;
    }
    case OutputFormat::csv: {
      if (!header_written_) {
        for (std::size_t i = 0; i < columns_.size(); ++i) out_ << (i ? "," : "") << csv_escape(columns_[i]);
        out_ << "\r\n";
        header_written_ = true;
      }
      for (std::size_t i = 0; i < columns_.size(); ++i) {
        auto it = std::find_if(row.fields.begin(), row.fields.end(), [&](const auto& f) { return f.first == columns_[i]; });
        out_ << (i ? "," : "") << (it == row.fields.end() ? std::string{} : csv_escape(cell(it->second)));
      }
      out_ << "\r\n";
      break;
    }
    case OutputFormat::table: {
      std::vector<std::string> line;
      for (const auto& col : columns_) {
        auto it = std::find_if(row.fields.begin(), row.fields.end(), [&](const auto& f) { return f.first == col; });
        line.push_back(it == row.fields.end() ? std::string{"-"} : cell(it->second));
      }
      table_.push_back(std::move(line));
      break;
    }
  }
}

void RowWriter::finish() {
  if (format_ != OutputFormat::table) {
    out_.flush();
    return;
  }
  std::vector<std::size_t> width(columns_.size(), 0);
  for (const auto& line : table_)
    for (std::size_t i = 0; i < line.size(); ++i) width[i] = std::max(width[i], line[i].size());
  for (const auto& line : table_) {
    for (std::size_t i = 0; i < line.size(); ++i) {
      out_ << (i ? "  " : "") << std::setw(static_cast<int>(width[i])) << (i == 0 ? std::left : std::right)
           << line[i];
    }
    out_ << '\n';
  }
  table_.resize(1);
  out_.flush();
}

}  // namespace gutmyc::cli
