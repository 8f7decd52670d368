#include "simstring/table_io.hpp"

#include <algorithm>
#include <cmath>
#include <cerrno>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <stdexcept>

namespace simstring {

namespace {

std::vector<std::string> splitCsv(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char ch = line[i];
    if (quoted) {
      if (ch == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          field.push_back('"');
          ++i;
        } else {
          quoted = false;
        }
      } else {
        field.push_back(ch);
      }
    } else if (ch == '"') {
      quoted = true;
    } else if (ch == ',') {
      fields.push_back(std::move(field));
      field.clear();
    } else {
      field.push_back(ch);
    }
  }
  if (quoted) throw std::invalid_argument("unterminated quoted field");
  fields.push_back(std::move(field));
  return fields;
}

std::string quoteCsv(const std::string& field) {
  if (field.find_first_of(",\"\n\r") == std::string::npos) return field;
  std::string out = "\"";
  for (char ch : field) {
    if (ch == '"') out.push_back('"');
    out.push_back(ch);
  }
  out.push_back('"');
  return out;
}

std::string quoteArff(const std::string& name) {
  if (!name.empty() && name.find_first_of(" ,'\"{}%\t") == std::string::npos) return name;
  std::string out = "'";
  for (char ch : name) {
    if (ch == '\'' || ch == '\\') out.push_back('\\');
    out.push_back(ch);
  }
  out.push_back('\'');
  return out;
}

}  // namespace

std::string formatValue(double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

void writeCsv(std::ostream& out, const FeatureTable& table) {
  for (const auto& column : table.columns) out << quoteCsv(column) << ',';
  out << "label\n";
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    for (double v : table.rows[r]) out << formatValue(v) << ',';
    out << quoteCsv(r < table.labels.size() ? table.labels[r] : std::string()) << '\n';
  }
}

void writeCsvFile(const std::string& path, const FeatureTable& table) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error(path + ": cannot open for writing");
  writeCsv(out, table);
  out.flush();
  if (!out) throw std::runtime_error(path + ": write failed");
}

FeatureTable readCsv(std::istream& in, const std::string& source) {
  std::size_t lineNo = 0;
  auto fail = [&](const std::string& what) {
    return std::runtime_error(source + ":" + std::to_string(lineNo) + ": " + what);
  };
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error(source + ": empty file, missing header");
  ++lineNo;
  if (!line.empty() && line.back() == '\r') line.pop_back();
  FeatureTable table;
  try {
    table.columns = splitCsv(line);
  } catch (const std::invalid_argument& e) {
    throw fail(e.what());
  }
  if (table.columns.empty() || table.columns.back() != "label") {
    throw fail("last header column must be \"label\"");
  }
  table.columns.pop_back();
  std::set<std::string> seen;
  for (const auto& c : table.columns) {
    if (!seen.insert(c).second) throw fail("duplicate column \"" + c + "\"");
  }
  while (std::getline(in, line)) {
    ++lineNo;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<std::string> fields;
    try {
      fields = splitCsv(line);
    } catch (const std::invalid_argument& e) {
      throw fail(e.what());
    }
    if (fields.size() != table.columns.size() + 1) {
      throw fail("expected " + std::to_string(table.columns.size() + 1) + " fields, found " +
                 std::to_string(fields.size()));
    }
    std::vector<double> row;
    row.reserve(table.columns.size());
    for (std::size_t i = 0; i < table.columns.size(); ++i) {
      const std::string& f = fields[i];
      char* end = nullptr;
      errno = 0;
      const double v = std::strtod(f.c_str(), &end);
      if (f.empty() || end != f.c_str() + f.size() || errno == ERANGE || !std::isfinite(v)) {
        throw fail("column \"" + table.columns[i] + "\": invalid number \"" + f + "\"");
      }
      row.push_back(v);
    }
    table.rows.push_back(std::move(row));
    table.labels.push_back(std::move(fields.back()));
  }
  return table;
}

FeatureTable readCsvFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error(path + ": cannot open for reading");
  return readCsv(in, path);
}

void writeArff(std::ostream& out, const FeatureTable& table, const std::string& relation) {
  out << "@relation " << quoteArff(relation) << "\n\n";
  for (const auto& column : table.columns) out << "@attribute " << quoteArff(column) << " numeric\n";
  std::vector<std::string> classes(table.labels.begin(), table.labels.end());
  std::sort(classes.begin(), classes.end());
  classes.erase(std::unique(classes.begin(), classes.end()), classes.end());
  out << "@attribute class {";
  for (std::size_t i = 0; i < classes.size(); ++i) out << (i ? "," : "") << quoteArff(classes[i]);
  out << "}\n\n@data\n";
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    for (double v : table.rows[r]) out << formatValue(v) << ',';
    out << quoteArff(table.labels[r]) << '\n';
  }
}

}  // namespace simstring
