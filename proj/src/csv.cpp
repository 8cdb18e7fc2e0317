#include "pcakit/csv.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "pcakit/error.hpp"

namespace pcakit {
namespace {

struct Record {
  std::size_t row = 0;  // 1-based line number where the record starts
  std::vector<std::string> fields;
};

[[noreturn]] void parse_fail(const std::string& message) {
  throw Error(ErrorKind::parse_error, message, "ingest");
}

std::string where(std::size_t row, std::size_t col) {
  return "row " + std::to_string(row) + ", column " + std::to_string(col);
}

std::vector<Record> split_records(std::string_view text) {
  std::vector<Record> records;
  Record current{1, {}};
  std::string field;
  bool in_quotes = false;
  bool field_was_quoted = false;
  std::size_t line = 1;

  auto end_field = [&] {
    current.fields.push_back(std::move(field));
    field.clear();
    field_was_quoted = false;
  };
  auto end_record = [&] {
    end_field();
    const bool blank = current.fields.size() == 1 && current.fields[0].find_first_not_of(" \t") ==
                                                         std::string::npos;
    if (!blank) records.push_back(std::move(current));
    current = Record{line + 1, {}};
  };

  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (in_quotes) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field += '"';
          ++i;
        } else {
          in_quotes = false;
        }
      } else {
        if (c == '\n') ++line;
        field += c;
      }
      continue;
    }
    switch (c) {
      case '"':
        if (field.find_first_not_of(" \t") != std::string::npos || field_was_quoted) {
          parse_fail("unexpected quote at " + where(current.row, current.fields.size() + 1));
        }
        field.clear();
        in_quotes = true;
        field_was_quoted = true;
        break;
      case ',':
        end_field();
        break;
      case '\r':
        if (i + 1 < text.size() && text[i + 1] == '\n') break;
        [[fallthrough]];
      case '\n':
        end_record();
        ++line;
        break;
      default:
        field += c;
    }
  }
  if (in_quotes) parse_fail("unterminated quoted field starting at row " + std::to_string(current.row));
  if (!field.empty() || !current.fields.empty()) end_record();
  return records;
}

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t");
  return s.substr(first, last - first + 1);
}

double parse_number(const std::string& raw, std::size_t row, std::size_t col) {
  std::string s = trim(raw);
  if (s.empty()) parse_fail("missing value at " + where(row, col));
  std::string_view v = s;
  if (v.front() == '+') v.remove_prefix(1);
  double out = 0.0;
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || ptr != v.data() + v.size() || !std::isfinite(out)) {
    parse_fail("non-numeric value '" + s + "' at " + where(row, col));
  }
  return out;
}

}  // namespace

DataMatrix parse_csv(std::string_view text) {
  if (text.size() >= 3 && text.substr(0, 3) == "\xEF\xBB\xBF") text.remove_prefix(3);
  std::vector<Record> records = split_records(text);
  if (records.empty()) parse_fail("empty file");

  std::vector<std::string> header;
  std::set<std::string> seen;
  for (std::size_t c = 0; c < records[0].fields.size(); ++c) {
    std::string name = trim(records[0].fields[c]);
    if (name.empty()) parse_fail("empty header name at " + where(records[0].row, c + 1));
    if (!seen.insert(name).second) parse_fail("duplicate header '" + name + "'");
    header.push_back(std::move(name));
  }

  const std::size_t p = header.size();
  const std::size_t n = records.size() - 1;
  if (n < 2) parse_fail("need at least 2 observations, found " + std::to_string(n));
  if (p < 2) parse_fail("need at least 2 variables, found " + std::to_string(p));

  Matrix values(n, p);
  for (std::size_t i = 0; i < n; ++i) {
    const Record& rec = records[i + 1];
    if (rec.fields.size() != p) {
      parse_fail("ragged row " + std::to_string(rec.row) + ": expected " + std::to_string(p) +
                 " fields, found " + std::to_string(rec.fields.size()));
    }
    for (std::size_t j = 0; j < p; ++j) values(i, j) = parse_number(rec.fields[j], rec.row, j + 1);
  }
  return DataMatrix(std::move(header), std::move(values));
}

DataMatrix ingest_csv(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorKind::io_error, "cannot read input file '" + path.string() + "'", "ingest");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_csv(buf.str());
}

std::string write_csv(const std::vector<std::string>& header, const Matrix& rows) {
  if (header.size() != rows.cols()) {
    throw Error(ErrorKind::invalid_argument, "CSV header does not match column count");
  }
  std::string out;
  auto put_name = [&](const std::string& s) {
    if (s.find_first_of(",\"\r\n") == std::string::npos) {
      out += s;
      return;
    }
    out += '"';
    for (char c : s) {
      if (c == '"') out += '"';
      out += c;
    }
    out += '"';
  };
  for (std::size_t j = 0; j < header.size(); ++j) {
    if (j) out += ',';
    put_name(header[j]);
  }
  out += '\n';
  char buf[64];
  for (std::size_t i = 0; i < rows.rows(); ++i) {
    for (std::size_t j = 0; j < rows.cols(); ++j) {
      if (j) out += ',';
      const auto res = std::to_chars(buf, buf + sizeof buf, rows(i, j));
      out.append(buf, res.ptr);
    }
    out += '\n';
  }
  return out;
}

}  // namespace pcakit
