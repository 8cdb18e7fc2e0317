#include <doctest.h>

#include <cstring>
#include <filesystem>
#include <fstream>
#include <random>

#include "pcakit/csv.hpp"
#include "pcakit/error.hpp"
#include "support.hpp"

using namespace pcakit;

namespace {

std::string parse_error_of(std::string_view text) {
  try {
    parse_csv(text);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::parse_error);
    return e.what();
  }
  return {};
}

}  // namespace

TEST_CASE("parse_csv basics") {
  const DataMatrix d = parse_csv("a,b\n1,2\n3.5,-4e2\n");
  CHECK(d.observations() == 2);
  CHECK(d.variables() == 2);
  CHECK(d.variable_names() == std::vector<std::string>{"a", "b"});
  CHECK(d(1, 0) == 3.5);
  CHECK(d(1, 1) == -400.0);
}

TEST_CASE("parse_csv accepts CRLF, quotes, blank lines and a missing final newline") {
  const DataMatrix d = parse_csv("\"first, name\",\"b\"\"q\"\r\n 1 ,\"2\"\r\n\r\n+3,4");
  CHECK(d.variable_names() == std::vector<std::string>{"first, name", "b\"q"});
  CHECK(d(0, 0) == 1.0);
  CHECK(d(0, 1) == 2.0);
  CHECK(d(1, 0) == 3.0);
  CHECK(d.observations() == 2);
}

TEST_CASE("parse_csv error contract") {
  CHECK(parse_error_of("a,b\n1,2\n4,abc\n").find("row 3, column 2") != std::string::npos);
  CHECK(parse_error_of("").find("empty") != std::string::npos);
  CHECK(parse_error_of("a,a\n1,2\n3,4\n").find("duplicate header") != std::string::npos);
  CHECK(parse_error_of("a,b\n1,2\n3\n").find("ragged") != std::string::npos);
  CHECK(parse_error_of("a,b\n1,2\n").find("at least 2 observations") != std::string::npos);
  CHECK(parse_error_of("a\n1\n2\n").find("at least 2 variables") != std::string::npos);
  CHECK(parse_error_of("a,b\n1,\n3,4\n").find("missing value at row 2, column 2") !=
        std::string::npos);
  CHECK(parse_error_of("a,b\n1,nan\n3,4\n").find("non-numeric") != std::string::npos);
  CHECK(parse_error_of("a,b\n1,1,5\n3,4\n").find("ragged") != std::string::npos);
  CHECK(parse_error_of("a,b\n\"1,2\n3,4\n").find("unterminated") != std::string::npos);
  CHECK(parse_error_of("a,b\n1,2,\n3,4,\n").find("ragged") != std::string::npos);
}

TEST_CASE("ingest_csv reads an 81 x 10 file") {
  std::mt19937_64 rng(81);
  const Matrix values = testsupport::random_normal(rng, 81, 10);
  const auto path = std::filesystem::temp_directory_path() / "pcakit_test_81x10.csv";
  {
    std::ofstream out(path);
    out << write_csv(testsupport::names(10, "x"), values);
  }
  const DataMatrix d = ingest_csv(path);
  CHECK(d.observations() == 81);
  CHECK(d.variables() == 10);
  CHECK(d.variable_names()[9] == "x10");
  // shortest round-trip formatting preserves every bit
  CHECK(std::memcmp(d.values().data().data(), values.data().data(),
                    values.data().size() * sizeof(double)) == 0);
  std::filesystem::remove(path);

  try {
    ingest_csv("/nonexistent/dir/file.csv");
    FAIL("expected io error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::io_error);
  }
}
