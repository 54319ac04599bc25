#pragma once

// Machine-readable export. Complex values are written as {"re", "im"} objects
// in JSON and as paired Re_/Im_ columns in CSV; CSV numbers use %.17g.

#include "dsem/modes.hpp"
#include "dsem/verify.hpp"

#include <complex>
#include <string>
#include <utility>
#include <vector>

namespace dsem {

inline constexpr const char* kLibraryVersion = "0.1.0";
inline constexpr const char* kTableSchema = "dsem.table/1";
inline constexpr const char* kVerifySchema = "dsem.verify/1";

/// Real coordinate columns followed by complex value columns.
struct Table {
  std::string kind;  // "spectrum", "radial", "field", "potentials"
  std::vector<std::string> real_columns;
  std::vector<std::string> complex_columns;
  struct Row {
    std::vector<double> reals;
    std::vector<std::complex<double>> values;
  };
  std::vector<Row> rows;
  std::vector<std::pair<std::string, std::string>> metadata;
};

std::string format_double(double x);

std::string to_csv(const Table& table);
std::string to_json(const Table& table);

struct SuiteResult {
  std::string suite;
  ModeIndex mode;
  std::vector<ResidualReport> reports;

  bool pass() const;
};

std::string verify_to_json(const std::vector<SuiteResult>& results, const GridSpec& grid);
std::string verify_to_csv(const std::vector<SuiteResult>& results);

}  // namespace dsem
