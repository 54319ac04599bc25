#include "dsem/report.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace dsem {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json complex_json(std::complex<double> z) {
  return ordered_json{{"re", z.real()}, {"im", z.imag()}};
}

ordered_json point_json(const SpacetimePoint& p) {
  return ordered_json{{"t", p.t}, {"r", p.r}, {"theta", p.theta}, {"phi", p.phi}};
}

ordered_json report_json(const ResidualReport& r) {
  return ordered_json{{"equation_id", r.equation_id}, {"max_abs", r.max_abs},
                      {"rms", r.rms},                 {"worst_point", point_json(r.worst_point)},
                      {"n_points", r.n_points},       {"tolerance", r.tolerance},
                      {"pass", r.pass}};
}

ordered_json range_json(const std::array<double, 2>& r) { return ordered_json::array({r[0], r[1]}); }

}  // namespace

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string to_csv(const Table& table) {
  std::ostringstream os;
  bool first = true;
  auto sep = [&] {
    if (!first) os << ',';
    first = false;
  };
  for (const auto& c : table.real_columns) {
    sep();
    os << c;
  }
  for (const auto& c : table.complex_columns) {
    sep();
    os << "Re_" << c << ",Im_" << c;
  }
  os << '\n';
  for (const auto& row : table.rows) {
    first = true;
    for (double x : row.reals) {
      sep();
      os << format_double(x);
    }
    for (const auto& z : row.values) {
      sep();
      os << format_double(z.real()) << ',' << format_double(z.imag());
    }
    os << '\n';
  }
  return os.str();
}

std::string to_json(const Table& table) {
  ordered_json doc;
  doc["schema"] = kTableSchema;
  doc["library_version"] = kLibraryVersion;
  doc["kind"] = table.kind;
  ordered_json meta = ordered_json::object();
  for (const auto& [k, v] : table.metadata) meta[k] = v;
  doc["metadata"] = meta;
  ordered_json rows = ordered_json::array();
  for (const auto& row : table.rows) {
    ordered_json obj;
    for (std::size_t k = 0; k < table.real_columns.size(); ++k)
      obj[table.real_columns[k]] = row.reals[k];
    for (std::size_t k = 0; k < table.complex_columns.size(); ++k)
      obj[table.complex_columns[k]] = complex_json(row.values[k]);
    rows.push_back(std::move(obj));
  }
  doc["rows"] = std::move(rows);
  return doc.dump(2) + "\n";
}

bool SuiteResult::pass() const {
  return std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.pass; });
}

std::string verify_to_json(const std::vector<SuiteResult>& results, const GridSpec& grid) {
  ordered_json doc;
  doc["schema"] = kVerifySchema;
  doc["library_version"] = kLibraryVersion;
  doc["metadata"] = ordered_json{
      {"lorentz_g2_coefficient", "2*b_nu"},
      {"b_nu", "sqrt(j(j+1)/2)"},
      {"reduced_stencil", "central4, long double"},
      {"maxwell_stencil", "central2, double"},
  };
  doc["grid"] = ordered_json{
      {"t_range", range_json(grid.t_range)},
      {"r_range", range_json(grid.r_range)},
      {"theta_range", range_json(grid.theta_range)},
      {"phi_range", range_json(grid.phi_range)},
      {"n_t", grid.n_t},
      {"n_r", grid.n_r},
      {"n_theta", grid.n_theta},
      {"n_phi", grid.n_phi},
      {"fd_step", grid.fd_step},
  };
  ordered_json suites = ordered_json::array();
  bool all = true;
  for (const auto& s : results) {
    ordered_json reports = ordered_json::array();
    for (const auto& r : s.reports) reports.push_back(report_json(r));
    const bool ok = s.pass();
    all = all && ok;
    suites.push_back(ordered_json{
        {"suite", s.suite},
        {"mode", ordered_json{{"j", s.mode.j()},
                              {"m", s.mode.m()},
                              {"n", s.mode.n()},
                              {"parity", to_string(s.mode.parity())},
                              {"omega", s.mode.omega()}}},
        {"pass", ok},
        {"reports", std::move(reports)},
    });
  }
  doc["suites"] = std::move(suites);
  doc["pass"] = all;
  return doc.dump(2) + "\n";
}

std::string verify_to_csv(const std::vector<SuiteResult>& results) {
  std::ostringstream os;
  os << "suite,j,m,n,parity,equation_id,max_abs,rms,worst_t,worst_r,worst_theta,worst_phi,"
        "n_points,tolerance,pass\n";
  for (const auto& s : results)
    for (const auto& r : s.reports)
      os << s.suite << ',' << s.mode.j() << ',' << s.mode.m() << ',' << s.mode.n() << ','
         << to_string(s.mode.parity()) << ',' << r.equation_id << ',' << format_double(r.max_abs)
         << ',' << format_double(r.rms) << ',' << format_double(r.worst_point.t) << ','
         << format_double(r.worst_point.r) << ',' << format_double(r.worst_point.theta) << ','
         << format_double(r.worst_point.phi) << ',' << r.n_points << ','
         << format_double(r.tolerance) << ',' << (r.pass ? "true" : "false") << '\n';
  return os.str();
}

}  // namespace dsem
