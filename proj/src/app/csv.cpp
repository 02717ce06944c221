#include "gista/app/csv.hpp"

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace gista::app {

namespace {

const char* const kAxisFields[] = {"y", "ydot", "e", "edot", "s",
                                   "u", "u_st", "u_ilc", "psi_truth", "d"};

template <class Trace>
auto axis_columns(Trace& a) {
  return std::array{&a.y, &a.ydot, &a.e, &a.edot, &a.s, &a.u, &a.u_st, &a.u_ilc, &a.psi_truth,
                    &a.d};
}

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::string cell;
  std::istringstream is(line);
  while (std::getline(is, cell, ',')) out.push_back(cell);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

}  // namespace

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

bool CsvTable::has(const std::string& name) const {
  for (const auto& h : header) {
    if (h == name) return true;
  }
  return false;
}

const std::vector<double>& CsvTable::column(const std::string& name) const {
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (header[i] == name) return columns[i];
  }
  throw std::out_of_range("CSV has no column '" + name + "'");
}

void write_csv(const std::string& path, const std::vector<std::string>& header,
               const std::vector<std::span<const double>>& columns) {
  if (header.size() != columns.size()) {
    throw std::invalid_argument("write_csv: header and column counts differ");
  }
  const std::size_t rows = columns.empty() ? 0 : columns.front().size();
  for (const auto& c : columns) {
    if (c.size() != rows) throw std::invalid_argument("write_csv: ragged columns");
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  for (std::size_t j = 0; j < header.size(); ++j) out << (j ? "," : "") << header[j];
  out << '\n';
  std::string line;
  for (std::size_t i = 0; i < rows; ++i) {
    line.clear();
    for (std::size_t j = 0; j < columns.size(); ++j) {
      if (j) line += ',';
      line += format_double(columns[j][i]);
    }
    line += '\n';
    out << line;
  }
  if (!out) throw std::runtime_error("write to " + path + " failed");
}

CsvTable read_csv(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  CsvTable t;
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error(path + ": empty CSV");
  t.header = split(line);
  t.columns.resize(t.header.size());
  std::size_t row = 1;
  while (std::getline(in, line)) {
    ++row;
    const auto cells = split(line);
    if (cells.size() != t.header.size()) {
      throw std::runtime_error(path + ":" + std::to_string(row) + ": expected " +
                               std::to_string(t.header.size()) + " fields");
    }
    for (std::size_t j = 0; j < cells.size(); ++j) {
      char* end = nullptr;
      const double v = std::strtod(cells[j].c_str(), &end);
      if (cells[j].empty() || *end != '\0') {
        throw std::runtime_error(path + ":" + std::to_string(row) + ": bad number '" +
                                 cells[j] + "'");
      }
      t.columns[j].push_back(v);
    }
  }
  return t;
}

void write_iteration_csv(const std::string& path, const IterationLog& log) {
  std::vector<std::string> header{"t", "r", "rdot"};
  std::vector<std::span<const double>> cols{log.t, log.r, log.rdot};
  for (const auto& a : log.axes) {
    const auto c = axis_columns(a);
    for (std::size_t f = 0; f < c.size(); ++f) {
      header.push_back(std::string(kAxisFields[f]) + "_" + a.name);
      cols.emplace_back(*c[f]);
    }
  }
  write_csv(path, header, cols);
}

IterationLog read_iteration_csv(const std::string& path, std::size_t iteration) {
  CsvTable t = read_csv(path);
  IterationLog log;
  log.iteration = iteration;
  log.t = t.column("t");
  log.r = t.column("r");
  log.rdot = t.column("rdot");
  for (const auto& h : t.header) {
    if (h.rfind("y_", 0) != 0) continue;
    AxisTrace a;
    a.name = h.substr(2);
    auto c = axis_columns(a);
    for (std::size_t f = 0; f < c.size(); ++f) {
      *c[f] = t.column(std::string(kAxisFields[f]) + "_" + a.name);
    }
    log.axes.push_back(std::move(a));
  }
  if (log.axes.empty()) throw std::runtime_error(path + ": no axis columns");
  return log;
}

}  // namespace gista::app
