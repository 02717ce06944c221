#pragma once

#include <span>
#include <string>
#include <vector>

#include "gista/sim.hpp"

namespace gista::app {

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<double>> columns;

  std::size_t rows() const noexcept { return columns.empty() ? 0 : columns.front().size(); }
  /// Throws std::out_of_range if the column is absent.
  const std::vector<double>& column(const std::string& name) const;
  bool has(const std::string& name) const;
};

/// %.17g, header row, '\n' line endings. Throws std::runtime_error on I/O failure.
void write_csv(const std::string& path, const std::vector<std::string>& header,
               const std::vector<std::span<const double>>& columns);
CsvTable read_csv(const std::string& path);

std::string format_double(double x);

void write_iteration_csv(const std::string& path, const IterationLog& log);
IterationLog read_iteration_csv(const std::string& path, std::size_t iteration);

}  // namespace gista::app
