#pragma once

#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace lmode::cli {

/// Comma-separated output with a header row and 15 significant digits.
class CsvWriter {
 public:
  explicit CsvWriter(std::ostream& out) : out_(out) {}

  void header(const std::vector<std::string>& columns);
  void row(std::span<const double> values);

 private:
  std::ostream& out_;
};

/// printf("%.15g") with negative zero printed as 0.
std::string format_number(double value);

}  // namespace lmode::cli
