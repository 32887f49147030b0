#pragma once

#include <string>
#include <vector>

namespace spinlangevin {

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;
};

// %.17g, with infinities spelled inf / -inf. NaN is rejected with NumericalError.
std::string format_number(double v);

// Accepts everything format_number emits.
double parse_number(const std::string& token);

void write_csv(const std::string& path, const CsvTable& table);
CsvTable read_csv(const std::string& path);

}  // namespace spinlangevin
