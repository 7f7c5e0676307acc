#pragma once

#include <string>
#include <vector>

namespace qgb {

// Doubles as 16 lowercase hex chars each (the raw IEEE-754 bits), used
// wherever files must reload bit-identically.
std::string doubles_to_hex(const std::vector<double>& v);
std::vector<double> hex_to_doubles(const std::string& hex);  // throws IngestError on bad input

}  // namespace qgb
