#include "qgb/log.hpp"

#include <iostream>

namespace qgb {

void log_warn(const std::string& msg) { std::cerr << "[warn] " << msg << "\n"; }
void log_info(const std::string& msg) { std::cerr << "[info] " << msg << "\n"; }

}  // namespace qgb
