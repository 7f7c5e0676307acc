#pragma once

#include <string>

namespace qgb {

// stderr logging; kept minimal so library code stays silent on the happy path.
void log_warn(const std::string& msg);
void log_info(const std::string& msg);

}  // namespace qgb
