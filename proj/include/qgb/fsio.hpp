#pragma once

#include <filesystem>
#include <string>

namespace qgb {

// Writes to <path>.tmp, then renames over <path>.
void atomic_write_text(const std::filesystem::path& path, const std::string& content);

std::string read_text_file(const std::filesystem::path& path);  // throws IngestError

}  // namespace qgb
