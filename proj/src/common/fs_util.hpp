#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace vsrchart {

std::string read_file(const std::filesystem::path& path);

// Writes to a dot-prefixed temp file in the target directory, then renames.
// Readers never observe a half-written file.
void atomic_write_file(const std::filesystem::path& path, const std::string& data);

void ensure_directory(const std::filesystem::path& dir);

// Sorted regular files in `dir` with the given extension (e.g. ".json").
std::vector<std::filesystem::path> list_files(const std::filesystem::path& dir,
                                              const std::string& extension);

}  // namespace vsrchart
