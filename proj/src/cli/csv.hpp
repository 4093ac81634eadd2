#pragma once

#include <filesystem>
#include <fstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hexwalk::cli {

/// Shortest round-trip decimal form; locale independent.
std::string format_number(double value);
std::string format_number(long value);
inline std::string format_number(int value) { return format_number(static_cast<long>(value)); }

using Metadata = std::vector<std::pair<std::string, std::string>>;

/// Comma-separated file with '#'-prefixed metadata lines and a fixed header.
class CsvWriter {
 public:
  CsvWriter(const std::filesystem::path& path, const Metadata& metadata,
            const std::vector<std::string>& header);

  void row(const std::vector<std::string>& cells);

 private:
  std::filesystem::path path_;
  std::ofstream out_;
  std::size_t columns_;
};

}  // namespace hexwalk::cli
