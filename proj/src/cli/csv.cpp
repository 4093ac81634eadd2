#include "csv.hpp"

#include <charconv>
#include <cmath>

#include "hexwalk/error.hpp"

namespace hexwalk::cli {

std::string format_number(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[64];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, end);
}

std::string format_number(long value) { return std::to_string(value); }

CsvWriter::CsvWriter(const std::filesystem::path& path, const Metadata& metadata,
                     const std::vector<std::string>& header)
    : path_(path), out_(path, std::ios::binary | std::ios::trunc), columns_(header.size()) {
  require(out_.good(), ErrorKind::io, "cannot open " + path.string() + " for writing");
  for (const auto& [key, value] : metadata) out_ << "# " << key << '=' << value << '\n';
  for (std::size_t i = 0; i < header.size(); ++i) out_ << (i ? "," : "") << header[i];
  out_ << '\n';
}

void CsvWriter::row(const std::vector<std::string>& cells) {
  require(cells.size() == columns_, ErrorKind::invalid_parameter,
          "CSV row width does not match header in " + path_.string());
  for (std::size_t i = 0; i < cells.size(); ++i) out_ << (i ? "," : "") << cells[i];
  out_ << '\n';
  require(out_.good(), ErrorKind::io, "write failed for " + path_.string());
}

}  // namespace hexwalk::cli
