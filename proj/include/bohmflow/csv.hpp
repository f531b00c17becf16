#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace bohmflow {

/// Shortest representation that round-trips a 64-bit float.
std::string format_double(double v);

/// Write content to path atomically (temp file + rename).
void atomic_write(const std::filesystem::path& path, const std::string& content);

/// Comma-separated, '.' decimal point, LF line endings, one header row,
/// round-trip float formatting. Comment lines ("# key: value") precede the
/// header row.
class CsvWriter {
public:
  explicit CsvWriter(std::vector<std::string> columns);

  void comment(const std::string& key, const std::string& value);
  void row(const std::vector<double>& values);
  void row_mixed(const std::vector<std::string>& cells);

  std::string str() const;
  void save(const std::filesystem::path& path) const;

private:
  std::vector<std::string> columns_;
  std::string comments_;
  std::string body_;
  std::size_t n_cols_ = 0;
};

/// FNV-1a 64-bit hash, hex-encoded; used to stamp outputs with their config.
std::string fnv1a_hex(const std::string& data);

}  // namespace bohmflow
