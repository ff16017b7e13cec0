#ifndef AIRCOMP_TOOLS_CSV_HPP
#define AIRCOMP_TOOLS_CSV_HPP

#include <chrono>
#include <filesystem>
#include <string>
#include <utility>
#include <vector>

namespace aircomp::tools {

/// Decimal with 9 significant digits ("%.9g").
std::string format_number(double value);

/// Comma-separated table with a header row and LF line endings.
class CsvTable {
 public:
  explicit CsvTable(std::vector<std::string> header);

  /// Appends one row; the cell count must match the header.
  void add_row(std::vector<std::string> cells);

  const std::vector<std::string>& header() const noexcept { return header_; }
  const std::vector<std::vector<std::string>>& rows() const noexcept { return rows_; }
  std::string str() const;

  static CsvTable parse(const std::string& text);
  std::size_t column(const std::string& name) const;

 private:
  std::vector<std::string> header_;
  std::vector<std::vector<std::string>> rows_;
};

struct RunManifest {
  std::string subcommand;
  std::string command_line;
  std::vector<std::pair<std::string, std::string>> parameters;
  unsigned long long seed = 0;
  std::string output_path;
  std::string tool_version;
  std::chrono::duration<double> duration{0};

  std::string str() const;
};

void write_text_file(const std::filesystem::path& path, const std::string& text);
std::string read_text_file(const std::filesystem::path& path);

}  // namespace aircomp::tools

#endif  // AIRCOMP_TOOLS_CSV_HPP
