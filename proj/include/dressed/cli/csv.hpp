#pragma once

#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace dressed::cli {

/// Reals printed with 17 significant digits ("%.17g"), so output is
/// round-trippable and byte-stable.
std::string format_real(double value);

/// Comma-separated writer with a fixed header. Each row must match the
/// header width.
class CsvWriter {
 public:
  CsvWriter(const std::filesystem::path& path, std::vector<std::string> header);

  CsvWriter& cell(double value);
  CsvWriter& cell(std::string_view text);
  CsvWriter& cell(std::size_t value);
  void end_row();

  [[nodiscard]] const std::filesystem::path& path() const noexcept { return path_; }

 private:
  std::filesystem::path path_;
  std::ofstream out_;
  std::size_t width_;
  std::size_t column_ = 0;

  void separator();
};

}  // namespace dressed::cli
