#include "dressed/cli/csv.hpp"

#include <cstdio>

#include "dressed/errors.hpp"

namespace dressed::cli {

std::string format_real(double value) {
  char buffer[40];
  std::snprintf(buffer, sizeof buffer, "%.17g", value);
  return buffer;
}

CsvWriter::CsvWriter(const std::filesystem::path& path, std::vector<std::string> header)
    : path_(path), out_(path), width_(header.size()) {
  if (!out_) throw Error("cannot open " + path.string() + " for writing");
  for (const auto& name : header) cell(std::string_view(name));
  end_row();
}

void CsvWriter::separator() {
  if (column_ == width_) throw Error("too many cells in a row of " + path_.string());
  if (column_ > 0) out_ << ',';
  ++column_;
}

CsvWriter& CsvWriter::cell(double value) {
  separator();
  out_ << format_real(value);
  return *this;
}

CsvWriter& CsvWriter::cell(std::string_view text) {
  separator();
  out_ << text;
  return *this;
}

CsvWriter& CsvWriter::cell(std::size_t value) {
  separator();
  out_ << value;
  return *this;
}

void CsvWriter::end_row() {
  if (column_ != width_) throw Error("short row in " + path_.string());
  out_ << '\n';
  column_ = 0;
  if (!out_) throw Error("write to " + path_.string() + " failed");
}

}  // namespace dressed::cli
