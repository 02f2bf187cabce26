#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace subchain::tools {

/// 17 significant digits, round-trippable doubles.
std::string fmt17(double v);

/// Short %g form for labels (column names, comment lines).
std::string fmtg(double v);

/// Write via a temp file in the same directory plus rename, so readers
/// never observe a partial file.
void write_file_atomic(const std::filesystem::path& path,
                       const std::string& content);

/// Accumulates a CSV: one `#` comment line with the resolved
/// configuration, a header row, then numeric rows (LF endings).
class CsvBuilder {
 public:
  explicit CsvBuilder(const std::string& comment);
  void header(const std::vector<std::string>& cols);
  void row(const std::vector<double>& vals);
  const std::string& str() const { return buf_; }

 private:
  std::string buf_;
};

/// CSV matrix without a header row (raster output), one row per line.
std::string csv_matrix(const std::string& comment,
                       const std::vector<double>& vals, int width, int height);

/// Plain PGM (P2), row-major, maxval 65535, linear map from [0, max].
std::string pgm_matrix(const std::vector<double>& vals, int width, int height);

}  // namespace subchain::tools
