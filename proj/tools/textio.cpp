#include "textio.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace subchain::tools {

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string fmtg(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%g", v);
  return buf;
}

void write_file_atomic(const std::filesystem::path& path,
                       const std::string& content) {
  if (path.has_parent_path())
    std::filesystem::create_directories(path.parent_path());
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw std::runtime_error("short write to " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

CsvBuilder::CsvBuilder(const std::string& comment) {
  buf_ = "# " + comment + "\n";
}

void CsvBuilder::header(const std::vector<std::string>& cols) {
  for (std::size_t i = 0; i < cols.size(); ++i) {
    if (i) buf_ += ',';
    buf_ += cols[i];
  }
  buf_ += '\n';
}

void CsvBuilder::row(const std::vector<double>& vals) {
  for (std::size_t i = 0; i < vals.size(); ++i) {
    if (i) buf_ += ',';
    buf_ += fmt17(vals[i]);
  }
  buf_ += '\n';
}

std::string csv_matrix(const std::string& comment,
                       const std::vector<double>& vals, int width, int height) {
  std::string out = "# " + comment + "\n";
  for (int r = 0; r < height; ++r) {
    for (int c = 0; c < width; ++c) {
      if (c) out += ',';
      out += fmt17(vals[static_cast<std::size_t>(r) * width + c]);
    }
    out += '\n';
  }
  return out;
}

std::string pgm_matrix(const std::vector<double>& vals, int width, int height) {
  double peak = 0.0;
  for (double v : vals) peak = std::max(peak, v);
  std::string out = "P2\n" + std::to_string(width) + " " +
                    std::to_string(height) + "\n65535\n";
  for (int r = 0; r < height; ++r) {
    for (int c = 0; c < width; ++c) {
      const double v = vals[static_cast<std::size_t>(r) * width + c];
      const int level =
          peak > 0.0 ? static_cast<int>(std::lround(v / peak * 65535.0)) : 0;
      if (c) out += ' ';
      out += std::to_string(level);
    }
    out += '\n';
  }
  return out;
}

}  // namespace subchain::tools
