#pragma once

// Persistence helpers: RFC-4180 CSV with 17 significant digits, little-endian
// f64 field volumes with JSON sidecars, and SHA-256 digests.

#include <filesystem>
#include <fstream>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "irsp/random_field.hpp"

namespace irsp {

std::string sha256_hex(std::string_view bytes);
std::string sha256_file(const std::filesystem::path& path);

// Shortest exact text for a double: %.17g.
std::string format_double(double v);

class CsvWriter {
 public:
  CsvWriter(const std::filesystem::path& path, const std::vector<std::string>& header);
  CsvWriter& operator<<(double v);
  CsvWriter& operator<<(long long v);
  CsvWriter& operator<<(std::size_t v) { return *this << static_cast<long long>(v); }
  CsvWriter& operator<<(int v) { return *this << static_cast<long long>(v); }
  CsvWriter& operator<<(const std::string& v);
  void end_row();
  void close();

 private:
  void separator();

  std::filesystem::path path_;
  std::ofstream out_;
  std::size_t columns_;
  std::size_t filled_ = 0;
};

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  // Index of a header column; throws InvalidInput if absent.
  [[nodiscard]] std::size_t column(const std::string& name) const;
};

CsvTable read_csv(const std::filesystem::path& path);
double parse_double(const std::string& s);
long long parse_int(const std::string& s);

// Raw volume: `components` blocks of n^3 complex values, each interleaved
// (re, im) as little-endian f64, cells in lexicographic order.
void write_volume(const std::filesystem::path& path, const std::vector<const std::vector<cplx>*>& components,
                  const GridSpec& grid, const nlohmann::json& extra);
// Returns component blocks; checks the sidecar against the grid size.
std::vector<std::vector<cplx>> read_volume(const std::filesystem::path& path);

void write_vector_field(const std::filesystem::path& path, const VectorField& field, const GridSpec& grid,
                        const nlohmann::json& extra = nlohmann::json::object());
// A(x) as nine blocks (j, l) in row-major order.
void write_strength(const std::filesystem::path& path, const std::vector<Mat3c>& A, const GridSpec& grid,
                    const nlohmann::json& extra = nlohmann::json::object());
std::vector<Mat3c> read_strength(const std::filesystem::path& path);

void write_json(const std::filesystem::path& path, const nlohmann::json& j);
nlohmann::json read_json(const std::filesystem::path& path);

}  // namespace irsp
