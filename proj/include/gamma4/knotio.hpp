#pragma once

// Planar-diagram codes, the knot invariant table and the band-move ledger.

#include <array>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace gamma4::knotio {

/// One crossing: edge labels counterclockwise from the incoming under-strand.
using Crossing = std::array<int, 4>;

struct PDCode {
  std::vector<Crossing> crossings;

  std::size_t size() const { return crossings.size(); }
  int edge_count() const { return 2 * static_cast<int>(crossings.size()); }
  /// Label following e along the orientation (2n wraps to 1).
  int next(int e) const { return e == edge_count() ? 1 : e + 1; }

  friend bool operator==(const PDCode&, const PDCode&) = default;
};

class PDSyntaxError : public std::runtime_error {
public:
  PDSyntaxError(const std::string& what, std::size_t offset)
      : std::runtime_error(what), offset_(offset) {}
  std::size_t offset() const { return offset_; }

private:
  std::size_t offset_;
};

class PDSemanticError : public std::runtime_error {
public:
  /// crossing is 0-based; npos when the problem is not tied to one crossing.
  PDSemanticError(const std::string& what, std::size_t crossing)
      : std::runtime_error(what), crossing_(crossing) {}
  std::size_t crossing() const { return crossing_; }

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

private:
  std::size_t crossing_;
};

PDCode parse_pd(std::string_view text);
/// Throws PDSemanticError if the code violates the label invariants.
void validate(const PDCode& pd);
std::string render(const PDCode& pd);

struct Interval {
  int lo = 0;
  int hi = 0;

  bool exact() const { return lo == hi; }
  bool empty() const { return lo > hi; }
  friend bool operator==(const Interval&, const Interval&) = default;
};

struct KnotRecord {
  std::string name;
  int crossings = 0;
  std::optional<PDCode> pd;
  int signature = 0;
  int arf = 0;
  int g4 = 0;
  Interval u;
  std::optional<Interval> us;
  std::optional<Interval> c4;
  std::optional<int> crosscap_hi;
  bool slice = false;
  long determinant = 1;
  std::optional<int> definiteness;

  friend bool operator==(const KnotRecord&, const KnotRecord&) = default;
};

struct TargetGamma {
  bool slice = false;
  int value = 1;  // meaningful when !slice

  friend bool operator==(const TargetGamma&, const TargetGamma&) = default;
};

struct BandMoveCertificate {
  std::string source;
  int h = 0;
  std::string target;
  TargetGamma target_gamma4;
  std::string figure_ref;

  friend bool operator==(const BandMoveCertificate&, const BandMoveCertificate&) = default;
};

class DatasetError : public std::runtime_error {
public:
  /// row is the 1-based data row (header excluded); 0 for header problems.
  DatasetError(const std::string& what, std::size_t row)
      : std::runtime_error(what), row_(row) {}
  std::size_t row() const { return row_; }

private:
  std::size_t row_;
};

/// RFC 4180 style records: quoted fields may hold commas, "" escapes a quote.
std::vector<std::vector<std::string>> read_csv(std::string_view text);

std::vector<KnotRecord> parse_dataset(std::string_view csv_text);
std::vector<KnotRecord> load_dataset(const std::string& path);

std::vector<BandMoveCertificate> parse_certificates(std::string_view csv_text);
std::vector<BandMoveCertificate> load_certificates(const std::string& path);

/// Canonical CSV text: fixed header, rows in natural name order.
std::string render_dataset(std::vector<KnotRecord> records);
/// Canonical CSV text: rows sorted by (source, target, h).
std::string render_certificates(std::vector<BandMoveCertificate> certs);

/// Whole file as a string; throws DatasetError when unreadable.
std::string read_file(const std::string& path);

/// Orders names like 11n2 < 11n10 (digit runs compared numerically).
bool natural_less(std::string_view a, std::string_view b);

}  // namespace gamma4::knotio
