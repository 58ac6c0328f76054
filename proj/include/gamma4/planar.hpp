#pragma once

// Faces, checkerboard colouring and Goeritz matrices of planar diagrams.

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gamma4/exact.hpp"
#include "gamma4/knotio.hpp"

namespace gamma4::planar {

using exact::IntMatrix;
using knotio::PDCode;

class DiagramError : public std::runtime_error {
public:
  DiagramError(const std::string& what, std::size_t crossing = npos)
      : std::runtime_error(what), crossing_(crossing) {}
  std::size_t crossing() const { return crossing_; }

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

private:
  std::size_t crossing_;
};

class NugatoryCrossingError : public DiagramError {
public:
  using DiagramError::DiagramError;
};

/// Corner of a crossing: the wedge between slots `slot` and `slot + 1` (mod 4).
struct Corner {
  int crossing = 0;
  int slot = 0;
  friend bool operator==(const Corner&, const Corner&) = default;
};

struct FaceSet {
  /// Each face as the cyclic sequence of corners met while walking its boundary.
  std::vector<std::vector<Corner>> faces;
  /// face_of[x][q] = index of the face containing corner (x, q).
  std::vector<std::array<int, 4>> face_of;

  std::size_t size() const { return faces.size(); }
  /// Edge labels along the boundary of face f, in walking order.
  std::vector<int> edges(const PDCode& pd, std::size_t f) const;
};

/// Throws DiagramError when the traversal does not give n + 2 faces.
/// Requires n >= 1.
FaceSet faces(const PDCode& pd);

/// The two free choices behind eta and the crossing type.
///   eta_sign = +1: eta = +1 when the white quadrants are (b,c),(d,a); -1 flips.
///   parallel_is_type_ii: type II means the two strands run parallel through
///   the black band at the crossing (true) or anti-parallel (false).
struct GoeritzConvention {
  int eta_sign = 1;
  bool parallel_is_type_ii = true;

  std::string name() const;
  friend bool operator==(const GoeritzConvention&, const GoeritzConvention&) = default;
};

/// The convention selected by calibration against tabulated signatures.
inline constexpr GoeritzConvention kCalibratedConvention{-1, true};

enum class Color { White, Black };

struct CrossingInfo {
  int region_a = 0;  // white region indices R_i
  int region_b = 0;
  bool white_even = false;  // white quadrants are (a,b),(c,d)
  int eta = 0;
  bool type_ii = false;
};

struct Coloring {
  std::vector<Color> face_color;
  /// region_face[i] = face index of white region R_i; R_0 is the chosen outer face.
  std::vector<int> region_face;
  /// face_region[f] = i for white faces, -1 for black ones.
  std::vector<int> face_region;
  std::vector<CrossingInfo> crossings;
};

/// White = the colour class with fewer faces (tie: the class containing the
/// face with the most corners); R_0 = the white face with the most corners.
/// `complement` swaps the two colour classes.
Coloring checkerboard(const PDCode& pd, const FaceSet& fs, const GoeritzConvention& conv = {},
                      bool complement = false);

struct GoeritzData {
  IntMatrix full;     // G'
  IntMatrix reduced;  // G: G' without row and column 0
  int mu = 0;
  std::vector<int> eta;
  std::vector<bool> type_ii;
};

GoeritzData goeritz(const PDCode& pd, const GoeritzConvention& conv = kCalibratedConvention);

/// sig(G) - mu.
int signature_via_goeritz(const GoeritzData& gd);

struct CalibrationSample {
  std::string name;
  PDCode pd;
  int signature = 0;
};

struct Calibration {
  GoeritzConvention convention;
  std::size_t matches = 0;
  std::size_t total = 0;
  /// Score of every convention tried, in trial order.
  std::vector<std::pair<GoeritzConvention, std::size_t>> trials;
  /// Samples that disagree under the chosen convention.
  std::vector<std::string> mismatches;
};

/// Tries all four conventions (calibrated one first) and keeps the best.
Calibration calibrate(const std::vector<CalibrationSample>& samples);

/// Comma separated rows, one line per matrix row.
std::string matrix_csv(const IntMatrix& m);

}  // namespace gamma4::planar
