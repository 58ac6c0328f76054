#include "doctest.h"

#include <algorithm>
#include <map>
#include <numeric>

#include "gamma4/planar.hpp"

using namespace gamma4;
using namespace gamma4::planar;
using exact::IntMatrix;

namespace {

const char* kTrefoil = "PD[X[1,4,2,5], X[3,6,4,1], X[5,2,6,3]]";
const IntMatrix kPrinted = {{3, -1, 0, -1}, {-1, 5, -1, 0}, {0, -1, 0, 2}, {-1, 0, 2, 0}};

std::vector<knotio::KnotRecord> dataset() {
  return knotio::load_dataset(std::string(GAMMA4_DATA_DIR) + "/knots.csv");
}

knotio::PDCode pd_of(const std::string& name) {
  for (const auto& r : dataset())
    if (r.name == name) return *r.pd;
  FAIL("missing knot " << name);
  return {};
}

// Simultaneous permutation and global sign, by exhaustion.
bool equal_up_to_relabel(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows()) return false;
  std::vector<std::size_t> perm(a.rows());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    for (int s : {1, -1}) {
      bool ok = true;
      for (std::size_t i = 0; i < a.rows() && ok; ++i)
        for (std::size_t j = 0; j < a.cols() && ok; ++j) ok = a(perm[i], perm[j]) == s * b(i, j);
      if (ok) return true;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

knotio::PDCode mirror(knotio::PDCode pd) {
  // Switch every crossing: the over-strand becomes the under-strand, so the
  // quadruple is rotated to start at its incoming end.
  for (auto& x : pd.crossings) {
    const int a = x[0], b = x[1], c = x[2], d = x[3];
    if (d == pd.next(b))
      x = {b, c, d, a};
    else
      x = {d, a, b, c};
  }
  return pd;
}

// Proper colouring oracle: faces sharing an edge label get different colours.
void check_proper(const knotio::PDCode& pd, const FaceSet& fs, const Coloring& col) {
  std::map<int, std::vector<int>> sides;
  for (std::size_t f = 0; f < fs.size(); ++f)
    for (int e : fs.edges(pd, f)) sides[e].push_back(static_cast<int>(f));
  for (const auto& [e, fv] : sides) {
    REQUIRE(fv.size() == 2);
    CHECK(col.face_color[fv[0]] != col.face_color[fv[1]]);
  }
}

}  // namespace

TEST_CASE("face counts") {
  auto tre = knotio::parse_pd(kTrefoil);
  FaceSet fs = faces(tre);
  CHECK(fs.size() == 5);
  std::size_t corners = 0;
  for (const auto& f : fs.faces) corners += f.size();
  CHECK(corners == 12);

  CHECK(faces(pd_of("11n155")).size() == 13);
  CHECK_THROWS_AS(faces(knotio::parse_pd("PD[]")), DiagramError);
}

TEST_CASE("every edge borders exactly two face sides") {
  for (const auto& r : dataset()) {
    FaceSet fs = faces(*r.pd);
    CHECK(fs.size() == r.pd->size() + 2);
    std::map<int, int> count;
    for (std::size_t f = 0; f < fs.size(); ++f)
      for (int e : fs.edges(*r.pd, f)) ++count[e];
    CHECK(count.size() == static_cast<std::size_t>(r.pd->edge_count()));
    for (const auto& [e, c] : count) CHECK(c == 2);
  }
}

TEST_CASE("checkerboard colourings are proper") {
  auto tre = knotio::parse_pd(kTrefoil);
  FaceSet fs = faces(tre);
  check_proper(tre, fs, checkerboard(tre, fs));
  check_proper(tre, fs, checkerboard(tre, fs, {}, true));

  auto k = pd_of("11n155");
  FaceSet f155 = faces(k);
  Coloring col = checkerboard(k, f155, kCalibratedConvention);
  check_proper(k, f155, col);
  CHECK(col.region_face.size() == 5);
  CHECK(col.face_region[col.region_face[0]] == 0);
  check_proper(k, f155, checkerboard(k, f155, kCalibratedConvention, true));
}

TEST_CASE("nugatory crossings are rejected") {
  auto kink = knotio::parse_pd("PD[X[1,2,2,1]]");
  try {
    goeritz(kink);
    FAIL("expected rejection");
  } catch (const NugatoryCrossingError& e) {
    CHECK(e.crossing() == 0);
  }
}

TEST_CASE("Goeritz matrix of 11n155 matches the printed one") {
  GoeritzData gd = goeritz(pd_of("11n155"));
  CHECK(gd.reduced.rows() == 4);
  CHECK(equal_up_to_relabel(gd.reduced, kPrinted));
  CHECK(abs(exact::det(gd.reduced)) == 51);
  // The other eta sign only negates the matrix.
  GoeritzData flipped = goeritz(pd_of("11n155"), {1, true});
  CHECK(flipped.full == -gd.full);
}

TEST_CASE("Goeritz invariants on the dataset") {
  for (const auto& r : dataset()) {
    GoeritzData gd = goeritz(*r.pd);
    CHECK(gd.full.symmetric());
    CHECK(gd.reduced.symmetric());
    for (std::size_t i = 0; i < gd.full.rows(); ++i) {
      exact::Integer s = 0;
      for (std::size_t j = 0; j < gd.full.cols(); ++j) s += gd.full(i, j);
      CHECK(s == 0);
    }
    CHECK(abs(exact::det(gd.reduced)) == r.determinant);
  }
}

TEST_CASE("trefoil Goeritz data") {
  GoeritzData gd = goeritz(knotio::parse_pd(kTrefoil));
  CHECK(abs(exact::det(gd.reduced)) == 3);
  CHECK(std::abs(signature_via_goeritz(gd)) == 2);
}

TEST_CASE("empty diagram") {
  GoeritzData gd = goeritz(knotio::parse_pd("PD[]"));
  CHECK(gd.reduced.rows() == 0);
  CHECK(gd.mu == 0);
  CHECK(exact::det(gd.reduced) == 1);
  CHECK(signature_via_goeritz(gd) == 0);
}

TEST_CASE("zero correction term leaves sig(G)") {
  GoeritzData gd;
  gd.reduced = IntMatrix{{3}};
  gd.mu = 0;
  CHECK(signature_via_goeritz(gd) == 1);
  gd.mu = 3;
  CHECK(signature_via_goeritz(gd) == -2);
}

TEST_CASE("printed matrix signature") {
  GoeritzData gd;
  gd.reduced = kPrinted;
  CHECK(signature_via_goeritz(gd) == 2);
}

TEST_CASE("mirror image negates the signature") {
  for (const auto& r : dataset()) {
    auto m = mirror(*r.pd);
    REQUIRE_NOTHROW(knotio::validate(m));
    CHECK(signature_via_goeritz(goeritz(m)) == -signature_via_goeritz(goeritz(*r.pd)));
  }
}

TEST_CASE("calibration against tabulated signatures") {
  std::vector<CalibrationSample> samples;
  for (const auto& r : dataset()) samples.push_back({r.name, *r.pd, r.signature});
  Calibration c = calibrate(samples);
  CHECK(c.convention == kCalibratedConvention);
  CHECK(c.matches == samples.size());
  CHECK(c.mismatches.empty());
  REQUIRE(c.trials.size() == 4);
  for (std::size_t i = 1; i < c.trials.size(); ++i) CHECK(c.trials[i].second < c.matches);
}

TEST_CASE("matrix CSV dump") { CHECK(matrix_csv(IntMatrix{{1, -2}, {0, 3}}) == "1,-2\n0,3\n"); }
