#include "gamma4/planar.hpp"

#include <algorithm>
#include <map>

namespace gamma4::planar {

namespace {

struct End {
  int crossing;
  int slot;
};

// For every label, its two occurrences.
std::map<int, std::vector<End>> edge_ends(const PDCode& pd) {
  std::map<int, std::vector<End>> ends;
  for (std::size_t x = 0; x < pd.size(); ++x)
    for (int p = 0; p < 4; ++p) ends[pd.crossings[x][p]].push_back({static_cast<int>(x), p});
  return ends;
}

}  // namespace

std::vector<int> FaceSet::edges(const PDCode& pd, std::size_t f) const {
  std::vector<int> out;
  out.reserve(faces[f].size());
  for (const Corner& c : faces[f]) out.push_back(pd.crossings[c.crossing][(c.slot + 1) % 4]);
  return out;
}

FaceSet faces(const PDCode& pd) {
  const int n = static_cast<int>(pd.size());
  if (n == 0) throw DiagramError("the crossingless diagram has no crossing faces");
  auto ends = edge_ends(pd);

  // next[x][q]: walk out of corner (x,q) along the edge in slot q+1.
  std::vector<std::array<Corner, 4>> next(n);
  std::vector<std::array<int, 4>> hits(n, {0, 0, 0, 0});
  for (int x = 0; x < n; ++x)
    for (int q = 0; q < 4; ++q) {
      int p = (q + 1) % 4;
      const auto& e = ends.at(pd.crossings[x][p]);
      const End& o = (e[0].crossing == x && e[0].slot == p) ? e[1] : e[0];
      next[x][q] = {o.crossing, o.slot};
      if (++hits[o.crossing][o.slot] > 1)
        throw DiagramError("face traversal is not a permutation", static_cast<std::size_t>(x));
    }

  FaceSet fs;
  fs.face_of.assign(n, {-1, -1, -1, -1});
  for (int x = 0; x < n; ++x)
    for (int q = 0; q < 4; ++q) {
      if (fs.face_of[x][q] >= 0) continue;
      const int id = static_cast<int>(fs.faces.size());
      std::vector<Corner> cyc;
      Corner c{x, q};
      while (fs.face_of[c.crossing][c.slot] < 0) {
        fs.face_of[c.crossing][c.slot] = id;
        cyc.push_back(c);
        c = next[c.crossing][c.slot];
      }
      fs.faces.push_back(std::move(cyc));
    }

  if (static_cast<int>(fs.faces.size()) != n + 2)
    throw DiagramError("diagram has " + std::to_string(fs.faces.size()) + " faces, expected " +
                       std::to_string(n + 2) + " (not planar)");
  return fs;
}

std::string GoeritzConvention::name() const {
  return std::string(eta_sign > 0 ? "eta+" : "eta-") +
         (parallel_is_type_ii ? "/parallel-type-II" : "/antiparallel-type-II");
}

Coloring checkerboard(const PDCode& pd, const FaceSet& fs, const GoeritzConvention& conv,
                      bool complement) {
  const int n = static_cast<int>(pd.size());
  const int nf = static_cast<int>(fs.size());

  // Faces meeting across an edge at a crossing get opposite colours.
  std::vector<std::vector<int>> adj(nf);
  for (int x = 0; x < n; ++x)
    for (int q = 0; q < 4; ++q) {
      int f = fs.face_of[x][q], g = fs.face_of[x][(q + 1) % 4];
      adj[f].push_back(g);
      adj[g].push_back(f);
    }
  std::vector<int> side(nf, -1);
  side[0] = 0;
  std::vector<int> stack{0};
  while (!stack.empty()) {
    int f = stack.back();
    stack.pop_back();
    for (int g : adj[f]) {
      if (side[g] < 0) {
        side[g] = 1 - side[f];
        stack.push_back(g);
      } else if (side[g] == side[f]) {
        throw DiagramError("faces do not admit a checkerboard colouring");
      }
    }
  }
  if (std::find(side.begin(), side.end(), -1) != side.end())
    throw DiagramError("diagram is not connected");

  std::array<std::vector<int>, 2> cls;
  for (int f = 0; f < nf; ++f) cls[side[f]].push_back(f);
  auto largest = [&](const std::vector<int>& fsub) {
    int best = fsub.front();
    for (int f : fsub)
      if (fs.faces[f].size() > fs.faces[best].size()) best = f;
    return best;
  };
  int white = 0;
  if (cls[1].size() < cls[0].size()) {
    white = 1;
  } else if (cls[1].size() == cls[0].size()) {
    int b0 = largest(cls[0]), b1 = largest(cls[1]);
    if (fs.faces[b1].size() > fs.faces[b0].size()) white = 1;
  }
  if (complement) white = 1 - white;

  Coloring col;
  col.face_color.resize(nf);
  for (int f = 0; f < nf; ++f) col.face_color[f] = side[f] == white ? Color::White : Color::Black;
  const int r0 = largest(cls[white]);
  col.region_face.push_back(r0);
  for (int f : cls[white])
    if (f != r0) col.region_face.push_back(f);
  col.face_region.assign(nf, -1);
  for (std::size_t i = 0; i < col.region_face.size(); ++i)
    col.face_region[col.region_face[i]] = static_cast<int>(i);

  for (int x = 0; x < n; ++x) {
    const int b = pd.crossings[x][1], d = pd.crossings[x][3];
    CrossingInfo ci;
    ci.white_even = col.face_color[fs.face_of[x][0]] == Color::White;
    int fa = ci.white_even ? fs.face_of[x][0] : fs.face_of[x][1];
    int fb = ci.white_even ? fs.face_of[x][2] : fs.face_of[x][3];
    if (fa == fb)
      throw NugatoryCrossingError("crossing " + std::to_string(x + 1) + " is nugatory",
                                 static_cast<std::size_t>(x));
    ci.region_a = col.face_region[fa];
    ci.region_b = col.face_region[fb];
    ci.eta = conv.eta_sign * (ci.white_even ? -1 : 1);
    // Over-strand direction decides whether the strands are parallel along
    // the black band.
    const bool over_d_to_b = b == pd.next(d);
    const bool parallel = ci.white_even ? over_d_to_b : !over_d_to_b;
    ci.type_ii = parallel == conv.parallel_is_type_ii;
    col.crossings.push_back(ci);
  }
  return col;
}

GoeritzData goeritz(const PDCode& pd, const GoeritzConvention& conv) {
  GoeritzData gd;
  if (pd.size() == 0) return gd;  // 0x0 matrices, mu = 0

  FaceSet fs = faces(pd);
  Coloring col = checkerboard(pd, fs, conv);
  const std::size_t m = col.region_face.size();
  gd.full = IntMatrix(m, m);
  for (const CrossingInfo& ci : col.crossings) {
    gd.full(ci.region_a, ci.region_b) -= ci.eta;
    gd.full(ci.region_b, ci.region_a) -= ci.eta;
    gd.eta.push_back(ci.eta);
    gd.type_ii.push_back(ci.type_ii);
    if (ci.type_ii) gd.mu += ci.eta;
  }
  for (std::size_t i = 0; i < m; ++i) {
    exact::Integer s = 0;
    for (std::size_t k = 0; k < m; ++k)
      if (k != i) s += gd.full(i, k);
    gd.full(i, i) = -s;
  }
  gd.reduced = IntMatrix(m - 1, m - 1);
  for (std::size_t i = 1; i < m; ++i)
    for (std::size_t j = 1; j < m; ++j) gd.reduced(i - 1, j - 1) = gd.full(i, j);
  return gd;
}

int signature_via_goeritz(const GoeritzData& gd) { return exact::signature(gd.reduced) - gd.mu; }

Calibration calibrate(const std::vector<CalibrationSample>& samples) {
  const GoeritzConvention order[] = {kCalibratedConvention, {1, true}, {-1, false}, {1, false}};
  Calibration best;
  bool first = true;
  for (const auto& conv : order) {
    std::size_t hits = 0;
    std::vector<std::string> misses;
    for (const auto& s : samples) {
      bool ok = false;
      try {
        ok = signature_via_goeritz(goeritz(s.pd, conv)) == s.signature;
      } catch (const std::exception&) {
        ok = false;
      }
      if (ok)
        ++hits;
      else
        misses.push_back(s.name);
    }
    best.trials.emplace_back(conv, hits);
    if (first || hits > best.matches) {
      best.convention = conv;
      best.matches = hits;
      best.mismatches = std::move(misses);
      first = false;
    }
  }
  best.total = samples.size();
  return best;
}

std::string matrix_csv(const IntMatrix& m) {
  std::string out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) out += ',';
      out += m(i, j).get_str();
    }
    out += '\n';
  }
  return out;
}

}  // namespace gamma4::planar
