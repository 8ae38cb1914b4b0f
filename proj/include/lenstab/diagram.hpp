#pragma once
// Knot diagrams in the annulus as 4-valent combinatorial maps.
//
// Darts 4c..4c+3 are the edge ends at crossing c in counterclockwise order.
// Slot pairs (0,2) and (1,3) are the two strands through the crossing;
// over02[c] says whether the (0,2) strand is the over strand.  theta pairs
// each dart with the other end of its edge.  The punctured region (holding
// the annulus axis) and the outer region are tracked by one dart each.

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "code.hpp"

namespace lenstab {

inline int dart_cr(int d) { return d >> 2; }
inline int dart_slot(int d) { return d & 3; }
inline int dart_make(int c, int s) { return 4 * c + s; }
inline int dart_ccw(int d) { return (d & ~3) | ((d + 1) & 3); }
inline int dart_cw(int d) { return (d & ~3) | ((d + 3) & 3); }
inline int dart_opp(int d) { return (d & ~3) | ((d + 2) & 3); }

struct Diagram {
  int n = 0;
  std::vector<int> theta;        // size 4n
  std::vector<uint8_t> over02;   // size n
  int zero_dart = -1, inf_dart = -1;  // face marks; -1 when untracked
  bool n0_core = false;          // n == 0 only: core circle vs null-homotopic circle

  int darts() const { return 4 * n; }
};

inline Diagram affine_unknot_diagram() { return Diagram{}; }

inline Diagram core_unknot_diagram() {
  Diagram d;
  d.n0_core = true;
  return d;
}

struct Faces {
  std::vector<int> face_of;            // dart -> face id
  std::vector<std::vector<int>> dartss;  // face id -> darts in boundary order
  int count() const { return (int)dartss.size(); }
};

// Face walk: cross the edge, then turn one slot clockwise.
inline int face_next(const Diagram& d, int dart) { return dart_cw(d.theta[dart]); }

inline Faces trace_faces(const Diagram& d) {
  Faces f;
  f.face_of.assign(d.darts(), -1);
  for (int s = 0; s < d.darts(); s++) {
    if (f.face_of[s] >= 0) continue;
    int id = f.count();
    f.dartss.push_back({});
    int cur = s;
    do {
      f.face_of[cur] = id;
      f.dartss[id].push_back(cur);
      cur = face_next(d, cur);
    } while (cur != s);
  }
  return f;
}

inline bool diagram_realizable(const Diagram& d) {
  if (d.n == 0) return true;
  Faces f = trace_faces(d);
  return f.count() == d.n + 2;
}

// Fast check that a signed word embeds in the plane (face count = n + 2).
inline bool word_realizable(const std::vector<int>& word, const std::vector<int>& signs) {
  int n = (int)signs.size();
  if (n == 0) return true;
  // in/out darts per position, theta built inline
  int theta[56];  // supports n <= 14
  int prev_out = -1, first_in = -1;
  for (int i = 0; i < 2 * n; i++) {
    int l = word[i];
    int k = (l > 0 ? l : -l) - 1;
    int in, out;
    if (l > 0) {
      in = 4 * k + 0;
      out = 4 * k + 2;
    } else if (signs[k] > 0) {
      in = 4 * k + 1;
      out = 4 * k + 3;
    } else {
      in = 4 * k + 3;
      out = 4 * k + 1;
    }
    if (i == 0)
      first_in = in;
    else {
      theta[prev_out] = in;
      theta[in] = prev_out;
    }
    prev_out = out;
  }
  theta[prev_out] = first_in;
  theta[first_in] = prev_out;

  int seen[56];
  for (int i = 0; i < 4 * n; i++) seen[i] = 0;
  int faces = 0;
  for (int s = 0; s < 4 * n; s++) {
    if (seen[s]) continue;
    faces++;
    int cur = s;
    do {
      seen[cur] = 1;
      cur = (theta[cur] & ~3) | ((theta[cur] + 3) & 3);
    } while (cur != s);
  }
  return faces == n + 2;
}

// Builds the map for a code, ignoring regions.  Returns in/out darts per word
// position through the optional arrays.
inline Diagram map_from_word(const std::vector<int>& word, const std::vector<int>& signs,
                             std::vector<int>* out_darts = nullptr,
                             std::vector<int>* in_darts = nullptr) {
  int n = (int)signs.size();
  Diagram d;
  d.n = n;
  d.theta.assign(4 * n, -1);
  d.over02.assign(n, 1);
  std::vector<int> outs(2 * n), ins(2 * n);
  for (int i = 0; i < 2 * n; i++) {
    int l = word[i];
    int k = (l > 0 ? l : -l) - 1;
    if (l > 0) {
      ins[i] = 4 * k + 0;
      outs[i] = 4 * k + 2;
    } else if (signs[k] > 0) {
      ins[i] = 4 * k + 1;
      outs[i] = 4 * k + 3;
    } else {
      ins[i] = 4 * k + 3;
      outs[i] = 4 * k + 1;
    }
  }
  for (int i = 0; i < 2 * n; i++) {
    int j = (i + 1) % (2 * n);
    d.theta[outs[i]] = ins[j];
    d.theta[ins[j]] = outs[i];
  }
  if (out_darts) *out_darts = outs;
  if (in_darts) *in_darts = ins;
  return d;
}

// Arc ids per dart for the traversal that built the map: arc i joins
// position i to position i+1.
inline std::vector<int> arcs_from_positions(int n, const std::vector<int>& outs,
                                            const std::vector<int>& ins) {
  std::vector<int> arc_of(4 * n, -1);
  for (int i = 0; i < 2 * n; i++) {
    int j = (i + 1) % (2 * n);
    arc_of[outs[i]] = i;
    arc_of[ins[j]] = i;
  }
  return arc_of;
}

inline std::vector<int> face_arcs(const Faces& f, int face, const std::vector<int>& arc_of) {
  std::vector<int> arcs;
  for (int dart : f.dartss[face]) arcs.push_back(arc_of[dart]);
  std::sort(arcs.begin(), arcs.end());
  arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());
  return arcs;
}

// Builds a diagram from a code; throws if the code is unrealizable or a
// declared region matches no face.
inline Diagram from_code(const GaussCode& c) {
  if (c.crossings() == 0) {
    if (!c.extended()) throw std::invalid_argument("crossingless code must be extended");
    Diagram d;
    d.n0_core = (c.inf_region == std::vector<int>{1});
    return d;
  }
  std::vector<int> outs, ins;
  Diagram d = map_from_word(c.word, c.signs, &outs, &ins);
  Faces f = trace_faces(d);
  if (f.count() != d.n + 2) throw std::invalid_argument("code not realizable");
  if (c.extended()) {
    std::vector<int> arc_of = arcs_from_positions(d.n, outs, ins);
    int zf = -1, inff = -1;
    for (int i = 0; i < f.count(); i++) {
      std::vector<int> fa = face_arcs(f, i, arc_of);
      if (zf < 0 && fa == c.zero_region) zf = i;
      if (fa == c.inf_region) inff = i;
    }
    if (zf < 0 || inff < 0) throw std::invalid_argument("region list does not match a face");
    d.zero_dart = f.dartss[zf][0];
    d.inf_dart = f.dartss[inff][0];
  }
  return d;
}

// Reads the code off a diagram starting with the passage departing through
// dart p0 (any dart; using an "arriving" dart traverses the knot backwards).
inline GaussCode to_code(const Diagram& d, int p0) {
  int n = d.n;
  GaussCode c;
  if (n == 0) return d.n0_core ? core_unknot_code() : affine_unknot_code();
  c.signs.assign(n, 0);
  std::vector<int> label(n, 0);
  std::vector<int> over_arrival(n, -1), under_arrival(n, -1);
  std::vector<int> arc_of(4 * n, -1);
  int next_label = 1;
  int p = p0;
  for (int t = 0; t < 2 * n; t++) {
    int cr = dart_cr(p);
    bool on02 = (dart_slot(p) & 1) == 0;
    bool over = on02 == (d.over02[cr] != 0);
    if (!label[cr]) label[cr] = next_label++;
    c.word.push_back(over ? label[cr] : -label[cr]);
    int arrival = dart_opp(p);
    if (over)
      over_arrival[cr] = arrival;
    else
      under_arrival[cr] = arrival;
    arc_of[p] = t;
    arc_of[d.theta[p]] = t;
    p = dart_opp(d.theta[p]);
  }
  if (p != p0) throw std::logic_error("diagram traversal is not a single knot");
  for (int cr = 0; cr < n; cr++) {
    int diff = (dart_slot(under_arrival[cr]) - dart_slot(over_arrival[cr])) & 3;
    c.signs[label[cr] - 1] = (diff == 1) ? 1 : -1;
  }
  if (d.zero_dart >= 0) {
    Faces f = trace_faces(d);
    c.zero_region = face_arcs(f, f.face_of[d.zero_dart], arc_of);
    c.inf_region = face_arcs(f, f.face_of[d.inf_dart], arc_of);
  }
  return c;
}

// All codes of the diagram over start passage and direction choices.
inline std::vector<GaussCode> code_orbit(const Diagram& d) {
  std::vector<GaussCode> orbit;
  if (d.n == 0) {
    orbit.push_back(to_code(d, 0));
    return orbit;
  }
  for (int p = 0; p < d.darts(); p++) orbit.push_back(to_code(d, p));
  return orbit;
}

inline GaussCode canonical_code(const Diagram& d) {
  if (d.n == 0) return to_code(d, 0);
  GaussCode best = to_code(d, 0);
  for (int p = 1; p < d.darts(); p++) {
    GaussCode c = to_code(d, p);
    if (code_less(c, best)) best = c;
  }
  return best;
}

inline GaussCode canonicalize(const GaussCode& c) { return canonical_code(from_code(c)); }

// Shortest dual path between the marked faces as (tail dart, step direction)
// per crossed edge: +1 when stepping out of the tail dart's face.
struct DualStep {
  int tail_dart;  // the traversal-direction departing dart of the crossed edge
  int dir;        // +1 or -1
};

// Orientation data for winding: which dart of each edge is the departing one
// under the traversal from dart p0.
inline std::vector<uint8_t> departing_flags(const Diagram& d, int p0 = 0) {
  std::vector<uint8_t> dep(d.darts(), 0);
  int p = p0;
  for (int t = 0; t < 2 * d.n; t++) {
    dep[p] = 1;
    p = dart_opp(d.theta[p]);
  }
  return dep;
}

inline std::vector<DualStep> dual_path(const Diagram& d, const Faces& f,
                                       const std::vector<uint8_t>& dep) {
  int zf = f.face_of[d.zero_dart], inff = f.face_of[d.inf_dart];
  std::vector<int> prev_face(f.count(), -1), prev_dart(f.count(), -1);
  std::vector<int> q{zf};
  prev_face[zf] = zf;
  for (size_t h = 0; h < q.size() && prev_face[inff] < 0; h++) {
    int cur = q[h];
    for (int dart : f.dartss[cur]) {
      int other = f.face_of[d.theta[dart]];
      if (prev_face[other] < 0) {
        prev_face[other] = cur;
        prev_dart[other] = dart;
        q.push_back(other);
      }
    }
  }
  std::vector<DualStep> path;
  if (zf == inff) return path;
  if (prev_face[inff] < 0) throw std::logic_error("dual graph disconnected");
  for (int cur = inff; cur != zf; cur = prev_face[cur]) {
    int dart = prev_dart[cur];  // dart on the side of prev_face[cur]
    DualStep s;
    if (dep[dart]) {
      s.tail_dart = dart;
      s.dir = 1;
    } else {
      s.tail_dart = d.theta[dart];
      s.dir = -1;
    }
    path.push_back(s);
  }
  return path;
}

// Winding number of the knot around the axis, for the traversal from dart 0.
// Sign is a global convention; the core circle reports +1.
inline int winding(const Diagram& d) {
  if (d.n == 0) return d.n0_core ? 1 : 0;
  if (d.zero_dart < 0) throw std::invalid_argument("winding needs marked regions");
  Faces f = trace_faces(d);
  std::vector<uint8_t> dep = departing_flags(d);
  int w = 0;
  for (const DualStep& s : dual_path(d, f, dep)) w += s.dir;
  return w;
}

inline RegionClass classify_regions(const Diagram& d) {
  if (d.n == 0) return d.n0_core ? RegionClass::UnknotException : RegionClass::Affine;
  if (d.zero_dart < 0) throw std::invalid_argument("classify_regions needs marked regions");
  Faces f = trace_faces(d);
  int zf = f.face_of[d.zero_dart], inff = f.face_of[d.inf_dart];
  if (zf == inff) return RegionClass::Affine;
  for (int dart : f.dartss[zf])
    if (f.face_of[d.theta[dart]] == inff) return RegionClass::Adjacent;
  return RegionClass::Proper;
}

inline int writhe(const Diagram& d) {
  if (d.n == 0) return 0;
  GaussCode c = to_code(d, 0);
  int w = 0;
  for (int s : c.signs) w += s;
  return w;
}

// ---- global transforms ----

// Reflection through the projection annulus (over/under swap).
inline Diagram mirror_diagram(const Diagram& d) {
  Diagram r = d;
  for (auto& b : r.over02) b = !b;
  return r;
}

// Reflection of the projection plane (reverses all rotations).
inline Diagram reflect_diagram(const Diagram& d) {
  Diagram r;
  r.n = d.n;
  r.n0_core = d.n0_core;
  r.over02 = d.over02;
  r.theta.assign(d.darts(), -1);
  auto m = [](int dart) { return (dart & ~3) | ((4 - (dart & 3)) & 3); };
  for (int dart = 0; dart < d.darts(); dart++) r.theta[m(dart)] = m(d.theta[dart]);
  // a dart stands for the corner on its ccw side; the reflected corner
  // belongs to the dart one slot clockwise of the reflected dart
  if (d.zero_dart >= 0) r.zero_dart = dart_cw(m(d.zero_dart));
  if (d.inf_dart >= 0) r.inf_dart = dart_cw(m(d.inf_dart));
  return r;
}

// Rotation of the solid torus that turns each meridian disk by pi: swaps the
// marked regions, reflects the projection and swaps over/under.  An isotopy
// of the embedded solid torus, so an accelerator move.
inline Diagram meridional_rotation(const Diagram& d) {
  Diagram r = reflect_diagram(mirror_diagram(d));
  if (d.n == 0) {
    // both crossingless unknots are symmetric under the rotation
    return r;
  }
  std::swap(r.zero_dart, r.inf_dart);
  return r;
}

// Rotation of the solid torus by pi around an axis in the projection plane.
// A homeomorphism but not an isotopy; kept out of the default move set.
inline Diagram flip_diagram(const Diagram& d) { return reflect_diagram(mirror_diagram(d)); }

}  // namespace lenstab
