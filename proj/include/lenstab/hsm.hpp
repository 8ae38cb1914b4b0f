#pragma once
// HOMFLYPT skein module evaluation in the solid torus.
//
// The module over Z[v^{±1}, z^{±1}] is free on products of the basis knots
// t_k (the unknotted-in-T curve winding k times around the axis, k != 0);
// the empty product is the unit.  A diagram is reduced recursively: scan the
// components from basepoints chosen on arcs bordering each component's own
// outer region, switch or smooth the first crossing whose first visit passes
// over, and read off winding numbers once every component is totally
// ascending.  The basepoint choice matters: an ascending component whose
// closure jump sits next to the outer region can slide that jump onto the
// boundary wall, so its isotopy class is determined by the winding alone and
// the component reduces to t_k.

#include <cstdint>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "diagram.hpp"
#include "laurent.hpp"
#include "moves.hpp"

namespace lenstab {

// basis element: sorted (k, power) factors t_k^power; empty = unit
using HsmMono = std::vector<std::pair<int, int>>;

struct HsmValue {
  std::map<HsmMono, LaurentVZ> terms;

  void add(const HsmMono& m, const LaurentVZ& c) {
    LaurentVZ& t = terms[m];
    t += c;
    if (t.is_zero()) terms.erase(m);
  }

  bool operator==(const HsmValue& o) const { return terms == o.terms; }
  bool operator!=(const HsmValue& o) const { return terms != o.terms; }
  bool operator<(const HsmValue& o) const { return terms < o.terms; }

  HsmValue& operator+=(const HsmValue& o) {
    for (auto& [m, c] : o.terms) add(m, c);
    return *this;
  }
  friend HsmValue operator*(const HsmValue& a, const HsmValue& b) {
    HsmValue r;
    for (auto& [m1, c1] : a.terms)
      for (auto& [m2, c2] : b.terms) {
        std::map<int, int> fac(m1.begin(), m1.end());
        for (auto& [k, p] : m2) fac[k] += p;
        r.add(HsmMono(fac.begin(), fac.end()), c1 * c2);
      }
    return r;
  }
  HsmValue& operator*=(const LaurentVZ& c) {
    for (auto& [m, t] : terms) t *= c;
    return *this;
  }

  // t_k -> t_{-k}: value of the orientation-reversed link
  HsmValue reversed() const {
    HsmValue r;
    for (auto& [m, c] : terms) {
      HsmMono rm;
      for (auto it = m.rbegin(); it != m.rend(); ++it) rm.push_back({-it->first, it->second});
      r.terms[std::move(rm)] = c;
    }
    return r;
  }

  // v -> -v^-1 applied to every coefficient
  HsmValue bar() const {
    HsmValue r;
    for (auto& [m, c] : terms) r.terms[m] = c.bar();
    return r;
  }

  std::string str() const {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [m, c] : terms) {
      if (!first) os << " + ";
      os << "(" << c.str() << ")";
      for (auto& [k, p] : m) {
        os << " t_{" << k << "}";
        if (p > 1) os << "^" << p;
      }
      first = false;
    }
    return os.str();
  }
};

namespace hsm_detail {

struct UF {
  std::vector<int> p;
  explicit UF(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) {
    while (p[x] != x) x = p[x] = p[p[x]];
    return x;
  }
  void join(int a, int b) { p[find(a)] = find(b); }
};

// oriented marked connected diagram
struct OState {
  Diagram d;
  std::vector<uint8_t> out;  // dart departs its crossing along the orientation
};

// the departing dart g at cr with the other departing dart at ccw(g)
inline int smoothing_base(const OState& st, int cr) {
  for (int s = 0; s < 4; s++) {
    int g = dart_make(cr, s);
    if (st.out[g] && st.out[dart_ccw(g)]) return g;
  }
  throw std::logic_error("inconsistent orientation at crossing");
}

struct SmoothResult {
  std::vector<OState> pieces;  // connected marked sub-diagrams, split apart
  std::vector<int> loops;      // windings of crossingless loops that vanish
};

// oriented smoothing at cr.  The diagram may fall apart: each connected
// piece keeps its own projection and learns which of its regions hold the
// axis and outer punctures; crossingless loops are reported by winding.
inline SmoothResult smooth_split(const OState& st, const Faces& f, const std::vector<int>& wgt,
                                 int cr) {
  const Diagram& d = st.d;
  int w = smoothing_base(st, cr);
  int w1 = dart_ccw(w), w2 = dart_opp(w), w3 = dart_cw(w);
  SmoothResult res;
  bool loop_a = d.theta[w] == w3, loop_b = d.theta[w1] == w2;
  bool loop_c = d.theta[w] == w2 && d.theta[w1] == w3;
  if (loop_a) res.loops.push_back(wgt[w]);
  if (loop_b) res.loops.push_back(wgt[w1]);
  if (loop_c) res.loops.push_back(wgt[w] + wgt[w1]);
  if (d.n == 1) return res;

  // rewire the strands through the smoothing junction
  std::vector<int> nt(d.darts(), -1);
  auto junction = [&](int in) { return in == w2 ? w1 : w; };
  for (int g = 0; g < d.darts(); g++) {
    if (dart_cr(g) == cr || !st.out[g]) continue;
    int p = d.theta[g];
    while (dart_cr(p) == cr) p = d.theta[junction(p)];
    nt[g] = p;
    nt[p] = g;
  }

  // post-surgery regions as merged classes of the old faces: the two channel
  // corners merge, and each vanished loop merges the regions it separated
  UF fuf((int)f.dartss.size());
  fuf.join(f.face_of[w], f.face_of[w2]);
  if (loop_a) fuf.join(f.face_of[w], f.face_of[w3]);
  if (loop_b) fuf.join(f.face_of[w1], f.face_of[w2]);
  if (loop_c) {
    fuf.join(f.face_of[w], f.face_of[w2]);
    fuf.join(f.face_of[w1], f.face_of[w3]);
  }

  UF cuf(d.n);
  for (int g = 0; g < d.darts(); g++)
    if (nt[g] >= 0) cuf.join(dart_cr(g), dart_cr(nt[g]));
  std::vector<int> roots;
  for (int c = 0; c < d.n; c++) {
    if (c == cr) continue;
    int r = cuf.find(c);
    bool fresh = true;
    for (int x : roots) fresh &= x != r;
    if (fresh) roots.push_back(r);
  }

  int F0 = f.face_of[d.zero_dart], FI = f.face_of[d.inf_dart];
  for (int root : roots) {
    // erasing the other pieces merges the regions across their edges
    UF pf = fuf;
    for (int g = 0; g < d.darts(); g++)
      if (nt[g] >= 0 && st.out[g] && cuf.find(dart_cr(g)) != root)
        pf.join(f.face_of[g], f.face_of[nt[g]]);
    int cls0 = pf.find(F0), clsi = pf.find(FI);

    std::vector<int> nc(d.n, -1);
    int m = 0;
    for (int c = 0; c < d.n; c++)
      if (c != cr && cuf.find(c) == root) nc[c] = m++;
    OState ps;
    ps.d.n = m;
    ps.d.theta.assign(4 * m, -1);
    ps.d.over02.resize(m);
    ps.out.assign(4 * m, 0);
    auto remap = [&](int g) { return dart_make(nc[dart_cr(g)], dart_slot(g)); };
    for (int c = 0; c < d.n; c++)
      if (nc[c] >= 0) ps.d.over02[nc[c]] = d.over02[c];
    for (int g = 0; g < d.darts(); g++) {
      if (nc[dart_cr(g)] < 0) continue;
      ps.d.theta[remap(g)] = remap(nt[g]);
      ps.out[remap(g)] = st.out[g];
      if (ps.d.zero_dart < 0 && pf.find(f.face_of[g]) == cls0) ps.d.zero_dart = remap(g);
      if (ps.d.inf_dart < 0 && pf.find(f.face_of[g]) == clsi) ps.d.inf_dart = remap(g);
    }
    if (ps.d.zero_dart < 0 || ps.d.inf_dart < 0) throw std::logic_error("piece lost a mark");
    res.pieces.push_back(std::move(ps));
  }
  return res;
}

inline HsmValue eval(OState st) {
  HsmValue acc;
  LaurentVZ coeff(1);
  for (;;) {
    Faces f = trace_faces(st.d);
    int nd = st.d.darts();
    std::vector<int> wgt(nd, 0);
    for (const DualStep& s : dual_path(st.d, f, st.out)) wgt[s.tail_dart] += s.dir;

    std::vector<int> comp(nd, -1), starts;
    for (int g0 = 0; g0 < nd; g0++) {
      if (!st.out[g0] || comp[g0] >= 0) continue;
      int cid = (int)starts.size(), g = g0;
      starts.push_back(g0);
      do {
        comp[g] = cid;
        int a = st.d.theta[g];
        comp[a] = cid;
        g = dart_opp(a);
      } while (g != g0);
    }
    int ncomp = (int)starts.size();

    // per-component winding
    std::vector<int> cwind(ncomp, 0);
    for (int g = 0; g < nd; g++)
      if (st.out[g]) cwind[comp[g]] += wgt[g];

    // basepoint: least departing dart on an arc that borders the right
    // puncture region of the component drawn alone.  The basis spiral t_k
    // (k > 0) ascends from an arc next to the outer region; its reverse
    // t_{-k} ascends from an arc next to the axis region.
    std::vector<int> base(ncomp, -1);
    for (int cid = 0; cid < ncomp; cid++) {
      UF uf((int)f.dartss.size());
      for (int g = 0; g < nd; g++)
        if (st.out[g] && comp[g] != cid) uf.join(f.face_of[g], f.face_of[st.d.theta[g]]);
      int cls = uf.find(f.face_of[cwind[cid] < 0 ? st.d.zero_dart : st.d.inf_dart]);
      for (int g = 0; g < nd && base[cid] < 0; g++)
        if (st.out[g] && comp[g] == cid &&
            (uf.find(f.face_of[g]) == cls || uf.find(f.face_of[st.d.theta[g]]) == cls))
          base[cid] = g;
      if (base[cid] < 0) throw std::logic_error("no outer basepoint");
    }

    int pivot = -1;
    {
      std::vector<uint8_t> seen(st.d.n, 0);
      for (int cid = 0; cid < ncomp && pivot < 0; cid++) {
        int g = base[cid];
        do {
          int a = st.d.theta[g];
          int cr = dart_cr(a);
          if (!seen[cr]) {
            seen[cr] = 1;
            if (dart_over(st.d, a)) {
              pivot = cr;
              break;
            }
          }
          g = dart_opp(a);
        } while (g != base[cid]);
      }
    }

    if (pivot < 0) {
      // totally ascending: component of winding k is t_k; winding 0 is a
      // split affine unknot contributing delta_h
      std::map<int, int> pend;
      for (int cid = 0; cid < ncomp; cid++) {
        int k = 0, g = starts[cid];
        do {
          k += wgt[g];
          g = dart_opp(st.d.theta[g]);
        } while (g != starts[cid]);
        if (k == 0)
          coeff *= LaurentVZ::delta_h();
        else
          pend[k]++;
      }
      if (!coeff.is_zero()) acc.add(HsmMono(pend.begin(), pend.end()), coeff);
      return acc;
    }

    int w = smoothing_base(st, pivot);
    // positive crossing: the under strand departs one slot ccw of the over
    bool positive = dart_over(st.d, w);
    {
      LaurentVZ c0 = coeff;
      c0.mulmono(positive ? 1 : -1, positive ? 1 : -1, 1);
      SmoothResult sr = smooth_split(st, f, wgt, pivot);
      HsmValue prod;
      {
        std::map<int, int> fac;
        for (int k : sr.loops) {
          if (k == 0)
            c0 *= LaurentVZ::delta_h();
          else
            fac[k]++;
        }
        prod.add(HsmMono(fac.begin(), fac.end()), c0);
      }
      for (OState& ps : sr.pieces) prod = prod * eval(std::move(ps));
      acc += prod;
    }
    // switched crossing, handled iteratively
    coeff.mulmono(1, positive ? 2 : -2, 0);
    st.d.over02[pivot] ^= 1;
  }
}

}  // namespace hsm_detail

// evaluation of an oriented knot diagram; reverse flips the orientation
inline HsmValue hsm_T_oriented(const Diagram& d, bool reverse = false) {
  HsmValue acc;
  if (d.n == 0) {
    if (d.n0_core)
      acc.add({{reverse ? -1 : 1, 1}}, LaurentVZ(1));
    else
      acc.add({}, LaurentVZ::delta_h());
    return acc;
  }
  hsm_detail::OState st;
  st.d = d;
  st.out = departing_flags(d);
  if (reverse)
    for (auto& fl : st.out) fl ^= 1;
  return hsm_detail::eval(std::move(st));
}

// orientation-independent key: the lesser of the two oriented values
inline HsmValue hsm_T(const Diagram& d) {
  HsmValue a = hsm_T_oriented(d, false);
  HsmValue b = hsm_T_oriented(d, true);
  return b < a ? b : a;
}

inline HsmValue hsm_T(const GaussCode& c) { return hsm_T(from_code(c)); }

// In L(p, q) with p > 2(n+1) the basis range -p/2 < k <= p/2 already covers
// every winding a diagram with n crossings can reach, so the evaluation
// coincides with the solid-torus one.
inline HsmValue hsm_lens_large_p(const GaussCode& c, int p) {
  int n = c.crossings();
  if (p <= 2 * (n + 1)) throw std::invalid_argument("p too small for direct evaluation");
  HsmValue v = hsm_T(c);
  for (auto& [m, coef] : v.terms)
    for (auto& [k, pw] : m)
      if (2 * k <= -p || 2 * k > p) throw std::logic_error("winding outside lens basis");
  return v;
}

}  // namespace lenstab
