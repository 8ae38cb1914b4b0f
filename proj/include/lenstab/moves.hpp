#pragma once
// Diagram surgeries: Reidemeister moves that respect the two marked regions
// (the axis and infinity punctures of the annulus).  A move is emitted only
// when the isotopy it represents never sweeps a strand across a puncture.

#include <functional>
#include <vector>

#include "diagram.hpp"

namespace lenstab {

using MoveSink = std::function<void(const Diagram&)>;

inline int slot_add(int dart, int k) { return (dart & ~3) | ((dart + k) & 3); }

inline bool dart_over(const Diagram& d, int dart) {
  return ((dart_slot(dart) & 1) == 0) == (d.over02[dart_cr(dart)] != 0);
}

// Remove the crossings flagged in `del`; thr pairs each deleted crossing's
// darts along the surviving strand.  Marks must already sit on kept crossings.
inline Diagram remove_crossings(const Diagram& d, const std::vector<uint8_t>& del,
                                const std::vector<int>& thr) {
  std::vector<int> nc(d.n, -1);
  int m = 0;
  for (int c = 0; c < d.n; c++)
    if (!del[c]) nc[c] = m++;
  Diagram r;
  r.n = m;
  r.over02.resize(m);
  r.theta.assign(4 * m, -1);
  for (int c = 0; c < d.n; c++)
    if (!del[c]) r.over02[nc[c]] = d.over02[c];
  auto remap = [&](int dd) { return dart_make(nc[dart_cr(dd)], dart_slot(dd)); };
  for (int dd = 0; dd < d.darts(); dd++) {
    if (del[dart_cr(dd)]) continue;
    int p = d.theta[dd];
    while (del[dart_cr(p)]) p = d.theta[thr[p]];
    r.theta[remap(dd)] = remap(p);
  }
  r.zero_dart = remap(d.zero_dart);
  r.inf_dart = remap(d.inf_dart);
  return r;
}

// Move each mark off the crossings in `del`, staying inside its face (or one
// of the faces merging with it).  Fails when no anchor survives.
inline bool reanchor_marks(Diagram& d, const Faces& f, const std::vector<uint8_t>& del,
                           const std::vector<int>& merge_faces = {}) {
  for (int* mk : {&d.zero_dart, &d.inf_dart}) {
    if (*mk < 0 || !del[dart_cr(*mk)]) continue;
    int fid = f.face_of[*mk];
    bool in_group = false;
    for (int g : merge_faces) in_group |= g == fid;
    bool ok = false;
    for (int g : f.dartss[fid])
      if (!del[dart_cr(g)]) {
        *mk = g;
        ok = true;
        break;
      }
    if (!ok && in_group)
      for (int g2 : merge_faces) {
        for (int g : f.dartss[g2])
          if (!del[dart_cr(g)]) {
            *mk = g;
            ok = true;
            break;
          }
        if (ok) break;
      }
    if (!ok) return false;
  }
  return true;
}

inline bool face_marked(const Diagram& d, const Faces& f, int fid) {
  return f.face_of[d.zero_dart] == fid || f.face_of[d.inf_dart] == fid;
}

// The crossingless diagram a one- or two-crossing unknot collapses to.
inline Diagram collapsed_unknot(const Diagram& d) {
  return winding(d) != 0 ? core_unknot_diagram() : affine_unknot_diagram();
}

// ---- kink removal ----
inline void r1_remove_moves(const Diagram& d, const Faces& f, const MoveSink& out) {
  for (int fid = 0; fid < f.count(); fid++) {
    if (f.dartss[fid].size() != 1) continue;
    int g = f.dartss[fid][0];
    int c = dart_cr(g);
    if (face_marked(d, f, fid)) continue;  // puncture inside the swept loop
    if (d.n == 1) {
      out(collapsed_unknot(d));
      continue;
    }
    Diagram dd = d;
    std::vector<uint8_t> del(d.n, 0);
    del[c] = 1;
    if (!reanchor_marks(dd, f, del)) continue;
    std::vector<int> thr(d.darts(), -1);
    thr[slot_add(g, 2)] = slot_add(g, 3);
    thr[slot_add(g, 3)] = slot_add(g, 2);
    thr[g] = slot_add(g, 1);  // the loop edge, chased through
    thr[slot_add(g, 1)] = g;
    out(remove_crossings(dd, del, thr));
  }
}

// ---- kink insertion ----
inline void r1_add_moves(const Diagram& d, int max_n, const MoveSink& out) {
  if (d.n + 1 > max_n) return;
  if (d.n == 0) {
    // collapse target in reverse: all one-crossing kinks of matching winding
    int want = d.n0_core ? 1 : 0;
    for (int sg : {1, -1}) {
      Diagram k = map_from_word({1, -1}, {sg});
      Faces fk = trace_faces(k);
      for (int f0 = 0; f0 < fk.count(); f0++)
        for (int f1 = 0; f1 < fk.count(); f1++) {
          k.zero_dart = fk.dartss[f0][0];
          k.inf_dart = fk.dartss[f1][0];
          if (std::abs(winding(k)) == want) out(k);
        }
    }
    return;
  }
  for (int g = 0; g < d.darts(); g++)
    for (int m = 0; m < 4; m++)
      for (int o = 0; o < 2; o++) {
        Diagram r = d;
        int c = r.n++;
        r.theta.resize(4 * r.n);
        r.over02.push_back((uint8_t)o);
        int h = d.theta[g];
        // strand: g -> slot m+2, loop through (m, m+1), out slot m+3 -> h
        r.theta[g] = dart_make(c, (m + 2) & 3);
        r.theta[dart_make(c, (m + 2) & 3)] = g;
        r.theta[h] = dart_make(c, (m + 3) & 3);
        r.theta[dart_make(c, (m + 3) & 3)] = h;
        r.theta[dart_make(c, m)] = dart_make(c, (m + 1) & 3);
        r.theta[dart_make(c, (m + 1) & 3)] = dart_make(c, m);
        out(r);
      }
}

// ---- bigon removal ----
inline void r2_remove_moves(const Diagram& d, const Faces& f, const MoveSink& out) {
  for (int fid = 0; fid < f.count(); fid++) {
    if (f.dartss[fid].size() != 2) continue;
    int g1 = f.dartss[fid][0], g2 = f.dartss[fid][1];
    int c1 = dart_cr(g1), c2 = dart_cr(g2);
    if (c1 == c2) continue;
    // one strand must run over the other at both crossings
    if (dart_over(d, g1) != dart_over(d, d.theta[g1])) continue;
    if (face_marked(d, f, fid)) continue;  // puncture between the strands
    if (d.n == 2) {
      out(collapsed_unknot(d));
      continue;
    }
    Diagram dd = d;
    std::vector<uint8_t> del(d.n, 0);
    del[c1] = del[c2] = 1;
    // the corners opposite the bigon merge into one region
    int t1 = f.face_of[slot_add(g1, 2)], t2 = f.face_of[slot_add(g2, 2)];
    if (!reanchor_marks(dd, f, del, {t1, t2})) continue;
    std::vector<int> thr(d.darts(), -1);
    for (int c : {c1, c2})
      for (int s = 0; s < 4; s++) thr[dart_make(c, s)] = dart_opp(dart_make(c, s));
    out(remove_crossings(dd, del, thr));
  }
}

// ---- bigon insertion: push edge of g1 across edge of g2 through their face ----
inline void r2_add_moves(const Diagram& d, const Faces& f, int max_n, const MoveSink& out) {
  if (d.n == 0 || d.n + 2 > max_n) return;
  for (int fid = 0; fid < f.count(); fid++) {
    const std::vector<int>& cyc = f.dartss[fid];
    int len = (int)cyc.size();
    for (int i = 0; i < len; i++)
      for (int j = 0; j < len; j++) {
        if (i == j) continue;
        int g1 = cyc[i], g2 = cyc[j];
        if (g2 == d.theta[g1]) continue;  // same edge: not a bigon move
        for (int o = 0; o < 2; o++) {
          Diagram r = d;
          int p1 = r.n, p2 = r.n + 1;
          r.n += 2;
          r.theta.resize(4 * r.n);
          r.over02.push_back((uint8_t)o);
          r.over02.push_back((uint8_t)o);
          int h1 = d.theta[g1], h2 = d.theta[g2];
          auto link = [&](int a, int b) {
            r.theta[a] = b;
            r.theta[b] = a;
          };
          link(g1, dart_make(p1, 0));
          link(h1, dart_make(p2, 0));
          link(dart_make(p1, 2), dart_make(p2, 2));
          link(g2, dart_make(p2, 1));
          link(h2, dart_make(p1, 3));
          link(dart_make(p1, 1), dart_make(p2, 3));
          // a puncture in the split face can end up on either side of the
          // pushed finger: emit every placement
          int east = dart_make(p1, 3), west = dart_make(p2, 0);
          std::vector<int> zopts{r.zero_dart}, iopts{r.inf_dart};
          if (f.face_of[d.zero_dart] == fid) zopts = {east, west};
          if (f.face_of[d.inf_dart] == fid) iopts = {east, west};
          for (int z : zopts)
            for (int inf : iopts) {
              Diagram v = r;
              v.zero_dart = z;
              v.inf_dart = inf;
              out(v);
            }
          // when the face is unmarked the single variant above is the move
        }
      }
  }
}

// ---- triangle move ----
// The strand of edge t_i slides past the opposite crossing.  Relative to the
// sliding edge: at its two crossings the strand keeps all attachments except
// that the opposite crossing swaps positions with them along the other two
// strands.
inline void r3_moves(const Diagram& d, const Faces& f, const MoveSink& out) {
  for (int fid = 0; fid < f.count(); fid++) {
    if (f.dartss[fid].size() != 3) continue;
    const std::vector<int>& t = f.dartss[fid];
    if (dart_cr(t[0]) == dart_cr(t[1]) || dart_cr(t[1]) == dart_cr(t[2]) ||
        dart_cr(t[0]) == dart_cr(t[2]))
      continue;
    if (face_marked(d, f, fid)) continue;  // puncture inside the swept triangle
    for (int i = 0; i < 3; i++) {
      // slidable iff this strand is over both others, or under both
      if (dart_over(d, t[i]) != dart_over(d, d.theta[t[i]])) continue;
      int a1 = t[i], a2 = t[(i + 1) % 3], a3 = t[(i + 2) % 3];
      // attachment-point relabelling: three 4-cycles of slots, identity
      // elsewhere.  The sliding strand's crossings swap order along it, so
      // its external hookups trade sides too.
      std::vector<int> mu(d.darts());
      for (int x = 0; x < d.darts(); x++) mu[x] = x;
      mu[a1] = slot_add(a1, 2);
      mu[slot_add(a1, 2)] = slot_add(a2, 1);
      mu[slot_add(a2, 1)] = slot_add(a2, 3);
      mu[slot_add(a2, 3)] = a1;
      mu[slot_add(a1, 1)] = slot_add(a1, 3);
      mu[slot_add(a1, 3)] = a3;
      mu[a3] = slot_add(a3, 2);
      mu[slot_add(a3, 2)] = slot_add(a1, 1);
      mu[a2] = slot_add(a2, 2);
      mu[slot_add(a2, 2)] = slot_add(a3, 1);
      mu[slot_add(a3, 1)] = slot_add(a3, 3);
      mu[slot_add(a3, 3)] = a2;
      Diagram r = d;
      for (int x = 0; x < d.darts(); x++) r.theta[mu[x]] = mu[d.theta[x]];
      // every corner at the three crossings changes region; move each mark
      // to a surviving corner of the same region
      for (int* mk : {&r.zero_dart, &r.inf_dart}) {
        int m = *mk;
        if (m == slot_add(a1, 1) || m == slot_add(a3, 3)) *mk = a2;
        else if (m == slot_add(a1, 2)) *mk = slot_add(a2, 1);
        else if (m == slot_add(a1, 3) || m == slot_add(a2, 1)) *mk = a3;
        else if (m == slot_add(a2, 2)) *mk = slot_add(a3, 1);
        else if (m == slot_add(a2, 3) || m == slot_add(a3, 1)) *mk = a1;
        else if (m == slot_add(a3, 2)) *mk = slot_add(a1, 1);
      }
      out(r);
    }
  }
}

inline void move_neighbors(const Diagram& d, int max_n, const MoveSink& out) {
  if (d.n == 0) {
    r1_add_moves(d, max_n, out);
    return;
  }
  Faces f = trace_faces(d);
  r1_remove_moves(d, f, out);
  r2_remove_moves(d, f, out);
  r3_moves(d, f, out);
  r1_add_moves(d, max_n, out);
  r2_add_moves(d, f, max_n, out);
  out(meridional_rotation(d));  // accelerator: an isotopy of the solid torus
}

}  // namespace lenstab
