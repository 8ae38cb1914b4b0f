#pragma once
// Knots in the lens space L(p,q), presented by diagrams in the annulus.
// Two diagrams give the same knot in L(p,q) iff they are related by the
// usual annulus moves plus the disk slide: an arc bounding the outer region
// is rerouted across the glued meridian disk.  Combinatorially the slide
// splices a cut (p,q)-torus-braid closure around the axis into the arc,
// connected through a two-strand corridor that crosses the edges of a dual
// path from the outer region to the axis region (one strand passing over
// every host edge it meets, the other under).

#include <optional>

#include "kbsm.hpp"
#include "moves.hpp"

namespace lenstab {

// Appends the braid closure of (s_1 s_2 ... s_{p-1})^q to `d`, drawn in a
// collar around the axis with strand position 0 innermost, leaving the
// outermost closure edge open.  Returns {start dart, end dart} of the cut
// and fills `inner` with a dart on the innermost face.
struct GadgetCut {
  int start, end, inner;
};

inline GadgetCut append_torus_gadget(Diagram& d, int base, int p, int q, bool rising_over) {
  std::vector<int> endp(p, -1), startp(p, -1);
  auto link = [&](int x, int y) {
    d.theta[x] = y;
    d.theta[y] = x;
  };
  int c = base;
  for (int t = 0; t < q; t++)
    for (int j = 0; j + 1 < p; j++, c++) {
      // slots at a braid crossing, travel direction east, outward north:
      // 0 = out to position j+1, 1 = in from j+1, 2 = in from j, 3 = out to j
      int in_lo = 4 * c + 2, in_hi = 4 * c + 1;
      if (endp[j] < 0)
        startp[j] = in_lo;
      else
        link(endp[j], in_lo);
      if (endp[j + 1] < 0)
        startp[j + 1] = in_hi;
      else
        link(endp[j + 1], in_hi);
      endp[j] = 4 * c + 3;
      endp[j + 1] = 4 * c + 0;
      d.over02[c] = rising_over;
    }
  for (int pos = 0; pos + 1 < p; pos++) link(endp[pos], startp[pos]);
  return {startp[p - 1], endp[p - 1], startp[0]};
}

// Dual path from the face of `from_dart` to the face of `to_dart`, with the
// edge {skip, theta[skip]} removed (its two sides count as one face).
// Returns darts D_i, ordered from the `from` face to the `to` face, with
// face_of[D_i] the side of edge i nearer the `to` face.
inline std::vector<int> corridor_path(const Diagram& d, const Faces& f, int from_dart,
                                      int to_dart, int skip) {
  int nf = f.count();
  std::vector<int> alias(nf);
  for (int i = 0; i < nf; i++) alias[i] = i;
  int sa = f.face_of[skip], sb = f.face_of[d.theta[skip]];
  alias[std::max(sa, sb)] = std::min(sa, sb);
  int src = alias[f.face_of[from_dart]], dst = alias[f.face_of[to_dart]];
  std::vector<int> prev_face(nf, -1), prev_dart(nf, -1);
  std::vector<int> queue{src};
  prev_face[src] = src;
  int skip_lo = std::min(skip, d.theta[skip]);
  for (size_t h = 0; h < queue.size() && prev_face[dst] < 0; h++) {
    int cur = queue[h];
    for (int fid = 0; fid < nf; fid++) {
      if (alias[fid] != cur) continue;
      for (int dart : f.dartss[fid]) {
        if (std::min(dart, d.theta[dart]) == skip_lo) continue;
        int other = alias[f.face_of[d.theta[dart]]];
        if (prev_face[other] < 0) {
          prev_face[other] = cur;
          prev_dart[other] = dart;  // dart on the `cur` side
          queue.push_back(other);
        }
      }
    }
  }
  if (prev_face[dst] < 0) throw std::logic_error("corridor: dual graph disconnected");
  std::vector<int> path;  // walk back from dst: darts sit on the side away from dst
  for (int cur = dst; cur != src; cur = prev_face[cur]) path.push_back(prev_dart[cur]);
  // prev_dart[cur] lies on the face before cur, i.e. nearer `from`; flip to
  // the convention promised above (side nearer `to`), then restore order.
  for (int& dart : path) dart = d.theta[dart];
  std::reverse(path.begin(), path.end());
  return path;
}

inline std::optional<Diagram> slide_arc(const Diagram& h, int u, int p, int q,
                                        bool rising_over = true,
                                        int* flip_used = nullptr) {
  if (p < 2 || q < 1 || h.n == 0) return std::nullopt;
  Faces hf = trace_faces(h);
  if (hf.face_of[u] != hf.face_of[h.inf_dart]) return std::nullopt;
  int hv = h.theta[u];
  std::vector<int> cor;  // crossed edges, outer face mark side first
  cor = corridor_path(h, hf, h.inf_dart, h.zero_dart, u);
  int L = (int)cor.size(), G = q * (p - 1);

  Diagram d;
  d.n = h.n + G + 2 * L;
  d.theta = h.theta;
  d.theta.resize(4 * d.n, -1);
  d.over02 = h.over02;
  d.over02.resize(d.n, 1);
  auto link = [&](int x, int y) {
    d.theta[x] = y;
    d.theta[y] = x;
  };
  GadgetCut cut = append_torus_gadget(d, h.n, p, q, rising_over);

  // Two cable strands, each crossing every corridor edge once.  The band is
  // embedded, so both strands pass on the same side of every host edge; we
  // route it over.  Walk from the gadget cut (near the axis) out to the arc,
  // i.e. corridor edges in reverse order.
  int base = h.n + G;
  int end[2];
  for (int s = 0; s < 2; s++) {
    int prev = s == 0 ? cut.start : cut.end;
    for (int i = L - 1; i >= 0; i--) {
      int c = base + 2 * i + s;
      link(prev, 4 * c + 3);
      prev = 4 * c + 1;
    }
    end[s] = prev;
  }
  // Split each crossed host edge {a, b}: a -- cf -- cs -- b where cf is the
  // crossing of the strand passing first along a->b.
  for (int i = 0; i < L; i++) {
    int a = cor[i], b = d.theta[a];
    int c0 = base + 2 * i, c1 = base + 2 * i + 1;
    link(a, 4 * c0 + 0);
    link(4 * c0 + 2, 4 * c1 + 0);
    link(4 * c1 + 2, b);
    d.over02[c0] = false;  // cable on slots (1,3), over the host edge
    d.over02[c1] = false;
  }
  // Exactly one of the two splice pairings closes up without an extra
  // crossing; which one depends on where the corridor leaves the outer face.
  d.zero_dart = cut.inner;
  d.inf_dart = u;
  d.n0_core = false;
  for (int flip = 0; flip < 2; flip++) {
    link(u, end[1 - flip]);
    link(hv, end[flip]);
    for (int x = 0; x < d.darts(); x++)
      if (d.theta[x] < 0 || d.theta[d.theta[x]] != x)
        throw std::logic_error("slide_arc: bad wiring at dart " + std::to_string(x));
    if (diagram_realizable(d)) {
      if (flip_used) *flip_used = flip;
      return d;
    }
  }
  return std::nullopt;
}

// Slide applied to the affine unknot: the closed gadget alone.
inline Diagram torus_curve_diagram(int p, int q, bool rising_over = true) {
  Diagram d;
  d.n = q * (p - 1);
  d.theta.assign(4 * d.n, -1);
  d.over02.assign(d.n, 1);
  GadgetCut cut = append_torus_gadget(d, 0, p, q, rising_over);
  d.theta[cut.start] = cut.end;
  d.theta[cut.end] = cut.start;
  d.zero_dart = cut.inner;
  d.inf_dart = cut.end;  // outer closure edge, outward side
  return d;
}

}  // namespace lenstab
