#pragma once
// Kauffman bracket skein module of the solid torus via a direct state sum.
// Values live in the free module over Z[A, A^-1] with basis {x^m}, where x^m
// is the class of m parallel copies of the core circle and x^0 is the class
// of an affine unknot.

#include <map>
#include <set>
#include <stdexcept>
#include <string>

#include "diagram.hpp"
#include "laurent.hpp"

namespace lenstab {

// Polynomial in x with Laurent coefficients in A; zero coefficients pruned.
struct TPoly {
  std::map<int, LaurentA> c;  // power of x -> coefficient

  static TPoly xpow(int m, LaurentA a = LaurentA::mono(1, 0)) {
    TPoly p;
    if (!a.is_zero()) p.c.emplace(m, std::move(a));
    return p;
  }

  bool is_zero() const { return c.empty(); }
  int max_xpow() const { return c.empty() ? 0 : c.rbegin()->first; }

  TPoly& operator+=(const TPoly& o) {
    for (auto& [m, a] : o.c) {
      auto it = c.find(m);
      if (it == c.end()) {
        c.emplace(m, a);
      } else {
        it->second += a;
        if (it->second.is_zero()) c.erase(it);
      }
    }
    return *this;
  }
  TPoly& operator-=(const TPoly& o) {
    for (auto& [m, a] : o.c) {
      auto it = c.find(m);
      if (it == c.end()) {
        c.emplace(m, -a);
      } else {
        it->second -= a;
        if (it->second.is_zero()) c.erase(it);
      }
    }
    return *this;
  }
  friend TPoly operator+(TPoly a, const TPoly& b) { return a += b; }
  friend TPoly operator-(TPoly a, const TPoly& b) { return a -= b; }

  TPoly& scale(const LaurentA& s) {
    if (s.is_zero()) {
      c.clear();
      return *this;
    }
    for (auto& [m, a] : c) a = a * s;
    return *this;
  }
  friend TPoly operator*(const TPoly& p, const LaurentA& s) {
    TPoly r = p;
    return r.scale(s);
  }

  // A -> A^-1 on every coefficient (mirror image).
  TPoly bar() const {
    TPoly r;
    for (auto& [m, a] : c) r.c.emplace(m, a.bar());
    return r;
  }

  bool operator==(const TPoly& o) const { return c == o.c; }
  bool operator!=(const TPoly& o) const { return !(*this == o); }
  bool operator<(const TPoly& o) const { return c < o.c; }

  std::string str() const {
    if (c.empty()) return "0";
    std::string s;
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
      std::string coef = it->second.str();
      bool paren = it->second.terms.size() > 1;
      if (!s.empty()) s += " + ";
      if (it->first == 0) {
        s += coef;
      } else {
        s += paren ? "(" + coef + ")" : coef;
        s += "x";
        if (it->first != 1) s += "^" + std::to_string(it->first);
      }
    }
    return s;
  }
};

// Smoothing pairing inside one crossing: slot -> slot it joins to.  The
// A-smoothing merges the two corners swept when the over strand rotates
// counterclockwise onto the under strand.
inline int smooth_slot(bool over_on_02, bool a_smoothing, int slot) {
  // over on (0,2): A merges corners (0,1),(2,3) -> arcs pair slots (1,2),(3,0)
  // over on (1,3): A merges corners (1,2),(3,0) -> arcs pair slots (0,1),(2,3)
  static const int join_a02[4] = {3, 2, 1, 0};
  static const int join_b02[4] = {1, 0, 3, 2};
  if (over_on_02 == a_smoothing) return join_a02[slot];
  return join_b02[slot];
}

// Edges of the diagram crossed by the dual cut from the 0-face to the
// infinity-face; a state loop is essential iff it meets the cut oddly.
inline std::set<int> cut_edges(const Diagram& d, const Faces& f) {
  std::set<int> cut;
  std::vector<uint8_t> dep = departing_flags(d);
  for (const DualStep& s : dual_path(d, f, dep))
    cut.insert(std::min(s.tail_dart, d.theta[s.tail_dart]));
  return cut;
}

// Unnormalised bracket by summing over all 2^n crossing resolutions.
inline TPoly bracket(const Diagram& d) {
  if (d.n == 0) return TPoly::xpow(d.n0_core ? 1 : 0);
  if (d.zero_dart < 0) throw std::invalid_argument("bracket needs marked regions");
  if (d.n > 25) throw std::invalid_argument("bracket: state sum too large");
  Faces f = trace_faces(d);
  std::set<int> cut = cut_edges(d, f);

  LaurentA delta = LaurentA::delta();
  TPoly total;
  int nd = d.darts();
  std::vector<uint8_t> seen(nd);
  for (uint32_t state = 0; state < (1u << d.n); state++) {
    std::fill(seen.begin(), seen.end(), 0);
    int a_count = 0;
    for (int cr = 0; cr < d.n; cr++)
      if (state >> cr & 1) a_count++;
    int trivial = 0, essential = 0;
    for (int start = 0; start < nd; start++) {
      if (seen[start]) continue;
      int parity = 0, p = start;
      do {
        seen[p] = 1;
        int q = d.theta[p];  // walk the edge
        seen[q] = 1;
        if (cut.count(std::min(p, q))) parity ^= 1;
        int cr = dart_cr(q);
        bool a_sm = state >> cr & 1;
        p = dart_make(cr, smooth_slot(d.over02[cr], a_sm, dart_slot(q)));
      } while (p != start);
      (parity ? essential : trivial)++;
    }
    LaurentA term = LaurentA::mono(1, a_count - (d.n - a_count));
    int dpow = trivial - (essential == 0 ? 1 : 0);
    for (int i = 0; i < dpow; i++) term = term * delta;
    total += TPoly::xpow(essential, term);
  }
  return total;
}

// Framing-corrected bracket: invariant of the knot in the solid torus.
inline TPoly normalized_T(const Diagram& d) {
  int w = writhe(d);
  TPoly b = bracket(d);
  return b.scale(LaurentA::mono((w & 1) ? -1 : 1, -3 * w));
}

inline TPoly normalized_T(const GaussCode& c) { return normalized_T(from_code(c)); }

// Exact division of every coefficient by the same Laurent scalar.
inline bool tpoly_try_divide(const TPoly& num, const LaurentA& den, TPoly& out) {
  TPoly q;
  for (auto& [m, a] : num.c) {
    LaurentA qa;
    if (!LaurentA::try_divide(a, den, qa)) return false;
    q.c.emplace(m, std::move(qa));
  }
  out = std::move(q);
  return true;
}

// Reduce powers of x above `top` with the supplied lens-space rules:
// rules[k] expresses x^(top+1+k) in the basis x^0..x^top.
inline TPoly reduce_lens(TPoly p, int top, const std::vector<TPoly>& rules) {
  while (!p.is_zero() && p.max_xpow() > top) {
    int m = p.max_xpow();
    int k = m - top - 1;
    if (k >= (int)rules.size()) throw std::invalid_argument("reduce_lens: missing rule");
    LaurentA a = p.c.rbegin()->second;
    p.c.erase(m);
    p += rules[k] * a;
  }
  return p;
}

}  // namespace lenstab
