#pragma once
// Exact Laurent polynomial arithmetic: Z[A,A^-1] and Z[v,v^-1,z,z^-1].

#include <cstdint>
#include <cstdlib>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

namespace lenstab {

using Coef = long long;

class LaurentA {
public:
  // exponent -> coefficient, zero coefficients never stored
  std::map<int, Coef> terms;

  LaurentA() = default;
  LaurentA(Coef c) {
    if (c) terms[0] = c;
  }
  static LaurentA mono(Coef c, int exp) {
    LaurentA r;
    if (c) r.terms[exp] = c;
    return r;
  }
  // delta = -A^2 - A^-2, the value of a trivial loop
  static LaurentA delta() {
    LaurentA r;
    r.terms[2] = -1;
    r.terms[-2] = -1;
    return r;
  }

  bool is_zero() const { return terms.empty(); }
  bool operator==(const LaurentA& o) const { return terms == o.terms; }
  bool operator!=(const LaurentA& o) const { return terms != o.terms; }
  bool operator<(const LaurentA& o) const { return terms < o.terms; }

  LaurentA& operator+=(const LaurentA& o) {
    for (auto& [e, c] : o.terms) {
      Coef v = (terms[e] += c);
      if (!v) terms.erase(e);
    }
    return *this;
  }
  LaurentA& operator-=(const LaurentA& o) {
    for (auto& [e, c] : o.terms) {
      Coef v = (terms[e] -= c);
      if (!v) terms.erase(e);
    }
    return *this;
  }
  friend LaurentA operator+(LaurentA a, const LaurentA& b) { return a += b; }
  friend LaurentA operator-(LaurentA a, const LaurentA& b) { return a -= b; }
  LaurentA operator-() const {
    LaurentA r;
    for (auto& [e, c] : terms) r.terms[e] = -c;
    return r;
  }
  friend LaurentA operator*(const LaurentA& a, const LaurentA& b) {
    LaurentA r;
    for (auto& [e1, c1] : a.terms)
      for (auto& [e2, c2] : b.terms) {
        Coef v = (r.terms[e1 + e2] += c1 * c2);
        if (!v) r.terms.erase(e1 + e2);
      }
    return r;
  }
  LaurentA& operator*=(const LaurentA& o) { return *this = *this * o; }

  // multiply by c*A^exp
  LaurentA& mulmono(Coef c, int exp) {
    if (!c) {
      terms.clear();
      return *this;
    }
    std::map<int, Coef> nt;
    for (auto& [e, k] : terms) nt[e + exp] = k * c;
    terms = std::move(nt);
    return *this;
  }

  // A -> A^-1
  LaurentA bar() const {
    LaurentA r;
    for (auto& [e, c] : terms) r.terms[-e] = c;
    return r;
  }

  LaurentA pow(int k) const {
    LaurentA r(1), b = *this;
    if (k < 0) throw std::invalid_argument("LaurentA::pow negative");
    while (k) {
      if (k & 1) r *= b;
      b *= b;
      k >>= 1;
    }
    return r;
  }

  int min_exp() const { return terms.empty() ? 0 : terms.begin()->first; }
  int max_exp() const { return terms.empty() ? 0 : terms.rbegin()->first; }

  // Exact division in Z[A,A^-1]; returns false if not divisible.
  static bool try_divide(const LaurentA& num, const LaurentA& den, LaurentA& out) {
    if (den.is_zero()) return false;
    LaurentA quo, rem = num;
    int dlead = den.max_exp();
    int dspan = den.max_exp() - den.min_exp();
    Coef dc = den.terms.rbegin()->second;
    while (!rem.is_zero()) {
      int rlead = rem.max_exp();
      Coef rc = rem.terms.rbegin()->second;
      if (rc % dc) return false;
      // span check to guarantee termination
      if (rem.max_exp() - rem.min_exp() < dspan) return false;
      Coef q = rc / dc;
      int sh = rlead - dlead;
      quo += mono(q, sh);
      LaurentA t = den;
      t.mulmono(q, sh);
      rem -= t;
    }
    out = std::move(quo);
    return true;
  }

  std::string str() const {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
      auto [e, c] = *it;
      if (first) {
        if (c < 0) os << "-";
      } else {
        os << (c < 0 ? " - " : " + ");
      }
      Coef ac = std::llabs(c);
      if (ac != 1 || e == 0) os << ac;
      if (e != 0) {
        os << "A";
        if (e != 1) os << "^" << e;
      }
      first = false;
    }
    return os.str();
  }
};

// Laurent polynomial in v and z.
class LaurentVZ {
public:
  // (v exponent, z exponent) -> coefficient
  std::map<std::pair<int, int>, Coef> terms;

  LaurentVZ() = default;
  LaurentVZ(Coef c) {
    if (c) terms[{0, 0}] = c;
  }
  static LaurentVZ mono(Coef c, int ve, int ze) {
    LaurentVZ r;
    if (c) r.terms[{ve, ze}] = c;
    return r;
  }
  // value of a split null-homotopic loop: (v^-1 - v) z^-1
  static LaurentVZ delta_h() {
    LaurentVZ r;
    r.terms[{-1, -1}] = 1;
    r.terms[{1, -1}] = -1;
    return r;
  }

  bool is_zero() const { return terms.empty(); }
  bool operator==(const LaurentVZ& o) const { return terms == o.terms; }
  bool operator!=(const LaurentVZ& o) const { return terms != o.terms; }
  bool operator<(const LaurentVZ& o) const { return terms < o.terms; }

  LaurentVZ& operator+=(const LaurentVZ& o) {
    for (auto& [e, c] : o.terms) {
      Coef v = (terms[e] += c);
      if (!v) terms.erase(e);
    }
    return *this;
  }
  LaurentVZ& operator-=(const LaurentVZ& o) {
    for (auto& [e, c] : o.terms) {
      Coef v = (terms[e] -= c);
      if (!v) terms.erase(e);
    }
    return *this;
  }
  friend LaurentVZ operator+(LaurentVZ a, const LaurentVZ& b) { return a += b; }
  friend LaurentVZ operator-(LaurentVZ a, const LaurentVZ& b) { return a -= b; }
  LaurentVZ operator-() const {
    LaurentVZ r;
    for (auto& [e, c] : terms) r.terms[e] = -c;
    return r;
  }
  friend LaurentVZ operator*(const LaurentVZ& a, const LaurentVZ& b) {
    LaurentVZ r;
    for (auto& [e1, c1] : a.terms)
      for (auto& [e2, c2] : b.terms) {
        auto key = std::make_pair(e1.first + e2.first, e1.second + e2.second);
        Coef v = (r.terms[key] += c1 * c2);
        if (!v) r.terms.erase(key);
      }
    return r;
  }
  LaurentVZ& operator*=(const LaurentVZ& o) { return *this = *this * o; }

  LaurentVZ& mulmono(Coef c, int ve, int ze) {
    if (!c) {
      terms.clear();
      return *this;
    }
    std::map<std::pair<int, int>, Coef> nt;
    for (auto& [e, k] : terms) nt[{e.first + ve, e.second + ze}] = k * c;
    terms = std::move(nt);
    return *this;
  }

  // v -> -v^-1, z -> z (mirror reflection duality)
  LaurentVZ bar() const {
    LaurentVZ r;
    for (auto& [e, c] : terms) r.terms[{-e.first, e.second}] = (e.first % 2) ? -c : c;
    return r;
  }

  int min_z_exp() const {
    bool any = false;
    int m = 0;
    for (auto& [e, c] : terms)
      if (!any || e.second < m) m = e.second, any = true;
    return m;
  }

  std::string str() const {
    if (terms.empty()) return "0";
    // order: z exponent descending, then v exponent descending
    std::map<std::pair<int, int>, Coef> ord;
    for (auto& [e, c] : terms) ord[{-e.second, -e.first}] = c;
    std::ostringstream os;
    bool first = true;
    for (auto& [k, c] : ord) {
      int ve = -k.second, ze = -k.first;
      if (first) {
        if (c < 0) os << "-";
      } else {
        os << (c < 0 ? " - " : " + ");
      }
      Coef ac = std::llabs(c);
      bool anyvar = ve != 0 || ze != 0;
      if (ac != 1 || !anyvar) os << ac;
      if (ve != 0) {
        os << "v";
        if (ve != 1) os << "^" << ve;
        if (ze != 0) os << " ";
      }
      if (ze != 0) {
        os << "z";
        if (ze != 1) os << "^" << ze;
      }
      first = false;
    }
    return os.str();
  }
};

}  // namespace lenstab
