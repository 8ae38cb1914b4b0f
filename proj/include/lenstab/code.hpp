#pragma once
// Extended Gauss codes for knot diagrams in the annulus.
//
// A code is "word, signs, zero-region arcs, inf-region arcs".  The word lists
// crossings in traversal order, +k for an over pass and -k for an under pass.
// Arc i is the arc right after position i of the word; the region lists name
// the arcs bounding the face holding the axis puncture (zero) and the outer
// face (inf).  Crossingless unknots are encoded with an empty word: the
// null-homotopic circle as ", , 0, 0" and the core circle as ", , 0, 1"
// (sentinel 1 marks that the two regions are different faces).

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace lenstab {

struct GaussCode {
  std::vector<int> word;                   // 2n letters, each of +-1..+-n once
  std::vector<int> signs;                  // n entries, +1 or -1
  std::vector<int> zero_region, inf_region;  // sorted arc ids; empty = plain code

  int crossings() const { return (int)signs.size(); }
  bool extended() const { return !zero_region.empty() || word.empty(); }
  bool operator==(const GaussCode& o) const {
    return word == o.word && signs == o.signs && zero_region == o.zero_region &&
           inf_region == o.inf_region;
  }
  bool operator!=(const GaussCode& o) const { return !(*this == o); }
};

// Letter order 1 < -1 < 2 < -2 < ...
inline int letter_rank(int l) { return l > 0 ? 2 * l - 1 : -2 * l; }

// Total order: crossing count, word, signs (+ before -), zero region, inf region.
inline int code_cmp(const GaussCode& a, const GaussCode& b) {
  if (a.word.size() != b.word.size()) return a.word.size() < b.word.size() ? -1 : 1;
  for (size_t i = 0; i < a.word.size(); i++) {
    int ra = letter_rank(a.word[i]), rb = letter_rank(b.word[i]);
    if (ra != rb) return ra < rb ? -1 : 1;
  }
  for (size_t i = 0; i < a.signs.size(); i++)
    if (a.signs[i] != b.signs[i]) return a.signs[i] > b.signs[i] ? -1 : 1;
  if (a.zero_region != b.zero_region) return a.zero_region < b.zero_region ? -1 : 1;
  if (a.inf_region != b.inf_region) return a.inf_region < b.inf_region ? -1 : 1;
  return 0;
}
inline bool code_less(const GaussCode& a, const GaussCode& b) { return code_cmp(a, b) < 0; }

struct CodeLess {
  bool operator()(const GaussCode& a, const GaussCode& b) const { return code_less(a, b); }
};

inline std::string format_code(const GaussCode& c) {
  std::ostringstream os;
  for (size_t i = 0; i < c.word.size(); i++) {
    if (i) os << " ";
    os << c.word[i];
  }
  os << ", ";
  for (int s : c.signs) os << (s > 0 ? '+' : '-');
  if (c.extended()) {
    os << ", ";
    for (size_t i = 0; i < c.zero_region.size(); i++) {
      if (i) os << " ";
      os << c.zero_region[i];
    }
    os << ", ";
    for (size_t i = 0; i < c.inf_region.size(); i++) {
      if (i) os << " ";
      os << c.inf_region[i];
    }
  }
  return os.str();
}

// Parses "word, signs[, zero arcs, inf arcs]".  Throws on malformed input;
// structural validity (realizability, regions being faces) is checked by the
// diagram builder, not here.
inline GaussCode parse_code(const std::string& text) {
  std::vector<std::string> groups;
  std::string cur;
  for (char ch : text) {
    if (ch == ',') {
      groups.push_back(cur);
      cur.clear();
    } else
      cur += ch;
  }
  groups.push_back(cur);
  if (groups.size() != 2 && groups.size() != 4)
    throw std::invalid_argument("code must have 2 or 4 comma separated groups");

  auto ints = [](const std::string& s) {
    std::vector<int> v;
    std::istringstream is(s);
    int x;
    while (is >> x) v.push_back(x);
    return v;
  };

  GaussCode c;
  c.word = ints(groups[0]);
  for (char ch : groups[1]) {
    if (ch == '+')
      c.signs.push_back(1);
    else if (ch == '-')
      c.signs.push_back(-1);
    else if (ch != ' ' && ch != '\t')
      throw std::invalid_argument("bad sign character");
  }
  if (groups.size() == 4) {
    c.zero_region = ints(groups[2]);
    c.inf_region = ints(groups[3]);
    std::sort(c.zero_region.begin(), c.zero_region.end());
    std::sort(c.inf_region.begin(), c.inf_region.end());
    if (c.zero_region.empty() || c.inf_region.empty())
      throw std::invalid_argument("extended code needs nonempty regions");
  }

  // letter sanity: each of +-1..+-n exactly once
  int n = (int)c.signs.size();
  if ((int)c.word.size() != 2 * n) throw std::invalid_argument("word length != 2 * crossings");
  std::vector<int> seen(2 * n, 0);
  for (int l : c.word) {
    int k = l > 0 ? l : -l;
    if (k < 1 || k > n) throw std::invalid_argument("letter out of range");
    int idx = (k - 1) * 2 + (l > 0 ? 0 : 1);
    if (seen[idx]++) throw std::invalid_argument("repeated letter");
  }
  if (n == 0) {
    if (!c.extended()) throw std::invalid_argument("crossingless code must be extended");
    if (c.zero_region != std::vector<int>{0} ||
        (c.inf_region != std::vector<int>{0} && c.inf_region != std::vector<int>{1}))
      throw std::invalid_argument("crossingless code regions must be '0, 0' or '0, 1'");
  } else if (c.extended()) {
    for (int a : c.zero_region)
      if (a < 0 || a >= 2 * n) throw std::invalid_argument("zero region arc out of range");
    for (int a : c.inf_region)
      if (a < 0 || a >= 2 * n) throw std::invalid_argument("inf region arc out of range");
  }
  return c;
}

// The two crossingless unknots.
inline GaussCode affine_unknot_code() {
  GaussCode c;
  c.zero_region = {0};
  c.inf_region = {0};
  return c;
}
inline GaussCode core_unknot_code() {
  GaussCode c;
  c.zero_region = {0};
  c.inf_region = {1};
  return c;
}

enum class RegionClass { Affine, UnknotException, Adjacent, Proper };

}  // namespace lenstab
