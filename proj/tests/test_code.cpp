#include <algorithm>
#include <set>
#include <vector>

#include "doctest.h"
#include "lenstab/code.hpp"
#include "lenstab/diagram.hpp"

using namespace lenstab;

// all signed Gauss words with n crossings, passed to fn(word, signs)
template <class F>
static void for_each_signed_word(int n, F&& fn) {
  std::vector<int> letters;
  for (int k = 1; k <= n; k++) {
    letters.push_back(k);
    letters.push_back(-k);
  }
  std::sort(letters.begin(), letters.end());
  std::vector<int> word(letters.begin(), letters.end());
  std::sort(word.begin(), word.end());
  do {
    for (int mask = 0; mask < (1 << n); mask++) {
      std::vector<int> signs(n);
      for (int k = 0; k < n; k++) signs[k] = (mask >> k) & 1 ? 1 : -1;
      fn(word, signs);
    }
  } while (std::next_permutation(word.begin(), word.end()));
}

TEST_CASE("parse and format round trip") {
  std::string s = "1 -2 3 -4 2 -1 4 -3, --++, 0 3 5, 1 4 7";
  GaussCode c = parse_code(s);
  CHECK(c.crossings() == 4);
  CHECK(c.word == std::vector<int>{1, -2, 3, -4, 2, -1, 4, -3});
  CHECK(c.signs == std::vector<int>{-1, -1, 1, 1});
  CHECK(format_code(c) == s);

  GaussCode plain = parse_code("1 -1, +");
  CHECK_FALSE(plain.extended());
  CHECK(format_code(plain) == "1 -1, +");

  CHECK(format_code(affine_unknot_code()) == ", , 0, 0");
  CHECK(format_code(core_unknot_code()) == ", , 0, 1");
  CHECK(parse_code(", , 0, 1") == core_unknot_code());
  CHECK_THROWS(parse_code("1 1, +"));
  CHECK_THROWS(parse_code("1 -1 2, +"));
}

TEST_CASE("code order") {
  auto lt = [](const char* a, const char* b) { return code_less(parse_code(a), parse_code(b)); };
  CHECK(lt(", , 0, 0", "1 -1, +"));
  CHECK(lt(", , 0, 0", ", , 0, 1"));
  CHECK(lt("1 -1, +", "1 -1, -"));
  CHECK(lt("1 -1, -", "1 2 -1 -2, ++"));
  CHECK(lt("1 -2 2 -1, ++", "1 -2 2 -1, +-"));
}

TEST_CASE("figure eight extended code matches the map conventions") {
  // A known valid extended code of a 4-crossing knot: its regions must be
  // actual faces of the traced map, with the documented arc numbering.
  GaussCode c = parse_code("1 -2 3 -4 2 -1 4 -3, --++, 0 3 5, 1 4 7");
  Diagram d;
  REQUIRE_NOTHROW(d = from_code(c));
  REQUIRE(diagram_realizable(d));
  Faces f = trace_faces(d);
  CHECK(f.count() == 6);

  // restarting the traversal on another arc gives the documented partner code
  GaussCode c2 = parse_code("1 -2 3 -4 2 -1 4 -3, ++--, 1 3 6, 2 5 7");
  Diagram d2;
  REQUIRE_NOTHROW(d2 = from_code(c2));
  CHECK(canonical_code(d) == canonical_code(d2));

  // and the canonical code is a member of the orbit
  GaussCode canon = canonical_code(d);
  auto orbit = code_orbit(d);
  CHECK(std::count(orbit.begin(), orbit.end(), canon) >= 1);
  for (const GaussCode& oc : orbit) {
    CHECK_FALSE(code_less(oc, canon));
    CHECK(canonicalize(oc) == canon);
  }
}

TEST_CASE("realizability counts for small n") {
  // realizable codes counted per crossing labelling and orientation:
  // 2 * n! * (#canonical diagrams) = 4, 24, 432 for n = 1, 2, 3
  long expected[] = {0, 4, 24, 432};
  long fact = 1;
  for (int n = 1; n <= 3; n++) {
    fact *= n;
    long canon = 0;
    for_each_signed_word(n, [&](const std::vector<int>& w, const std::vector<int>& s) {
      if (!word_realizable(w, s)) return;
      GaussCode c;
      c.word = w;
      c.signs = s;
      if (canonicalize(c) == c) canon++;
    });
    CHECK(2 * fact * canon == expected[n]);
  }
}

TEST_CASE("canonical diagram counts for small n") {
  // canonical realizable plain codes: 2, 6, 36 for n = 1, 2, 3
  int expected[] = {0, 2, 6, 36};
  for (int n = 1; n <= 3; n++) {
    int cnt = 0;
    for_each_signed_word(n, [&](const std::vector<int>& w, const std::vector<int>& s) {
      if (!word_realizable(w, s)) return;
      GaussCode c;
      c.word = w;
      c.signs = s;
      if (canonicalize(c) == c) cnt++;
    });
    CHECK(cnt == expected[n]);
  }
}

TEST_CASE("canonical extended diagram counts for small n") {
  // canonical extended realizable codes: 10, 68, 714 for n = 1, 2, 3
  int expected[] = {0, 10, 68, 714};
  for (int n = 1; n <= 3; n++) {
    std::set<GaussCode, CodeLess> canon;
    for_each_signed_word(n, [&](const std::vector<int>& w, const std::vector<int>& s) {
      if (!word_realizable(w, s)) return;
      std::vector<int> outs, ins;
      Diagram d = map_from_word(w, s, &outs, &ins);
      Faces f = trace_faces(d);
      for (int f0 = 0; f0 < f.count(); f0++)
        for (int f1 = 0; f1 < f.count(); f1++) {
          d.zero_dart = f.dartss[f0][0];
          d.inf_dart = f.dartss[f1][0];
          canon.insert(canonical_code(d));
        }
    });
    CHECK((int)canon.size() == expected[n]);
  }
}

TEST_CASE("winding basics") {
  CHECK(winding(from_code(affine_unknot_code())) == 0);
  CHECK(winding(from_code(core_unknot_code())) == 1);
  // winding is bounded by n + 1 and vanishes on affine codes
  for (int n = 1; n <= 3; n++) {
    for_each_signed_word(n, [&](const std::vector<int>& w, const std::vector<int>& s) {
      if (!word_realizable(w, s)) return;
      Diagram d = map_from_word(w, s);
      Faces f = trace_faces(d);
      for (int f0 = 0; f0 < f.count(); f0++)
        for (int f1 = 0; f1 < f.count(); f1++) {
          d.zero_dart = f.dartss[f0][0];
          d.inf_dart = f.dartss[f1][0];
          int wind = winding(d);
          CHECK(std::abs(wind) <= n + 1);
          if (classify_regions(d) == RegionClass::Affine) CHECK(wind == 0);
        }
    });
  }
}

TEST_CASE("one crossing diagrams: proper region codes") {
  // the sphere symmetry of the kink swaps its two monogon faces, so each
  // chirality has exactly one canonical proper-region extended code
  std::set<GaussCode, CodeLess> proper;
  for_each_signed_word(1, [&](const std::vector<int>& w, const std::vector<int>& s) {
    if (!word_realizable(w, s)) return;
    Diagram d = map_from_word(w, s);
    Faces f = trace_faces(d);
    for (int f0 = 0; f0 < f.count(); f0++)
      for (int f1 = 0; f1 < f.count(); f1++) {
        d.zero_dart = f.dartss[f0][0];
        d.inf_dart = f.dartss[f1][0];
        if (classify_regions(d) == RegionClass::Proper) proper.insert(canonical_code(d));
      }
  });
  CHECK((int)proper.size() == 2);
  for (const GaussCode& c : proper) CHECK(std::abs(winding(from_code(c))) == 2);
}

TEST_CASE("global transforms") {
  GaussCode c = parse_code("1 -2 3 -4 2 -1 4 -3, --++, 0 3 5, 1 4 7");
  Diagram d = from_code(c);

  // mirror flips all signs
  GaussCode m = canonical_code(mirror_diagram(d));
  std::multiset<int> s0(c.signs.begin(), c.signs.end()), s1;
  for (int s : m.signs) s1.insert(-s);
  CHECK(s0 == s1);

  // meridional rotation is an involution and keeps the crossing number
  GaussCode r = canonical_code(meridional_rotation(d));
  CHECK(r.crossings() == 4);
  CHECK(canonical_code(meridional_rotation(meridional_rotation(d))) == canonical_code(d));
  CHECK(canonical_code(flip_diagram(flip_diagram(d))) == canonical_code(d));

  // reflect preserves realizability
  CHECK(diagram_realizable(reflect_diagram(d)));
}
