#include "doctest.h"

#include "lenstab/census.hpp"
#include "lenstab/hsm.hpp"

using namespace lenstab;

namespace {

HsmValue hv(std::initializer_list<std::pair<HsmMono, LaurentVZ>> terms) {
  HsmValue v;
  for (auto& [m, c] : terms) v.add(m, c);
  return v;
}

LaurentVZ vz(std::initializer_list<std::array<int, 3>> monos) {
  LaurentVZ p;
  for (auto& [c, ve, ze] : monos) p += LaurentVZ::mono(c, ve, ze);
  return p;
}

HsmValue hsm_of(const char* txt, bool reverse = false) {
  return hsm_T_oriented(from_code(parse_code(txt)), reverse);
}

}  // namespace

TEST_CASE("crossingless anchors") {
  // the core of the annulus winds once; reversal winds the other way
  CHECK(hsm_T_oriented(core_unknot_diagram(), false) == hv({{{{1, 1}}, LaurentVZ(1)}}));
  CHECK(hsm_T_oriented(core_unknot_diagram(), true) == hv({{{{-1, 1}}, LaurentVZ(1)}}));
  // a null-homotopic unknot is the loop value (v^-1 - v) z^-1 times the unit
  CHECK(hsm_T(affine_unknot_code()) == hv({{{}, LaurentVZ::delta_h()}}));
}

TEST_CASE("affine trefoil is its two-variable polynomial times the loop value") {
  Diagram d = map_from_word({1, -2, 3, -1, 2, -3}, {1, 1, 1});
  d.zero_dart = d.inf_dart = 0;  // both punctures in one region: affine placement
  // (v^2 z^2 + 2 v^2 - v^4) * (v^-1 - v) z^-1, expanded
  LaurentVZ expect = vz({{-1, 3, 1}, {1, 1, 1}, {1, 5, -1}, {-3, 3, -1}, {2, 1, -1}});
  CHECK(hsm_T_oriented(d) == hv({{{}, expect}}));
  LaurentVZ mexpect = vz({{-1, -1, 1}, {1, -3, 1}, {-2, -1, -1}, {3, -3, -1}, {-1, -5, -1}});
  CHECK(hsm_T_oriented(mirror_diagram(d)) == hv({{{}, mexpect}}));
}

TEST_CASE("one-crossing spirals") {
  // the ascending positive spiral of winding 2 is the basis knot t_2
  CHECK(hsm_of("1 -1, +, 0, 1") == hv({{{{2, 1}}, LaurentVZ(1)}}));
  CHECK(hsm_of("1 -1, +, 0, 1", true) == hv({{{{-2, 1}}, LaurentVZ(1)}}));
  // its mirror expands: v^-2 t_2 - v^-1 z t_1^2 (and the reverse in t_{-k})
  CHECK(hsm_of("1 -1, -, 0, 1", true) ==
        hv({{{{2, 1}}, vz({{1, -2, 0}})}, {{{1, 2}}, vz({{-1, -1, 1}})}}));
  CHECK(hsm_of("1 -1, -, 0, 1") ==
        hv({{{{-2, 1}}, vz({{1, -2, 0}})}, {{{-1, 2}}, vz({{-1, -1, 1}})}}));
}

TEST_CASE("three-crossing winding-2 diagrams") {
  // kinked spiral: skein-equivalent to the mirror spiral above
  CHECK(hsm_of("1 -1 -2 -3 3 2, ---, 1 2 4 5, 0") ==
        hv({{{{2, 1}}, vz({{1, -2, 0}})}, {{{1, 2}}, vz({{-1, -1, 1}})}}));
  // reducible diagram of the positive spiral
  CHECK(hsm_of("1 2 3 -1 -2 -3, +-+, 0 2 4, 1 3 5") == hv({{{{2, 1}}, LaurentVZ(1)}}));
  // closure of the two-strand braid s^3: expanding one crossing at a time
  // gives v^2 t_2 + vz (v^2 t_1^2 + vz t_2)
  CHECK(hsm_of("1 -2 3 -1 2 -3, +++, 0 2 4, 1 3 5") ==
        hv({{{{2, 1}}, vz({{1, 2, 2}, {1, 2, 0}})}, {{{1, 2}}, vz({{1, 3, 1}})}}));
}

TEST_CASE("reversal symmetry and move invariance over the small census") {
  auto all = enumerate_census(3);
  int neighbors = 0;
  for (const GaussCode& c : all) {
    CAPTURE(format_code(c));
    Diagram d = from_code(c);
    HsmValue fwd = hsm_T_oriented(d, false);
    HsmValue rev = hsm_T_oriented(d, true);
    // reversing the knot sends every basis factor t_k to t_{-k}
    CHECK(rev == fwd.reversed());
    // final knot values are z-polynomial once winding is nonzero (the loop
    // factor z^-1 only survives on null-homotopic split pieces)
    if (c.crossings() > 0 && winding(d) != 0) {
      for (auto& [m, coef] : fwd.terms) CHECK(coef.min_z_exp() >= 0);
    }
    HsmValue key = hsm_T(d);
    move_neighbors(d, 4, [&](const Diagram& nb) {
      neighbors++;
      if (hsm_T(nb) != key) {
        CAPTURE(neighbors);
        REQUIRE(hsm_T(nb) == key);
      }
    });
    // meridional rotation is an ambient isotopy of the annulus
    CHECK(hsm_T(meridional_rotation(d)) == key);
  }
  CHECK(neighbors > 30000);
}

TEST_CASE("lens spaces with large p reuse the solid-torus value") {
  int two_crossing = 0, wind4 = 0;
  for (const GaussCode& c : enumerate_census(3)) {
    if (c.crossings() == 2) {
      CHECK(hsm_lens_large_p(c, 7) == hsm_T(c));  // p = 7 > 2(n+1) = 6
      two_crossing++;
    }
    if (c.crossings() == 3 && std::abs(winding(from_code(c))) == 4) {
      // needs basis elements outside -p/2 < k <= p/2 (or fails the p bound)
      CHECK_THROWS(hsm_lens_large_p(c, 7));
      wind4++;
    }
  }
  CHECK(two_crossing > 0);
  CHECK(wind4 > 0);
}
