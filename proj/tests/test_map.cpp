#include "alexsys/combinatorial_map.hpp"

#include "alexsys/errors.hpp"
#include "doctest.h"

using namespace alexsys;
using namespace alexsys::cmap;
using alexsys::surface::FiniteTypeSignature;

TEST_CASE("canonical piece maps have the right euler characteristic") {
  const FiniteTypeSignature sigs[] = {
      {1, 0, 1}, {3, 0, 2}, {3, 0, 3}, {4, 0, 1}, {0, 0, 9}, {0, 0, 2},
      {1, 1, 0}, {2, 0, 0}, {4, 4, 3}, {0, 0, 1}, {0, 3, 0}, {2, 2, 5},
  };
  for (const auto& sig : sigs) {
    CAPTURE(sig.str());
    PieceMap pm = canonical_piece_map(sig);
    CHECK(pm.map.euler_characteristic_closed() == 2 - 2 * sig.genus);
    CHECK(pm.map.euler_characteristic_piece() ==
          surface::euler_characteristic(sig));
    CHECK(pm.map.boundary_face_total() == sig.boundary);
    CHECK(pm.map.marked_face_total() == sig.punctures);
    // Monogons plus at most two big faces.
    int S = sig.punctures + sig.boundary;
    CHECK(pm.map.face_count() == S + (S >= 2 ? 2 : 1));
  }
  CHECK_THROWS_AS(canonical_piece_map({0, 0, 0}), UnsupportedSignature);
}

TEST_CASE("face walks cover each dart once") {
  PieceMap pm = canonical_piece_map({3, 0, 2});
  const auto& m = pm.map;
  std::vector<int> seen(m.dart_count(), 0);
  for (int f = 0; f < m.face_count(); ++f)
    for (int d : m.face_walk(f)) seen[d]++;
  for (int d = 0; d < m.dart_count(); ++d) {
    CHECK(seen[d] == 1);
    CHECK(m.face_of(m.face_walk(m.face_of(d))[m.pos_in_face(d)]) == m.face_of(d));
  }
}

TEST_CASE("dart naming round-trips") {
  PieceMap pm = canonical_piece_map({1, 1, 2});
  const auto& m = pm.map;
  for (int d = 0; d < m.dart_count(); ++d)
    CHECK(m.dart_by_name(m.dart_name(d)) == d);
  CHECK_THROWS_AS(m.dart_by_name("zz+"), InvalidPath);
}

TEST_CASE("gluing two pieces along a boundary circle") {
  // (1,0,1) + (3,0,2) glued along one circle -> (4,0,1).
  PieceMap a = canonical_piece_map({1, 0, 1});
  PieceMap b = canonical_piece_map({3, 0, 2});
  GluedChart chart = glue_boundary(a, 0, b, 0);
  CHECK(chart.map.euler_characteristic_closed() == 2 - 2 * 4);
  CHECK(chart.map.boundary_face_total() == 1);
  CHECK(chart.map.euler_characteristic_piece() ==
        surface::euler_characteristic({4, 0, 1}));

  // Dart translation is a bijection onto the glued darts.
  std::vector<int> hit(chart.map.dart_count(), 0);
  for (int d : chart.a_darts) {
    REQUIRE(d >= 0);
    hit[d]++;
  }
  for (int d : chart.b_darts) {
    REQUIRE(d >= 0);
    hit[d]++;
  }
  for (int d = 0; d < chart.map.dart_count(); ++d) {
    int expect = (d / 2 == chart.interface_edge) ? 2 : 1;
    CHECK(hit[d] == expect);
  }
}

TEST_CASE("gluing planar pieces") {
  // (0,0,9) + (0,0,9) glued along one circle -> (0,0,16).
  PieceMap a = canonical_piece_map({0, 0, 9});
  PieceMap b = canonical_piece_map({0, 0, 9});
  GluedChart chart = glue_boundary(a, 3, b, 0);
  CHECK(chart.map.euler_characteristic_closed() == 2);
  CHECK(chart.map.boundary_face_total() == 16);
  CHECK(chart.map.euler_characteristic_piece() ==
        surface::euler_characteristic({0, 0, 16}));
}
