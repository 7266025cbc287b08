#include "alexsys/arrangement.hpp"

#include "alexsys/errors.hpp"
#include "doctest.h"

using namespace alexsys;
using namespace alexsys::arr;
using alexsys::cmap::PieceMap;
using alexsys::cmap::canonical_piece_map;

namespace {

PathStep step(const cmap::CombinatorialMap& m, const std::string& dart, long long key) {
  return {m.dart_by_name(dart), OrderKey(key)};
}
PathStep stepq(const cmap::CombinatorialMap& m, const std::string& dart, long long num,
               long long den) {
  return {m.dart_by_name(dart), OrderKey(num, den)};
}

CurvePath closed(std::string id, std::vector<PathStep> steps) {
  return {std::move(id), PathKind::Closed, std::move(steps)};
}

} // namespace

TEST_CASE("empty arrangement has one region with the piece's euler characteristic") {
  PieceMap pm = canonical_piece_map({3, 0, 2});
  Arrangement arr(pm.map, {});
  REQUIRE(arr.regions().size() == 1);
  const Region& r = arr.regions()[0];
  CHECK(r.euler_char == -6);
  CHECK(r.puncture_count == 0);
  CHECK(r.touches_boundary);
  CHECK(r.classification == Region::Class::Other);
  CHECK_FALSE(is_filling(arr).filling);
}

TEST_CASE("alpha and beta fill the once-punctured torus") {
  PieceMap pm = canonical_piece_map({1, 1, 0});
  auto alpha = closed("alpha", {step(pm.map, "b0+", 1)});
  auto beta = closed("beta", {step(pm.map, "a0+", 1)});
  Arrangement arr(pm.map, {alpha, beta});
  CHECK(arr.total_crossings() == 1);
  REQUIRE(arr.regions().size() == 1);
  const Region& r = arr.regions()[0];
  CHECK(r.euler_char == 1);
  CHECK(r.puncture_count == 1);
  CHECK(r.classification == Region::Class::OncePuncturedDisk);
  auto fill = is_filling(arr);
  CHECK(fill.filling);
  CHECK(fill.punctured_disks == 1);

  CHECK(intersection_number(arr, "alpha", "beta") == 1);
  CHECK(intersection_number(arr, "beta", "alpha") == 1);
}

TEST_CASE("two parallel core curves on the annulus leave three non-disk regions") {
  PieceMap pm = canonical_piece_map({0, 0, 2});
  // The push-off sits on the core's left: keys grow on even-dart steps and
  // shrink on odd-dart steps.
  auto c1 = closed("c1", {step(pm.map, "e0+", 1), step(pm.map, "e1-", 1)});
  auto c2 = closed("c2", {step(pm.map, "e0+", 2), stepq(pm.map, "e1-", 1, 2)});
  Arrangement arr(pm.map, {c1, c2});
  CHECK(arr.total_crossings() == 0);
  CHECK(arr.regions().size() == 3);
  for (const auto& r : arr.regions())
    CHECK(r.classification != Region::Class::OpenDisk);
  CHECK_FALSE(is_filling(arr).filling);
  CHECK(intersection_number(arr, "c1", "c2") == 0);
}

TEST_CASE("a finger poke across the core creates one removable bigon") {
  PieceMap pm = canonical_piece_map({0, 0, 2});
  auto c = closed("c", {step(pm.map, "e0+", 1), step(pm.map, "e1-", 1)});
  auto poke = closed("poke", {stepq(pm.map, "e0+", 1, 2), stepq(pm.map, "e1-", 7, 10),
                              stepq(pm.map, "e1+", 3, 2), step(pm.map, "e1-", 2)});
  Arrangement arr(pm.map, {c, poke});
  REQUIRE(arr.total_crossings() == 2);

  auto reduced = reduce_bigons(pm.map, c, poke);
  CHECK(reduced.removed == 2);
  CHECK(reduced.arrangement.total_crossings() == 0);
  CHECK(intersection_number(pm.map, c, poke) == 0);

  auto terminals = reduction_terminal_counts_oracle(pm.map, c, poke);
  REQUIRE(terminals.size() == 1);
  CHECK(terminals[0] == 0);
}

TEST_CASE("a four-crossing contractible wave cancels in every reduction order") {
  PieceMap pm = canonical_piece_map({0, 0, 3});
  auto c = closed("c", {step(pm.map, "e1-", 10), step(pm.map, "e2+", 10)});
  auto wave = closed("wave", {step(pm.map, "e1+", 15), step(pm.map, "e1-", 12),
                              step(pm.map, "e1+", 5), step(pm.map, "e2-", 5),
                              step(pm.map, "e2+", 8), step(pm.map, "e0-", 8)});
  Arrangement arr(pm.map, {c, wave});
  REQUIRE(arr.total_crossings() == 4);
  auto reduced = reduce_bigons(pm.map, c, wave);
  CHECK(reduced.removed == 4);
  CHECK(reduced.arrangement.total_crossings() == 0);

  auto terminals = reduction_terminal_counts_oracle(pm.map, c, wave);
  REQUIRE(terminals.size() == 1);
  CHECK(terminals[0] == 0);
}

TEST_CASE("already reduced pair is a fixed point") {
  PieceMap pm = canonical_piece_map({1, 1, 0});
  auto alpha = closed("alpha", {step(pm.map, "b0+", 1)});
  auto beta = closed("beta", {step(pm.map, "a0+", 1)});
  auto reduced = reduce_bigons(pm.map, alpha, beta);
  CHECK(reduced.removed == 0);
  CHECK(reduced.arrangement.total_crossings() == 1);
}

TEST_CASE("embedding violations are rejected") {
  PieceMap pm = canonical_piece_map({1, 1, 0});
  auto alpha = closed("alpha", {step(pm.map, "b0+", 1)});
  auto copy = closed("copy", {step(pm.map, "b0+", 1)});
  CHECK_THROWS_AS(Arrangement(pm.map, {alpha, copy}), NonEmbeddedPath);

  auto beta = closed("beta", {step(pm.map, "a0+", 1), step(pm.map, "b0+", 1)});
  CHECK_THROWS_AS(Arrangement(pm.map, {alpha, beta}), TriplePoint);
}

TEST_CASE("invalid paths are rejected") {
  PieceMap pm = canonical_piece_map({1, 0, 1});
  CHECK_THROWS_AS(Arrangement(pm.map, {closed("empty", {})}), InvalidPath);
  // A closed curve may not run into the boundary monogon.
  CHECK_THROWS_AS(Arrangement(pm.map, {closed("bad", {step(pm.map, "q0+", 1)})}),
                  InvalidPath);
}

TEST_CASE("check_alexander_system accepts the torus pair and rejects a crossing triple") {
  PieceMap pm = canonical_piece_map({1, 1, 0});
  auto alpha = closed("alpha", {step(pm.map, "b0+", 1)});
  auto beta = closed("beta", {step(pm.map, "a0+", 1)});
  {
    Arrangement arr(pm.map, {alpha, beta});
    auto rep = check_alexander_system(arr);
    CHECK(rep.accepted());
    CHECK(rep.intersection_matrix[0][1] == 1);
  }
  {
    // gamma crosses both alpha and beta once: a pairwise-crossing triple.
    auto gamma = closed("gamma", {step(pm.map, "a0+", 2), step(pm.map, "b0+", 2)});
    Arrangement arr(pm.map, {alpha, beta, gamma});
    REQUIRE(arr.crossing_count(0, 2) > 0);
    REQUIRE(arr.crossing_count(1, 2) > 0);
    auto rep = check_alexander_system(arr);
    CHECK(rep.minimal_position_ok);
    CHECK_FALSE(rep.triples_ok);
    REQUIRE(rep.bad_triples.size() == 1);
    CHECK(rep.bad_triples[0] == std::array<int, 3>{0, 1, 2});
    CHECK_FALSE(rep.accepted());
  }
}

TEST_CASE("parallel copies are reported as indeterminate, never accepted") {
  PieceMap pm = canonical_piece_map({1, 1, 0});
  auto alpha = closed("alpha", {step(pm.map, "b0+", 1)});
  auto copy = closed("copy", {step(pm.map, "b0+", 2)});
  Arrangement arr(pm.map, {alpha, copy});
  auto rep = check_alexander_system(arr);
  CHECK(rep.minimal_position_ok);
  CHECK(rep.triples_ok);
  REQUIRE(rep.indeterminate_pairs.size() == 1);
  CHECK_FALSE(rep.accepted());
}

TEST_CASE("a pair with a bigon fails minimal position") {
  PieceMap pm = canonical_piece_map({0, 0, 2});
  auto c = closed("c", {step(pm.map, "e0+", 1), step(pm.map, "e1-", 1)});
  auto poke = closed("poke", {stepq(pm.map, "e0+", 1, 2), stepq(pm.map, "e1-", 7, 10),
                              stepq(pm.map, "e1+", 3, 2), step(pm.map, "e1-", 2)});
  Arrangement arr(pm.map, {c, poke});
  auto rep = check_alexander_system(arr);
  CHECK_FALSE(rep.minimal_position_ok);
  REQUIRE(rep.bigon_pairs.size() == 1);
  CHECK(rep.bigon_pairs[0].member_a == 0);
  CHECK(rep.bigon_pairs[0].member_b == 1);
  CHECK_FALSE(rep.accepted());
}

TEST_CASE("overlay preserves the euler characteristic on a corpus of pieces") {
  const surface::FiniteTypeSignature sigs[] = {{1, 0, 1}, {2, 0, 0}, {0, 0, 9}};
  for (const auto& sig : sigs) {
    PieceMap pm = canonical_piece_map(sig);
    Arrangement arr(pm.map, {});
    CHECK(arr.euler_characteristic_closed() == pm.map.euler_characteristic_closed());
  }
}

TEST_CASE("single curve on a genus-2 piece does not fill") {
  PieceMap pm = canonical_piece_map({2, 0, 0});
  auto alpha = closed("alpha", {step(pm.map, "b0+", 1)});
  Arrangement arr(pm.map, {alpha});
  auto fill = is_filling(arr);
  CHECK_FALSE(fill.filling);
  REQUIRE(fill.witness.has_value());
  CHECK(fill.witness->euler_char < 1);
}
