#include "alexsys/surface.hpp"

#include "doctest.h"

using namespace alexsys::surface;

TEST_CASE("complexity matches the closed formula") {
  CHECK(complexity({4, 4, 3}) == 16);
  CHECK(complexity({0, 0, 9}) == 6);
  CHECK(complexity({1, 0, 1}) == 1);
  CHECK(complexity({0, 0, 2}) == -1);
  for (int g = 0; g <= 100; ++g)
    for (int n = 0; n <= 100; n += 7)
      for (int b = 0; b <= 100; b += 9)
        CHECK(complexity({g, n, b}) == 3 * g - 3 + n + b);
}

TEST_CASE("euler characteristic matches the closed formula") {
  CHECK(euler_characteristic({0, 0, 0}) == 2);
  CHECK(euler_characteristic({1, 1, 0}) == -1);
  CHECK(euler_characteristic({3, 0, 2}) == -6);
  for (int g = 0; g <= 100; ++g)
    for (int n = 0; n <= 100; n += 11)
      for (int b = 0; b <= 100; b += 13)
        CHECK(euler_characteristic({g, n, b}) == 2 - 2 * g - n - b);
}

TEST_CASE("gluing adds euler characteristics and merges boundary") {
  for (int ga = 0; ga <= 3; ++ga)
    for (int ba = 1; ba <= 4; ++ba)
      for (int gb = 0; gb <= 3; ++gb)
        for (int bb = 1; bb <= 4; ++bb)
          for (int k = 1; k <= std::min(ba, bb); ++k) {
            FiniteTypeSignature a{ga, 1, ba}, b{gb, 2, bb};
            auto glued = glue_signatures(a, b, k);
            CHECK(euler_characteristic(glued) ==
                  euler_characteristic(a) + euler_characteristic(b));
            CHECK(glued.boundary == a.boundary + b.boundary - 2 * k);
            CHECK(glued.punctures == a.punctures + b.punctures);
          }
}

TEST_CASE("descriptor validation") {
  SurfaceDescriptor lnm{kInfiniteGenus, EndTree::leaf_genus(), 0};
  CHECK(validate_descriptor(lnm).accepted);
  CHECK(lnm.infinite_type());

  SurfaceDescriptor bad{kInfiniteGenus, EndTree::cantor_planar(), 0};
  auto v = validate_descriptor(bad);
  CHECK_FALSE(v.accepted);
  CHECK(v.violated_clause == "infinite genus must accumulate at an end");

  SurfaceDescriptor g4cantor{4, EndTree::cantor_planar(), 0};
  CHECK(validate_descriptor(g4cantor).accepted);
  CHECK(g4cantor.infinite_type());

  SurfaceDescriptor finite{2, std::nullopt, 1};
  CHECK(validate_descriptor(finite).accepted);
  CHECK_FALSE(finite.infinite_type());

  // Finitely many planar leaves are punctures, not an infinite end space.
  SurfaceDescriptor punctured{
      2, EndTree::node({EndTree::leaf_planar(), EndTree::leaf_planar()}), 0};
  CHECK(validate_descriptor(punctured).accepted);
  CHECK_FALSE(punctured.infinite_type());
}

TEST_CASE("validate_descriptor is idempotent and pure") {
  SurfaceDescriptor d{kInfiniteGenus, EndTree::cantor_genus(), 2};
  auto v1 = validate_descriptor(d);
  auto v2 = validate_descriptor(d);
  CHECK(v1.accepted == v2.accepted);
  CHECK(v1.violated_clause == v2.violated_clause);
}
