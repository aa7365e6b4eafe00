#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "eaoa/catalog.hpp"
#include "eaoa/distance.hpp"

using namespace eaoa;

TEST_CASE("default cutoff caps at six") {
  CHECK(default_cutoff(4) == 4);
  CHECK(default_cutoff(6) == 6);
  CHECK(default_cutoff(15) == 6);
}

TEST_CASE("six-qubit code distances, frozen") {
  EaoaqecCode code = catalog_code("six_qubit_example");
  DistanceReport dressed = distance(code, DistanceMode::Dressed);
  REQUIRE(dressed.d.has_value());
  CHECK(*dressed.d == 1);
  CHECK(dressed.witness->str() == "IIXIII");
  CHECK(dressed.branch == "coset-union");

  DistanceReport bare = distance(code, DistanceMode::Bare);
  CHECK(*bare.d == 1);
  CHECK(bare.witness->str() == "IIXIII");

  DistanceReport noisy = distance(code, DistanceMode::NoisyBob);
  CHECK(*noisy.d == 1);
  CHECK(noisy.witness->str() == "IIXIIIII");  // lives on the extended register
  CHECK(noisy.branch == "coset-union");
}

TEST_CASE("color code distances, frozen") {
  EaoaqecCode code = catalog_code("subsystem_color_code");
  DistanceReport dressed = distance(code, DistanceMode::Dressed);
  CHECK(*dressed.d == 3);
  CHECK(dressed.witness->str() == "XXXIIIIIIIIIIII");
  CHECK(dressed.branch == "normalizer-minus-gauge");

  // The bare distance exceeds the default cutoff ...
  DistanceReport bare6 = distance(code, DistanceMode::Bare);
  CHECK_FALSE(bare6.d.has_value());
  CHECK_FALSE(bare6.witness.has_value());
  CHECK(bare6.cutoff == 6);
  // ... and is 7 once the cutoff allows it.
  DistanceReport bare8 = distance(code, DistanceMode::Bare, 8);
  CHECK(*bare8.d == 7);
  CHECK(bare8.witness->str() == "XXXXXXXIIIIIIII");
  CHECK(bare8.branch == "normalizer-minus-gauge");

  DistanceReport noisy = distance(code, DistanceMode::NoisyBob);
  CHECK(*noisy.d == 3);
  CHECK(noisy.witness->str() == "XXXIIIIIIIIIIII");
}

TEST_CASE("hybrid color code variants, frozen") {
  DistanceReport gf = distance(catalog_code("color_code_hybrid_gf"), DistanceMode::Dressed);
  CHECK(*gf.d == 2);
  CHECK(gf.witness->str() == "ZIIIIIIIIIIYIII");
  CHECK(gf.branch == "coset-union");

  DistanceReport ea = distance(catalog_code("color_code_hybrid_ea"), DistanceMode::Dressed);
  CHECK(*ea.d == 1);
  CHECK(ea.witness->str() == "IIIIIIIIIIIZIII");
  CHECK(ea.branch == "coset-union");

  DistanceReport cq = distance(catalog_code("color_code_hybrid_cq"), DistanceMode::Dressed);
  CHECK(*cq.d == 2);
  CHECK(cq.witness->str() == "XYIIIIIIIIIIIII");
  CHECK(cq.branch == "coset-union");
}

TEST_CASE("entanglement-assisted Hamming-based code distances, frozen") {
  EaoaqecCode code = catalog_code("shortened_hamming_ea");
  DistanceReport dressed = distance(code, DistanceMode::Dressed);
  CHECK(*dressed.d == 3);
  CHECK(dressed.witness->str() == "XIIIIIXIXI");
  DistanceReport bare = distance(code, DistanceMode::Bare);
  CHECK(*bare.d == 5);
  CHECK(bare.witness->str() == "IXXIXIXXII");
  DistanceReport noisy = distance(code, DistanceMode::NoisyBob);
  CHECK(*noisy.d == 2);
  CHECK(noisy.witness->str() == "IXIIIIIIIIIX");
  CHECK(noisy.branch == "normalizer-minus-gauge");
}

TEST_CASE("results are independent of the thread count") {
  EaoaqecCode code = catalog_code("subsystem_color_code");
  DistanceReport ref = distance(code, DistanceMode::Dressed, 6, 1);
  for (unsigned threads : {2u, 4u, 0u}) {
    DistanceReport r = distance(code, DistanceMode::Dressed, 6, threads);
    CHECK(r.d == ref.d);
    CHECK(r.witness->str() == ref.witness->str());
    CHECK(r.branch == ref.branch);
  }
}

TEST_CASE("min_weight_element enumerates in the documented order") {
  // First match overall: weight ordering beats position.
  auto weight2 = min_weight_element(4, 4, 0, [](const Bits& x, const Bits& z) {
    std::size_t w = 0;
    for (std::size_t q = 0; q < 4; ++q) w += get_bit(x, q) || get_bit(z, q);
    return w >= 2;
  });
  REQUIRE(weight2.has_value());
  CHECK(weight2->str() == "XXII");  // lexicographic support, X before Y/Z

  // Per-qubit symbol order is X < Y < Z.
  auto first_z = min_weight_element(2, 2, 0, [](const Bits& x, const Bits& z) {
    return get_bit(z, 0) && !get_bit(x, 0);
  });
  REQUIRE(first_z.has_value());
  CHECK(first_z->str() == "ZI");

  // No match below the cutoff.
  auto none = min_weight_element(3, 2, 0, [](const Bits& x, const Bits& z) {
    std::size_t w = 0;
    for (std::size_t q = 0; q < 3; ++q) w += get_bit(x, q) || get_bit(z, q);
    return w == 3;
  });
  CHECK_FALSE(none.has_value());
}
