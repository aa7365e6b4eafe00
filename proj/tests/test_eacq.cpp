#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "eaoa/catalog.hpp"
#include "eaoa/eacq.hpp"

using namespace eaoa;

TEST_CASE("coset set group property, frozen decisions") {
  CHECK_FALSE(coset_set_is_group(catalog_code("six_qubit_example")));
  CHECK_FALSE(coset_set_is_group(catalog_code("color_code_hybrid_gf")));
  CHECK_FALSE(coset_set_is_group(catalog_code("color_code_hybrid_cq")));
  CHECK(coset_set_is_group(catalog_code("color_code_hybrid_ea")));
  CHECK(coset_set_is_group(catalog_code("seven_qubit_non_eacq")));
  CHECK(coset_set_is_group(catalog_code("canonical_eacq_5q")));
}

TEST_CASE("representability decisions across the catalog, frozen") {
  auto check = [](const char* name, bool rep, const char* obstruction) {
    INFO("code: ", name);
    RepresentabilityResult r = is_eacq_representable(catalog_code(name));
    CHECK(r.representable == rep);
    CHECK(r.obstruction == obstruction);
    CHECK(r.split.has_value() == rep);
  };
  check("six_qubit_example", false, "coset-set-not-group");
  check("subsystem_color_code", true, "");
  check("color_code_hybrid_gf", false, "coset-set-not-group");
  check("color_code_hybrid_ea", true, "");
  check("color_code_hybrid_cq", false, "coset-set-not-group");
  check("seven_qubit_non_eacq", false,
        "classical-generator-outside-double-centralizer");
  check("canonical_eacq_5q", true, "");
  check("shortened_hamming_ea", true, "");
}

TEST_CASE("quantum stabilizer subgroup of the seven-qubit code") {
  EaoaqecCode code = catalog_code("seven_qubit_non_eacq");
  GeneratorSet qss = quantum_stabilizer_subgroup(code);
  REQUIRE(qss.size() == 1);
  CHECK(qss[0].str() == "-iZZXYYXY");
  // It really is the subgroup of H commuting with the whole transversal.
  CHECK(code.h_group.in_span(qss[0]));
  for (const PauliOperator& t : code.transversal)
    CHECK(commutes(qss[0], t.restricted_prefix(7)));
}

TEST_CASE("split of the canonical five-qubit hybrid code, frozen") {
  RepresentabilityResult r = is_eacq_representable(catalog_code("canonical_eacq_5q"));
  REQUIRE(r.representable);
  REQUIRE(r.split.has_value());
  const EacqSplit& s = *r.split;
  REQUIRE(s.quantum_gens.size() == 1);
  CHECK(s.quantum_gens[0].str() == "IZIII");
  REQUIRE(s.classical_gens.size() == 3);
  CHECK(s.classical_gens[0].str() == "ZIIII");
  CHECK(s.classical_gens[1].str() == "IIZII");
  CHECK(s.classical_gens[2].str() == "IIXII");
  REQUIRE(s.classical_transversal.size() == 3);
  CHECK(s.classical_transversal[0].str() == "XIIII");
  CHECK(s.classical_transversal[1].str() == "IIXII");
  CHECK(s.classical_transversal[2].str() == "IIZII");
  // Each classical generator anticommutes with exactly its assigned
  // transversal element.
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      CHECK(commutes(s.classical_gens[i], s.classical_transversal[j]) == (i != j));
  // The quantum generator commutes with every transversal element.
  for (const PauliOperator& t : s.classical_transversal)
    CHECK(commutes(s.quantum_gens[0], t));
}

TEST_CASE("purely quantum codes split with an empty classical part") {
  RepresentabilityResult r = is_eacq_representable(catalog_code("subsystem_color_code"));
  REQUIRE(r.representable);
  CHECK(r.split->classical_gens.empty());
  CHECK(r.split->quantum_gens.size() == 8);
}

TEST_CASE("quantum-subgroup distance bound") {
  SqBoundCheck five = sq_distance_bound_check(catalog_code("canonical_eacq_5q"), 5);
  CHECK(five.d_code == 1);
  CHECK(five.d_sq == 1);
  CHECK(five.holds);

  SqBoundCheck color = sq_distance_bound_check(catalog_code("subsystem_color_code"), 6);
  CHECK(color.d_code == 3);
  CHECK(color.d_sq == 3);
  CHECK(color.holds);
  CHECK_FALSE(color.d_code_exceeds_cutoff);
}
