#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "eaoa/catalog.hpp"
#include "eaoa/correct.hpp"

using namespace eaoa;

namespace {

std::vector<PauliOperator> with_identity(std::size_t n,
                                         std::vector<PauliOperator> errs) {
  errs.insert(errs.begin(), PauliOperator::identity(n));
  return errs;
}

}  // namespace

TEST_CASE("six-qubit code, Alice-side criterion") {
  EaoaqecCode six = catalog_code("six_qubit_example");
  // Qubit 3 sits in the transversal's coset union: X there is uncorrectable.
  auto bad = ea_correctable(
      six, with_identity(6, {PauliOperator::single(6, 2, 'X')}));
  CHECK_FALSE(bad.correctable);
  REQUIRE(bad.witness.has_value());
  CHECK(bad.witness->a == 0);
  CHECK(bad.witness->b == 1);
  CHECK(bad.witness->product.str() == "IIXIII");
  CHECK(bad.witness->violated_branch == "coset-union");

  // Errors on the first two qubits are absorbed by the symplectic pairs.
  auto good = ea_correctable(
      six, with_identity(6, {PauliOperator::single(6, 0, 'X'),
                             PauliOperator::single(6, 0, 'Z'),
                             PauliOperator::single(6, 1, 'X')}));
  CHECK(good.correctable);
  CHECK_FALSE(good.witness.has_value());

  // The gauge qubit tolerates anything.
  CHECK(ea_correctable(six, with_identity(6, {PauliOperator::single(6, 4, 'X'),
                                              PauliOperator::single(6, 4, 'Z')}))
            .correctable);
}

TEST_CASE("six-qubit code, extended-register criterion") {
  EaoaqecCode six = catalog_code("six_qubit_example");
  CHECK(oaqec_correctable(six, with_identity(8, {PauliOperator::single(8, 0, 'X'),
                                                 PauliOperator::single(8, 0, 'Z')}))
            .correctable);
  auto bad =
      oaqec_correctable(six, with_identity(8, {PauliOperator::single(8, 2, 'X')}));
  CHECK_FALSE(bad.correctable);
  CHECK(bad.witness->product.str() == "IIXIIIII");
  CHECK(bad.witness->violated_branch == "coset-union");
}

TEST_CASE("color code, subsystem criterion matches its distance") {
  EaoaqecCode color = catalog_code("subsystem_color_code");
  std::vector<PauliOperator> singles = {PauliOperator::identity(15)};
  for (std::size_t q = 0; q < 15; ++q)
    for (char kind : {'X', 'Y', 'Z'})
      singles.push_back(PauliOperator::single(15, q, kind));
  CHECK(eaoqec_correctable(color, singles).correctable);
  CHECK(ea_correctable(color, singles).correctable);

  // Any single pair with a weight-2 product stays below the distance ...
  PauliOperator x12 =
      PauliOperator::single(15, 0, 'X') * PauliOperator::single(15, 1, 'X');
  CHECK(eaoqec_correctable(color, with_identity(15, {x12})).correctable);
  // ... but a weight-3 bare logical is a violation in both frameworks.
  PauliOperator x123 = x12 * PauliOperator::single(15, 2, 'X');
  for (auto* fn : {&eaoqec_correctable, &ea_correctable}) {
    auto v = (*fn)(color, with_identity(15, {x123}));
    CHECK_FALSE(v.correctable);
    CHECK(v.witness->product.str() == "XXXIIIIIIIIIIII");
    CHECK(v.witness->violated_branch == "normalizer-minus-gauge");
  }
}

TEST_CASE("subsystem criterion requires a trivial transversal") {
  EaoaqecCode six = catalog_code("six_qubit_example");
  CHECK_THROWS(eaoqec_correctable(six, {PauliOperator::identity(6)}));
}

TEST_CASE("hybrid criterion on the canonical five-qubit code") {
  EaoaqecCode code = catalog_code("canonical_eacq_5q");
  CHECK(eacq_correctable(code, with_identity(5, {PauliOperator::single(5, 1, 'X')}))
            .correctable);
  CHECK(eacq_correctable(code, with_identity(5, {PauliOperator::single(5, 1, 'Z')}))
            .correctable);
  CHECK(eacq_correctable(code, with_identity(5, {PauliOperator::single(5, 0, 'Z')}))
            .correctable);
  auto bad =
      eacq_correctable(code, with_identity(5, {PauliOperator::single(5, 4, 'X')}));
  CHECK_FALSE(bad.correctable);
  CHECK(bad.witness->product.str() == "IIIIX");
  CHECK(bad.witness->violated_branch == "normalizer-minus-gauge");
}

TEST_CASE("hybrid criterion rejects non-representable codes") {
  EaoaqecCode code = catalog_code("seven_qubit_non_eacq");
  CHECK_THROWS(eacq_correctable(code, {PauliOperator::identity(7)}));
}
