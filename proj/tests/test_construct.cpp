#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>
#include <stdexcept>

#include "eaoa/catalog.hpp"
#include "eaoa/code_io.hpp"
#include "eaoa/construct.hpp"

using namespace eaoa;

namespace {

const HypothesisCheck& find_check(const ConstructionResult& r, const std::string& name) {
  for (const HypothesisCheck& h : r.hypothesis_report)
    if (h.name == name) return h;
  throw std::runtime_error("missing hypothesis check: " + name);
}

}  // namespace

TEST_CASE("gauge fixing the six-qubit code, frozen") {
  EaoaqecCode six = catalog_code("six_qubit_example");
  ConstructionRequest req;
  req.pair_indices = {0};

  ConstructionResult r = gauge_fix(six, req);
  CHECK(r.before.str() == "[[6,1,1;1,2,3]]");
  CHECK(r.after.str() == "[[6,1,1;0,2,6]]");
  CHECK(r.coset_collisions == 0);
  CHECK(validate(r.code).ok());
  // Default roles: the z gauge member joins S, the x member multiplies the
  // transversal. Full-product policy yields all six coset representatives.
  REQUIRE(r.code.transversal.size() == 6);
  CHECK(r.code.transversal[1].str() == "IIIIXIII");
  CHECK(r.code.s_group.in_span(PauliOperator::single(8, 4, 'Z')));
  CHECK(find_check(r, "gauge-fix-distance-preserved").status ==
        HypothesisCheck::Status::Pass);
  CHECK(find_check(r, "distance-comparison").status == HypothesisCheck::Status::Pass);

  // swap_roles flips which member goes where.
  req.swap_roles = true;
  ConstructionResult rs = gauge_fix(six, req);
  CHECK(rs.after.str() == "[[6,1,1;0,2,6]]");
  CHECK(rs.code.transversal[1].str() == "IIIIZIII");
  CHECK(rs.code.s_group.in_span(PauliOperator::single(8, 4, 'X')));
}

TEST_CASE("entanglement-assisted gauge fixing the six-qubit code, frozen") {
  EaoaqecCode six = catalog_code("six_qubit_example");
  ConstructionRequest req;
  req.pair_indices = {0};
  ConstructionResult r = ea_gauge_fix(six, req);
  CHECK(r.after.str() == "[[6,1,1;0,3,3]]");
  CHECK(r.code.e == 3);
  CHECK(validate(r.code).ok());
  CHECK(find_check(r, "ea-gauge-fix-distance-non-decreasing").status ==
        HypothesisCheck::Status::Guaranteed);
  // Transversal is carried over, padded to the new register.
  REQUIRE(r.code.transversal.size() == 3);
  CHECK(r.code.transversal[1].str() == "IIXIIIIII");
}

TEST_CASE("qubit cleaning on the color code, frozen") {
  EaoaqecCode color = catalog_code("subsystem_color_code");
  ConstructionRequest req;
  req.e_qubits = {0, 1};
  ConstructionResult r = clean_qubits(color, req);
  CHECK(r.before.str() == "[[15,1,3;6,0,1]]");
  CHECK(r.after.str() == "[[13,1,3;6,2,1]]");
  CHECK(r.ebit_qubits == std::vector<std::size_t>{0, 1});
  CHECK(validate(r.code).ok());
  REQUIRE(r.reduced_stabilizers.size() == 8);
  CHECK(format_cells(r.reduced_stabilizers[0], 0) == "X I X I X I X I X I X I X I X");
  CHECK(format_cells(r.reduced_stabilizers[1], 0) == "I X X I I X X I I X X I I X X");
  CHECK(find_check(r, "cleaned-distance-non-decreasing").status ==
        HypothesisCheck::Status::Guaranteed);
  CHECK(find_check(r, "distance-comparison").detail == "d = 3 -> 3");

  // The CSS shortcut picks the same qubits and produces the same code.
  ConstructionRequest css;
  css.ebits = 2;
  ConstructionResult rc = css_clean_qubits(color, css);
  CHECK(rc.ebit_qubits == std::vector<std::size_t>{0, 1});
  std::ostringstream a, b;
  write_code(a, r.code);
  write_code(b, rc.code);
  CHECK(a.str() == b.str());
}

TEST_CASE("find_valid_eq enumerates lexicographically") {
  auto eqs = find_valid_eq(catalog_code("color_code_hybrid_cq"), 2, 3);
  REQUIRE(eqs.size() == 3);
  CHECK(eqs[0] == std::vector<std::size_t>{0, 1});
  CHECK(eqs[1] == std::vector<std::size_t>{0, 2});
  CHECK(eqs[2] == std::vector<std::size_t>{0, 3});
}

TEST_CASE("invalid construction requests throw") {
  EaoaqecCode six = catalog_code("six_qubit_example");
  ConstructionRequest bad_idx;
  bad_idx.pair_indices = {5};
  CHECK_THROWS(gauge_fix(six, bad_idx));
  CHECK_THROWS(ea_gauge_fix(six, bad_idx));
  ConstructionRequest bad_clean;
  bad_clean.e_qubits = {0};
  CHECK_THROWS(clean_qubits(six, bad_clean));  // six already has ebits
}
