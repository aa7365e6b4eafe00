#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "eaoa/pauli.hpp"

using namespace eaoa;

TEST_CASE("single-qubit constructors") {
  PauliOperator x = PauliOperator::single(1, 0, 'X');
  PauliOperator y = PauliOperator::single(1, 0, 'Y');
  PauliOperator z = PauliOperator::single(1, 0, 'Z');
  CHECK(x.x(0));
  CHECK_FALSE(x.z(0));
  CHECK(x.phase_exp() == 0);
  // Y = i XZ
  CHECK(y.x(0));
  CHECK(y.z(0));
  CHECK(y.phase_exp() == 1);
  CHECK(z.z(0));
  CHECK(x.str() == "X");
  CHECK(y.str() == "Y");
  CHECK(z.str() == "Z");
}

TEST_CASE("product phases, frozen values") {
  PauliOperator x = PauliOperator::single(1, 0, 'X');
  PauliOperator y = PauliOperator::single(1, 0, 'Y');
  PauliOperator z = PauliOperator::single(1, 0, 'Z');
  // X then Z keeps the canonical order: no phase.
  CHECK((x * z).phase_exp() == 0);
  // Z then X reorders: ZX = -XZ, phase exponent 2.
  CHECK((z * x).phase_exp() == 2);
  CHECK((x * y).str() == "iZ");   // XY = iZ
  CHECK((y * x).str() == "-iZ");  // YX = -iZ
  CHECK((y * z).str() == "iX");   // YZ = iX
  CHECK((z * y).str() == "-iX");
  CHECK((y * y).str() == "I");    // Y^2 = I
  CHECK((x * x).is_identity());
}

TEST_CASE("inverse") {
  PauliOperator xz = PauliOperator::single(1, 0, 'X') * PauliOperator::single(1, 0, 'Z');
  // (XZ)(XZ) = -I, so the inverse of XZ is -XZ.
  CHECK((xz * xz).str() == "-I");
  CHECK((xz.inverse() * xz).is_identity());
  PauliOperator y = PauliOperator::single(1, 0, 'Y');
  CHECK((y.inverse() * y).is_identity());
  CHECK(y.inverse().str() == "Y");  // Y is self-inverse
}

TEST_CASE("commutation truth table") {
  auto sgl = [](char k) { return PauliOperator::single(1, 0, k); };
  CHECK(commutes(sgl('X'), sgl('X')));
  CHECK_FALSE(commutes(sgl('X'), sgl('Z')));
  CHECK_FALSE(commutes(sgl('X'), sgl('Y')));
  CHECK_FALSE(commutes(sgl('Y'), sgl('Z')));
  // Two anticommuting columns commute overall.
  PauliOperator xx = parse_pauli("XX", 2), zz = parse_pauli("ZZ", 2);
  CHECK(commutes(xx, zz));
  CHECK_FALSE(commutes(parse_pauli("XI", 2), zz));
}

TEST_CASE("parsing compact and cell forms") {
  PauliOperator y = parse_pauli("Y", 1);
  CHECK(y.x(0));
  CHECK(y.z(0));
  CHECK(y.phase_exp() == 1);

  CHECK(parse_pauli("-iXZ", 1).phase_exp() == 3);
  CHECK(parse_pauli("-X", 1).phase_exp() == 2);
  CHECK(parse_pauli("+Z", 1).str() == "Z");

  // Cell form with an ebit separator.
  PauliOperator op = parse_pauli("Z I I I I I | Z I", 8);
  CHECK(op.z(0));
  CHECK(op.z(6));
  CHECK(op.weight() == 2);

  // Compact XZ folding only happens when needed to fit.
  PauliOperator folded = parse_pauli("XZZ", 2);  // must fold: (XZ)(Z)
  CHECK(folded.x(0));
  CHECK(folded.z(0));
  CHECK(folded.z(1));
  PauliOperator unfolded = parse_pauli("XZ", 2);  // fits as X, Z
  CHECK(unfolded.x(0));
  CHECK_FALSE(unfolded.z(0));
  CHECK(unfolded.z(1));

  CHECK_THROWS_AS(parse_pauli("XQ", 2), ParseError);
  CHECK_THROWS_AS(parse_pauli("XXX", 2), ParseError);
  CHECK_THROWS_AS(parse_pauli("", 2), ParseError);
}

TEST_CASE("str round-trips through parse_pauli") {
  for (const char* s : {"IXYZ", "-IXYZ", "iZZII", "-iYYYY", "XZXZ"}) {
    PauliOperator op = parse_pauli(s, 4);
    CHECK(parse_pauli(op.str(), 4) == op);
  }
}

TEST_CASE("embedding, restriction, permutation, weight") {
  PauliOperator op = parse_pauli("XY", 2);
  PauliOperator emb = op.embedded(5, 2);
  CHECK(emb.str() == "IIXYI");
  CHECK(emb.weight() == 2);
  CHECK(emb.identity_on(0, 2));
  CHECK_FALSE(emb.identity_on(2, 4));
  // Restriction drops cells but keeps the stored phase (the i from Y).
  CHECK(emb.restricted_prefix(3).str() == "iIIX");
  CHECK(emb.restricted({3, 2}).str() == "YX");
  PauliOperator perm = emb.permuted({4, 3, 2, 1, 0});
  CHECK(perm.str() == "IYXII");
}
