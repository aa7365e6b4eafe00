#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <unordered_set>

#include "eaoa/generator_set.hpp"

using namespace eaoa;

namespace {

std::string bit_key(const PauliOperator& op) {
  std::string k;
  for (Word w : op.x_bits()) k += std::to_string(w) + ",";
  k += "|";
  for (Word w : op.z_bits()) k += std::to_string(w) + ",";
  return k;
}

// All subset products of the generators, phase-blind.
std::unordered_set<std::string> brute_span(const std::vector<PauliOperator>& gens,
                                           std::size_t n) {
  std::unordered_set<std::string> span;
  for (std::size_t mask = 0; mask < (std::size_t(1) << gens.size()); ++mask) {
    PauliOperator prod = PauliOperator::identity(n);
    for (std::size_t i = 0; i < gens.size(); ++i)
      if ((mask >> i) & 1) prod = prod * gens[i];
    span.insert(bit_key(prod));
  }
  return span;
}

PauliOperator random_op(std::mt19937& rng, std::size_t n) {
  Bits x(words_for(n), 0), z(words_for(n), 0);
  for (std::size_t q = 0; q < n; ++q) {
    set_bit(x, q, rng() & 1);
    set_bit(z, q, rng() & 1);
  }
  return PauliOperator::from_bits(n, x, z);
}

}  // namespace

TEST_CASE("reduce keeps a maximal independent sublist") {
  std::vector<PauliOperator> ops = {parse_pauli("XI", 2), parse_pauli("IX", 2),
                                    parse_pauli("XX", 2), parse_pauli("ZZ", 2)};
  GeneratorSet::ReduceInfo info;
  GeneratorSet g = GeneratorSet::reduce(ops, info);
  CHECK(g.size() == 3);
  CHECK(info.dropped == 1);
  CHECK_FALSE(info.minus_identity);
  CHECK(g[0].str() == "XI");
  CHECK(g[1].str() == "IX");
  CHECK(g[2].str() == "ZZ");
}

TEST_CASE("reduce detects a -I dependency") {
  // X * Z * (XZ up to phase) multiplies to a scalar != +1.
  std::vector<PauliOperator> ops = {parse_pauli("X", 1), parse_pauli("Z", 1),
                                    parse_pauli("Y", 1)};
  GeneratorSet::ReduceInfo info;
  GeneratorSet g = GeneratorSet::reduce(ops, info);
  CHECK(g.size() == 2);
  CHECK(info.minus_identity);

  // With the phase adjusted, the dependency multiplies to +I:
  // (X)(Z)(-XZ) = -(XZ)(XZ) = I.
  std::vector<PauliOperator> clean = {parse_pauli("X", 1), parse_pauli("Z", 1),
                                      parse_pauli("-XZ", 1)};
  GeneratorSet::ReduceInfo info2;
  GeneratorSet::reduce(clean, info2);
  CHECK_FALSE(info2.minus_identity);
}

TEST_CASE("push rejects dependent operators") {
  GeneratorSet g(2);
  g.push(parse_pauli("XI", 2));
  g.push(parse_pauli("IX", 2));
  CHECK_THROWS(g.push(parse_pauli("XX", 2)));
  CHECK(g.size() == 2);
}

TEST_CASE("in_span and syndrome match brute force on random subgroups") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    std::size_t n = 2 + rng() % 5;
    GeneratorSet g(n);
    std::vector<PauliOperator> gens;
    int guard = 0;
    while (gens.size() < 1 + rng() % 5 && guard++ < 100) {
      PauliOperator op = random_op(rng, n);
      if (op.is_identity_bits() || g.in_span(op)) continue;
      g.push(op);
      gens.push_back(op);
    }
    if (gens.empty()) continue;
    auto span = brute_span(gens, n);
    for (int t = 0; t < 50; ++t) {
      PauliOperator op = random_op(rng, n);
      CHECK(g.in_span(op) == (span.count(bit_key(op)) > 0));
      Syndrome s = g.syndrome(op);
      for (std::size_t i = 0; i < gens.size(); ++i)
        CHECK(get_bit(s.bits, i) == !commutes(op, gens[i]));
      CHECK(g.in_centralizer(op) == !s.any());
    }
  }
}

TEST_CASE("spans_same") {
  GeneratorSet a = GeneratorSet::reduce({parse_pauli("XI", 2), parse_pauli("IX", 2)});
  GeneratorSet b = GeneratorSet::reduce({parse_pauli("XX", 2), parse_pauli("IX", 2)});
  GeneratorSet c = GeneratorSet::reduce({parse_pauli("XI", 2), parse_pauli("IZ", 2)});
  CHECK(a.spans_same(b));
  CHECK_FALSE(a.spans_same(c));
}

TEST_CASE("decompose reproduces the six-generator reference pairing") {
  std::size_t n = 6;
  std::vector<PauliOperator> gens = {
      PauliOperator::single(n, 0, 'Z'), PauliOperator::single(n, 0, 'X'),
      PauliOperator::single(n, 1, 'Z'), PauliOperator::single(n, 1, 'X'),
      PauliOperator::single(n, 2, 'Z'), PauliOperator::single(n, 3, 'Z')};
  SymplecticDecomposition d = decompose(gens);
  REQUIRE(d.pairs.size() == 2);
  REQUIRE(d.isotropic.size() == 2);
  CHECK(d.pairs[0].first.str() == "ZIIIII");
  CHECK(d.pairs[0].second.str() == "XIIIII");
  CHECK(d.pairs[1].first.str() == "IZIIII");
  CHECK(d.pairs[1].second.str() == "IXIIII");
  CHECK(d.isotropic[0].str() == "IIZIII");
  CHECK(d.isotropic[1].str() == "IIIZII");
}

TEST_CASE("decompose cleans overlapping generators") {
  // ZZ and XX anticommute with XI only through their first column.
  std::vector<PauliOperator> gens = {parse_pauli("ZI", 2), parse_pauli("XX", 2),
                                     parse_pauli("ZZ", 2)};
  SymplecticDecomposition d = decompose(gens);
  REQUIRE(d.pairs.size() == 1);
  REQUIRE(d.isotropic.size() == 1);
  CHECK(!commutes(d.pairs[0].first, d.pairs[0].second));
  CHECK(commutes(d.isotropic[0], d.pairs[0].first));
  CHECK(commutes(d.isotropic[0], d.pairs[0].second));
}

TEST_CASE("destabilizers anticommute with exactly their isotropic generator") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 20; ++trial) {
    std::size_t n = 3 + rng() % 4;
    GeneratorSet g(n);
    std::vector<PauliOperator> gens;
    int guard = 0;
    while (gens.size() < 2 + rng() % 4 && guard++ < 100) {
      PauliOperator op = random_op(rng, n);
      if (op.is_identity_bits() || g.in_span(op)) continue;
      g.push(op);
      gens.push_back(op);
    }
    SymplecticDecomposition d = decompose(gens);
    std::vector<PauliOperator> ds = destabilizers(d, n);
    REQUIRE(ds.size() == d.isotropic.size());
    for (std::size_t i = 0; i < ds.size(); ++i) {
      for (std::size_t j = 0; j < d.isotropic.size(); ++j)
        CHECK(commutes(ds[i], d.isotropic[j]) == (i != j));
      for (const SymplecticPair& p : d.pairs) {
        CHECK(commutes(ds[i], p.first));
        CHECK(commutes(ds[i], p.second));
      }
    }
  }
}

TEST_CASE("symplectic vectors") {
  PauliOperator op = parse_pauli("XZ", 2);
  Bits v = symplectic_vector(op);       // [x | z]
  Bits w = symplectic_dual_vector(op);  // [z | x]
  CHECK(get_bit(v, 0));
  CHECK_FALSE(get_bit(v, 1));
  CHECK_FALSE(get_bit(v, 2));
  CHECK(get_bit(v, 3));
  CHECK_FALSE(get_bit(w, 0));
  CHECK(get_bit(w, 1));
  CHECK(get_bit(w, 2));
  CHECK_FALSE(get_bit(w, 3));
  // <dual(p), vector(q)> = commutation bit
  PauliOperator q = parse_pauli("ZI", 2);
  CHECK(parity_of_and(w, symplectic_vector(q)) == !commutes(op, q));
}
