#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "eaoa/gf2.hpp"
#include "eaoa/pauli.hpp"

namespace eaoa {

// Anticommutation pattern of an operator against a generator list; bit i is
// set when the operator anticommutes with generator i.
struct Syndrome {
  Bits bits;
  bool any() const { return !all_zero(bits); }
  bool operator==(const Syndrome& o) const = default;
};

struct SyndromeHash {
  std::size_t operator()(const Syndrome& s) const {
    std::size_t h = 1469598103934665603ull;
    for (Word w : s.bits) {
      h ^= w;
      h *= 1099511628211ull;
    }
    return h;
  }
};

// Symplectic vector [x | z] of an operator, 2n bits.
Bits symplectic_vector(const PauliOperator& p);
// [z | x], i.e. the row whose dot product with symplectic_vector(q) gives the
// commutation bit of p and q.
Bits symplectic_dual_vector(const PauliOperator& p);

/*
 * An independent generating list for a Pauli subgroup (phases kept on the
 * generators, membership tests phase-blind), with a cached row-echelon basis
 * of the generators' symplectic vectors.
 */
class GeneratorSet {
 public:
  GeneratorSet() : echelon_(0) {}
  explicit GeneratorSet(std::size_t num_qubits)
      : n_(num_qubits), echelon_(2 * num_qubits) {}

  struct ReduceInfo {
    // A dependency among the inputs multiplied to identity bits with a
    // nonzero phase; the group then contains -I (possibly via iI).
    bool minus_identity = false;
    std::size_t dropped = 0;  // identity rows / dependent rows discarded
  };

  // Maximal independent sublist, earliest operators kept on ties. Identity
  // rows are dropped. Throws ParseError on an empty input list.
  static GeneratorSet reduce(const std::vector<PauliOperator>& ops);
  static GeneratorSet reduce(const std::vector<PauliOperator>& ops, ReduceInfo& info);
  static GeneratorSet from_independent(std::vector<PauliOperator> ops);

  std::size_t num_qubits() const { return n_; }
  std::size_t size() const { return gens_.size(); }
  bool empty() const { return gens_.empty(); }
  const std::vector<PauliOperator>& generators() const { return gens_; }
  const PauliOperator& operator[](std::size_t i) const { return gens_[i]; }

  // Add an operator known (or required) to be independent of the current
  // generators; throws if it is dependent.
  void push(const PauliOperator& op);

  bool in_span(const PauliOperator& op) const;  // phase-blind
  bool in_span_bits(const Bits& xz) const;
  bool in_centralizer(const PauliOperator& op) const;
  Syndrome syndrome(const PauliOperator& op) const;
  Syndrome syndrome_bits(const Bits& x, const Bits& z) const;
  bool spans_same(const GeneratorSet& other) const;

 private:
  std::size_t n_ = 0;
  std::vector<PauliOperator> gens_;
  gf2::Echelon echelon_;
  std::vector<Bits> duals_;  // symplectic_dual_vector per generator
};

struct SymplecticPair {
  PauliOperator first;   // earlier generator in scan order
  PauliOperator second;  // its anticommuting partner
};

/*
 * Isotropic-symplectic decomposition by symplectic Gram-Schmidt, scanning
 * generators in input order: the first anticommuting partner of the current
 * generator becomes its pair mate and the remaining generators are cleaned
 * by multiplying with the pair members.
 */
struct SymplecticDecomposition {
  std::vector<SymplecticPair> pairs;
  std::vector<PauliOperator> isotropic;
};

SymplecticDecomposition decompose(const GeneratorSet& gens);
SymplecticDecomposition decompose(const std::vector<PauliOperator>& gens);

/*
 * For each isotropic generator g_j of the decomposition, one operator that
 * anticommutes with g_j and commutes with every other generator (pair
 * members and the other isotropic generators).
 */
std::vector<PauliOperator> destabilizers(const SymplecticDecomposition& d,
                                         std::size_t num_qubits);

}  // namespace eaoa
