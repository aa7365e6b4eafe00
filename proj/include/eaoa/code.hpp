#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "eaoa/generator_set.hpp"

namespace eaoa {

struct CodeError : std::exception {
  explicit CodeError(std::string m) : msg(std::move(m)) {}
  const char* what() const noexcept override { return msg.c_str(); }
  std::string msg;
};

struct CodeParameters {
  std::size_t n = 0;  // Alice qubits
  std::size_t k = 0;  // logical qubits
  std::size_t r = 0;  // gauge pairs
  std::size_t e = 0;  // ebits
  std::size_t c_b = 0;  // transversal (classical) size
  std::optional<std::size_t> d;  // distance, when computed
  bool d_exceeds_cutoff = false;
  std::string str() const;  // [[n,k;r,e,c_b]] or [[n,k,d;r,e,c_b]]
};

/*
 * A code is the tuple (H, S, G0, L0, T0): the Pauli frame group H on Alice's
 * n qubits, its Abelian extension S on n+e qubits (ebits are the trailing e
 * columns), gauge pairs, logical pairs and the coset transversal. Gauge,
 * logical and transversal operators live on n+e qubits and are identity on
 * the ebit columns.
 */
struct EaoaqecCode {
  std::string name;
  std::size_t n = 0;
  std::size_t e = 0;
  GeneratorSet h_group;  // on n qubits
  GeneratorSet s_group;  // on n+e qubits
  std::vector<SymplecticPair> gauge_pairs;    // (x_op, z_op)
  std::vector<SymplecticPair> logical_pairs;  // (x_op, z_op)
  std::vector<PauliOperator> transversal;     // [0] is the identity

  std::size_t s() const { return h_group.size() - 2 * e; }  // isotropic count
  std::size_t r() const { return gauge_pairs.size(); }
  std::size_t k() const { return n - e - s() - r(); }

  // All gauge / logical operators flattened, on n+e qubits.
  std::vector<PauliOperator> gauge_ops() const;
  std::vector<PauliOperator> logical_ops() const;
};

// Extend an isotropic-symplectic decomposed group to an Abelian group by
// appending one ebit per symplectic pair (pair j on qubit n+j; the earlier
// member gets Z, the partner gets X) and extending isotropic generators with
// identity. Returns the extension and the number of ebits.
std::pair<GeneratorSet, std::size_t> extend_to_abelian(const GeneratorSet& h);

/*
 * Assemble a code. h_ops live on n qubits. gauge_flat / logical_flat /
 * transversal may be given on n or n+e qubits (padded with identity on the
 * ebits). gauge_flat and logical_flat are consecutive (x, z) pairs in listed
 * order; they are re-paired by symplectic Gram-Schmidt when not already
 * symplectic. explicit_s, when given, is used verbatim as the generator list
 * of S (on n+e qubits). Logical pairs are derived canonically when
 * logical_flat is empty.
 */
EaoaqecCode make_code(std::size_t n, const std::vector<PauliOperator>& h_ops,
                      const std::vector<PauliOperator>& gauge_flat,
                      const std::vector<PauliOperator>& logical_flat,
                      const std::vector<PauliOperator>& transversal,
                      const std::vector<PauliOperator>& explicit_s = {},
                      const std::string& name = "");

struct ValidationCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct ValidationReport {
  std::vector<ValidationCheck> checks;
  bool ok() const;
};

ValidationReport validate(const EaoaqecCode& code);

CodeParameters parameters(const EaoaqecCode& code);

// The full 2^m coset transversal (m = |H| generators): all products of the
// symplectic pair members and the isotropic destabilizers, each extended
// with identity to n+e qubits. Throws when m exceeds the limit.
std::vector<PauliOperator> full_transversal(const EaoaqecCode& code,
                                            std::size_t limit = 20);

// Canonical completion of the logical pairs: a basis of the operators on
// Alice's qubits commuting with S and the gauge group, reduced modulo the
// isotropic + gauge span and symplectic-paired.
std::vector<SymplecticPair> derive_logical_pairs(
    std::size_t n, std::size_t e, const GeneratorSet& h_group,
    const GeneratorSet& s_group, const std::vector<SymplecticPair>& gauge_pairs);

}  // namespace eaoa
