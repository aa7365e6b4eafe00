#pragma once

#include <optional>
#include <string>

#include "eaoa/code.hpp"

namespace eaoa {

/*
 * Split of the Pauli frame group into quantum and classical parts relative
 * to the transversal. classical_transversal[i] is the transversal-group
 * element assigned bijectively to classical_gens[i].
 */
struct EacqSplit {
  std::vector<PauliOperator> quantum_gens;
  std::vector<PauliOperator> classical_gens;
  std::vector<PauliOperator> classical_transversal;
};

// Generators of the subgroup of H commuting with every element of the group
// generated by the transversal (restricted to Alice's qubits).
GeneratorSet quantum_stabilizer_subgroup(const EaoaqecCode& code);

// The classification pass over H's generators against the transversal
// generators. t0n are generators of the transversal group on n qubits.
EacqSplit extract_split(const GeneratorSet& h, const std::vector<PauliOperator>& t0n);

// Whether the transversal's cosets of the normalizer of S form a group.
bool coset_set_is_group(const EaoaqecCode& code);

struct RepresentabilityResult {
  bool representable = false;
  // "" when representable; otherwise "coset-set-not-group" or
  // "classical-generator-outside-double-centralizer".
  std::string obstruction;
  std::string detail;
  std::optional<EacqSplit> split;  // cleaned split when representable
};

RepresentabilityResult is_eacq_representable(const EaoaqecCode& code);

struct SqBoundCheck {
  std::size_t d_code = 0, d_sq = 0;
  bool d_code_exceeds_cutoff = false, d_sq_exceeds_cutoff = false;
  bool holds = false;  // d(C) >= d(C_{S_Q}) as far as the cutoff can tell
};

// Distance lower bound: the code's dressed distance against the dressed
// distance of the code generated by the quantum stabilizer subgroup alone.
SqBoundCheck sq_distance_bound_check(const EaoaqecCode& code, int cutoff,
                                     unsigned threads = 0);

}  // namespace eaoa
