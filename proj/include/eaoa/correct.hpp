#pragma once

#include <optional>

#include "eaoa/code.hpp"
#include "eaoa/eacq.hpp"

namespace eaoa {

struct CorrectabilityVerdict {
  bool correctable = false;
  struct Witness {
    std::size_t a = 0, b = 0;     // indices into the error list
    PauliOperator product;        // E_a^dagger E_b (bit pattern)
    std::string violated_branch;  // "normalizer-minus-gauge" or "coset-union"
  };
  std::optional<Witness> witness;
};

// Extended-register criterion: every F_a^dagger F_b must avoid
// (N(S) \ <S, G0, iI>)  U  union_{i!=j} T_i T_j^-1 N(S). Errors on n+e qubits.
CorrectabilityVerdict oaqec_correctable(const EaoaqecCode& code,
                                        const std::vector<PauliOperator>& errors);

// Alice-side criterion: every E_a^dagger E_b must lie in
// (<H_I, G0|n, iI>  U  (P_n \ Z(H)))  minus the coset union. Errors on n qubits.
CorrectabilityVerdict ea_correctable(const EaoaqecCode& code,
                                     const std::vector<PauliOperator>& errors);

// Subsystem criterion for a trivial transversal ({I} only):
// E in <H_I, H_G, iI>  U  (P_n \ Z(H)). Throws when the transversal is larger.
CorrectabilityVerdict eaoqec_correctable(const EaoaqecCode& code,
                                         const std::vector<PauliOperator>& errors);

// Hybrid criterion for a representable code with the given split:
// E in <S_{Q,I}, S_{C,I}>  U  (P_n \ N(S_Q)).
CorrectabilityVerdict eacq_correctable(const EaoaqecCode& code, const EacqSplit& split,
                                       const std::vector<PauliOperator>& errors);
// Convenience overload computing the split; throws when not representable.
CorrectabilityVerdict eacq_correctable(const EaoaqecCode& code,
                                       const std::vector<PauliOperator>& errors);

}  // namespace eaoa
