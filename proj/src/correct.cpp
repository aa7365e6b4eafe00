#include "eaoa/correct.hpp"

#include "membership.hpp"

namespace eaoa {

namespace {

// An error set is correctable iff no pairwise product falls in the
// uncorrectable set (diagonal products are the identity and never do).
CorrectabilityVerdict scan_pairs(const detail::UncorrectableSet& set,
                                 const std::vector<PauliOperator>& errors) {
  CorrectabilityVerdict v;
  v.correctable = true;
  for (std::size_t a = 0; a < errors.size(); ++a)
    for (std::size_t b = a + 1; b < errors.size(); ++b) {
      PauliOperator prod = errors[a].inverse() * errors[b];
      std::string branch;
      if (set.contains(prod, &branch)) {
        v.correctable = false;
        v.witness = CorrectabilityVerdict::Witness{a, b, prod, branch};
        return v;
      }
    }
  return v;
}

void require_register(const std::vector<PauliOperator>& errors, std::size_t nq,
                      const char* what) {
  for (const PauliOperator& e : errors)
    if (e.num_qubits() != nq)
      throw CodeError(std::string(what) + ": error operators must act on " +
                      std::to_string(nq) + " qubits");
}

}  // namespace

CorrectabilityVerdict oaqec_correctable(const EaoaqecCode& code,
                                        const std::vector<PauliOperator>& errors) {
  require_register(errors, code.n + code.e, "oaqec_correctable");
  return scan_pairs(detail::UncorrectableSet::noisy_bob(code), errors);
}

CorrectabilityVerdict ea_correctable(const EaoaqecCode& code,
                                     const std::vector<PauliOperator>& errors) {
  require_register(errors, code.n, "ea_correctable");
  return scan_pairs(detail::UncorrectableSet::dressed(code), errors);
}

CorrectabilityVerdict eaoqec_correctable(const EaoaqecCode& code,
                                         const std::vector<PauliOperator>& errors) {
  if (code.transversal.size() != 1)
    throw CodeError("eaoqec_correctable requires a trivial transversal");
  require_register(errors, code.n, "eaoqec_correctable");
  return scan_pairs(detail::UncorrectableSet::dressed(code), errors);
}

CorrectabilityVerdict eacq_correctable(const EaoaqecCode& code, const EacqSplit& split,
                                       const std::vector<PauliOperator>& errors) {
  require_register(errors, code.n, "eacq_correctable");
  detail::UncorrectableSet set;
  set.nq = code.n;
  // Uncorrectable: N(S_Q) minus the isotropic parts of the split.
  GeneratorSet sq = split.quantum_gens.empty()
                        ? GeneratorSet(code.n)
                        : GeneratorSet::reduce(split.quantum_gens);
  for (const PauliOperator& g : sq.generators()) set.table.add(g);
  set.allowed = gf2::Echelon(2 * code.n);
  SymplecticDecomposition qd = decompose(split.quantum_gens);
  SymplecticDecomposition cd = decompose(split.classical_gens);
  for (const PauliOperator& g : qd.isotropic) set.allowed.insert(symplectic_vector(g));
  for (const PauliOperator& g : cd.isotropic) set.allowed.insert(symplectic_vector(g));
  // First branch: inside N(S_Q) (syndrome zero) but outside the allowed span.
  return scan_pairs(set, errors);
}

CorrectabilityVerdict eacq_correctable(const EaoaqecCode& code,
                                       const std::vector<PauliOperator>& errors) {
  RepresentabilityResult rep = is_eacq_representable(code);
  if (!rep.representable)
    throw CodeError("eacq_correctable: code is not representable (" + rep.obstruction +
                    ")");
  return eacq_correctable(code, *rep.split, errors);
}

}  // namespace eaoa
