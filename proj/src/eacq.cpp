#include "eaoa/eacq.hpp"

#include <unordered_set>

#include "eaoa/distance.hpp"

namespace eaoa {

namespace {

// Independent generators of the transversal group, restricted to Alice's
// qubits, identity dropped. Empty when the transversal is trivial.
std::vector<PauliOperator> transversal_generators(const EaoaqecCode& code) {
  std::vector<PauliOperator> restricted;
  for (const PauliOperator& t : code.transversal) {
    PauliOperator r = t.restricted_prefix(code.n);
    if (!r.is_identity_bits()) restricted.push_back(r);
  }
  if (restricted.empty()) return {};
  return GeneratorSet::reduce(restricted).generators();
}

}  // namespace

GeneratorSet quantum_stabilizer_subgroup(const EaoaqecCode& code) {
  std::vector<PauliOperator> tgens = transversal_generators(code);
  const auto& hg = code.h_group.generators();
  if (tgens.empty()) return code.h_group;
  // Products prod_i H_i^{v_i} commuting with every transversal generator:
  // kernel of the anticommutation matrix over the exponent vector v.
  std::vector<Bits> rows;
  for (const PauliOperator& t : tgens) {
    Bits row(words_for(hg.size()), 0);
    for (std::size_t i = 0; i < hg.size(); ++i)
      if (!commutes(t, hg[i])) set_bit(row, i, true);
    rows.push_back(std::move(row));
  }
  std::vector<PauliOperator> gens;
  for (const Bits& v : gf2::kernel_basis(rows, hg.size())) {
    PauliOperator prod = PauliOperator::identity(code.n);
    for (std::size_t i = 0; i < hg.size(); ++i)
      if (get_bit(v, i)) prod = prod * hg[i];
    gens.push_back(prod);
  }
  if (gens.empty()) return GeneratorSet(code.n);
  return GeneratorSet::reduce(gens);
}

EacqSplit extract_split(const GeneratorSet& h, const std::vector<PauliOperator>& t0n) {
  EacqSplit split;
  std::vector<PauliOperator> tgen = t0n;
  for (const PauliOperator& h_in : h.generators()) {
    PauliOperator hi = h_in;
    // A transversal generator anticommuting with hi certifies hi classical.
    std::size_t hit = tgen.size();
    for (std::size_t j = 0; j < tgen.size(); ++j)
      if (!commutes(tgen[j], hi)) {
        hit = j;
        break;
      }
    if (hit != tgen.size()) {
      PauliOperator tj = tgen[hit];
      tgen.erase(tgen.begin() + hit);
      for (PauliOperator& tp : tgen)
        if (!commutes(tp, hi)) tp = tp * tj;
      split.classical_gens.push_back(hi);
      split.classical_transversal.push_back(tj);
      continue;
    }
    // Clean hi against the recorded classical pairs, then call it quantum.
    for (std::size_t k = 0; k < split.classical_gens.size(); ++k)
      if (!commutes(hi, split.classical_transversal[k]))
        hi = hi * split.classical_gens[k];
    bool dirty = false;
    for (const PauliOperator& tc : split.classical_transversal)
      if (!commutes(hi, tc)) dirty = true;
    if (dirty) {
      // Sequential cleaning can undo earlier fixes; solve for the exponent
      // vector over the classical generators instead.
      std::size_t m = split.classical_gens.size();
      std::vector<Bits> rows;
      std::vector<bool> rhs;
      for (std::size_t k = 0; k < m; ++k) {
        Bits row(words_for(m), 0);
        for (std::size_t j = 0; j < m; ++j)
          if (!commutes(split.classical_gens[j], split.classical_transversal[k]))
            set_bit(row, j, true);
        rows.push_back(std::move(row));
        rhs.push_back(!commutes(h_in, split.classical_transversal[k]));
      }
      if (auto sol = gf2::solve(rows, m, rhs)) {
        hi = h_in;
        for (std::size_t j = 0; j < m; ++j)
          if (get_bit(*sol, j)) hi = hi * split.classical_gens[j];
      }
    }
    split.quantum_gens.push_back(hi);
  }
  return split;
}

bool coset_set_is_group(const EaoaqecCode& code) {
  std::unordered_set<Syndrome, SyndromeHash> synds;
  for (const PauliOperator& t : code.transversal)
    synds.insert(code.s_group.syndrome(t));
  for (std::size_t i = 0; i < code.transversal.size(); ++i)
    for (std::size_t j = i + 1; j < code.transversal.size(); ++j) {
      Syndrome prod = code.s_group.syndrome(code.transversal[i] * code.transversal[j]);
      if (!synds.count(prod)) return false;
    }
  return true;
}

RepresentabilityResult is_eacq_representable(const EaoaqecCode& code) {
  RepresentabilityResult res;
  if (!coset_set_is_group(code)) {
    res.obstruction = "coset-set-not-group";
    res.detail = "the transversal's normalizer cosets are not closed under products";
    return res;
  }
  std::vector<PauliOperator> tgens = transversal_generators(code);
  EacqSplit split = extract_split(code.h_group, tgens);
  // The quantum part must contain the classical part in its double
  // centralizer: every classical generator, after cleaning against the
  // symplectic pairs of the quantum part, must commute with the whole
  // quantum subgroup.
  SymplecticDecomposition qd = decompose(split.quantum_gens);
  for (std::size_t c = 0; c < split.classical_gens.size(); ++c) {
    PauliOperator b = split.classical_gens[c];
    for (const SymplecticPair& p : qd.pairs) {
      if (!commutes(b, p.first)) b = b * p.second;
      if (!commutes(b, p.second)) b = b * p.first;
    }
    for (const PauliOperator& iso : qd.isotropic)
      if (!commutes(b, iso)) {
        res.obstruction = "classical-generator-outside-double-centralizer";
        res.detail = "classical generator " + split.classical_gens[c].str() +
                     " anticommutes with the centralizer of the quantum part";
        return res;
      }
    split.classical_gens[c] = b;
  }
  res.representable = true;
  res.split = std::move(split);
  return res;
}

SqBoundCheck sq_distance_bound_check(const EaoaqecCode& code, int cutoff,
                                     unsigned threads) {
  SqBoundCheck out;
  GeneratorSet sq = quantum_stabilizer_subgroup(code);
  EaoaqecCode csq = make_code(code.n, sq.generators(), {}, {}, {}, {},
                              code.name + "_sq");
  DistanceReport dc = distance(code, DistanceMode::Dressed, cutoff, threads);
  DistanceReport ds = distance(csq, DistanceMode::Dressed, cutoff, threads);
  out.d_code_exceeds_cutoff = !dc.d.has_value();
  out.d_sq_exceeds_cutoff = !ds.d.has_value();
  out.d_code = dc.d.value_or(0);
  out.d_sq = ds.d.value_or(0);
  if (dc.d && ds.d)
    out.holds = *dc.d >= *ds.d;
  else if (!dc.d)
    out.holds = true;  // d(C) exceeds the cutoff, which bounds d(C_SQ)
  else
    out.holds = false;
  return out;
}

}  // namespace eaoa
