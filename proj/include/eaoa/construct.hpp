#pragma once

#include <optional>
#include <string>

#include "eaoa/code.hpp"
#include "eaoa/distance.hpp"

namespace eaoa {

enum class TransversalPolicy { FullProduct, ExplicitList };

struct ConstructionRequest {
  // Gauge-fixing (gauge_fix / ea_gauge_fix): indices into gauge_pairs.
  std::vector<std::size_t> pair_indices;
  // gauge_fix role assignment: by default the z member of a selected pair
  // joins the stabilizer and the x member the transversal; swap_roles flips
  // that for all selected pairs.
  bool swap_roles = false;

  // clean_qubits: the qubits to convert into ebits.
  std::vector<std::size_t> e_qubits;
  // css_clean_qubits: how many ebits to extract.
  std::size_t ebits = 0;

  // general_gauge_fix: the first y_i (re-paired) gauge pairs are gauge-fixed,
  // the next y_s are entanglement-converted. repaired_gauge, when nonempty,
  // replaces the code's gauge pairs (it must span the same gauge group).
  std::size_t y_i = 0, y_s = 0;
  std::vector<SymplecticPair> repaired_gauge;

  TransversalPolicy policy = TransversalPolicy::FullProduct;
  std::vector<PauliOperator> explicit_transversal;

  // Distance work for the hypothesis report.
  int hypothesis_cutoff = kDefaultDistanceCutoffCap;
  bool check_distances = true;  // compute input (and where cheap, output) distances
  unsigned threads = 0;
};

struct HypothesisCheck {
  enum class Status { Pass, Fail, Inconclusive, Guaranteed };
  std::string name;
  Status status = Status::Inconclusive;
  std::string detail;
};

struct ConstructionResult {
  EaoaqecCode code;
  CodeParameters before, after;
  std::vector<HypothesisCheck> hypothesis_report;
  // clean_qubits: the row-reduced stabilizer generators in the original
  // qubit order, and the chosen ebit qubits.
  std::vector<PauliOperator> reduced_stabilizers;
  std::vector<std::size_t> ebit_qubits;
  // gauge_fix full-product policy: transversal candidates dropped because
  // they duplicated an earlier element's coset.
  std::size_t coset_collisions = 0;
};

/*
 * Gauge fixing: the selected pairs' stabilizer members join S (and H), the
 * other members feed the transversal per the policy. The hypothesis report
 * evaluates whether every nontrivial element of
 * <H_I', G0'|n, iI> * (<transversal members|n> \ coset of I) has weight >= d.
 */
ConstructionResult gauge_fix(const EaoaqecCode& code, const ConstructionRequest& req);

/*
 * Qubit cleaning: on an e=0 code, turn the listed qubits into ebits by
 * partial Gaussian elimination of the check matrix on their columns, then
 * clean gauge / logical / transversal operators to identity there. The
 * chosen columns must be independent.
 */
ConstructionResult clean_qubits(const EaoaqecCode& code, const ConstructionRequest& req);

// CSS specialization: picks the first `ebits` pivot columns of the (equal)
// X/Z check matrices and delegates to clean_qubits.
ConstructionResult css_clean_qubits(const EaoaqecCode& code,
                                    const ConstructionRequest& req);

// Enumerate qubit subsets of size e with independent check-matrix columns,
// in lexicographic order, up to `limit` results.
std::vector<std::vector<std::size_t>> find_valid_eq(const EaoaqecCode& code,
                                                    std::size_t e, std::size_t limit);

/*
 * Entanglement-assisted gauge fixing: both members of each selected pair
 * join H; S gains one ebit per pair (x member extended with X, z member
 * with Z). The distance can only grow; the report notes this.
 */
ConstructionResult ea_gauge_fix(const EaoaqecCode& code, const ConstructionRequest& req);

// Composition: gauge_fix on the first y_i pairs, ea_gauge_fix on the next
// y_s pairs of the (optionally re-paired) gauge list.
ConstructionResult general_gauge_fix(const EaoaqecCode& code,
                                     const ConstructionRequest& req);

}  // namespace eaoa
