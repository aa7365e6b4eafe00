#include "eaoa/reproduce.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "eaoa/catalog.hpp"
#include "eaoa/code_io.hpp"
#include "eaoa/construct.hpp"
#include "eaoa/correct.hpp"
#include "eaoa/distance.hpp"
#include "eaoa/eacq.hpp"

namespace eaoa {

namespace {

// Failure accumulator: a criterion passes when no expectation failed.
struct Checker {
  CriterionResult res;
  std::size_t checks = 0;

  explicit Checker(std::string id) { res.id = std::move(id); }

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok && res.detail.empty()) res.detail = what;
  }

  CriterionResult finish(const std::string& summary) {
    res.passed = res.detail.empty();
    if (res.passed) res.detail = summary;
    return res;
  }
};

std::string param_str(const EaoaqecCode& code, const DistanceReport& dr) {
  CodeParameters p = parameters(code);
  p.d = dr.d;
  p.d_exceeds_cutoff = !dr.d.has_value();
  return p.str();
}

std::string opt_d(const DistanceReport& dr) {
  return dr.d ? std::to_string(*dr.d) : (">" + std::to_string(dr.cutoff));
}

PauliOperator single1(std::size_t n, std::size_t qubit1, char kind) {
  return PauliOperator::single(n, qubit1 - 1, kind);
}

// Phase-blind identity key for hash sets of bit patterns.
std::string bit_key(const PauliOperator& op) {
  std::string k;
  for (Word w : op.x_bits()) k += std::to_string(w) + ",";
  k += "|";
  for (Word w : op.z_bits()) k += std::to_string(w) + ",";
  return k;
}

// The four gauge-fix requests used by the reproduction criteria.
ConstructionRequest gf_request_plain(const EaoaqecCode& code) {
  ConstructionRequest req;
  req.pair_indices = {0, 1};
  req.swap_roles = true;  // x members join the stabilizer
  req.policy = TransversalPolicy::ExplicitList;
  PauliOperator gz1 = code.gauge_pairs[0].second.restricted_prefix(code.n);
  PauliOperator gz2 = code.gauge_pairs[1].second.restricted_prefix(code.n);
  req.explicit_transversal = {PauliOperator::identity(code.n), gz1, gz2, gz1 * gz2};
  return req;
}

ConstructionRequest ggf_request(const EaoaqecCode& in) {
  ConstructionRequest req;
  req.y_i = 1;
  req.y_s = 1;
  std::size_t ne = in.n + in.e;
  auto member = [&](std::size_t pair, bool z_side) {
    const SymplecticPair& p = in.gauge_pairs[pair];
    return z_side ? p.second : p.first;
  };
  PauliOperator g1 = member(0, false), g2 = member(0, true);
  PauliOperator g3 = member(1, false), g4 = member(1, true);
  PauliOperator g5 = member(2, false), g6 = member(2, true);
  req.repaired_gauge = {SymplecticPair{g1, g2}, SymplecticPair{g3, g4 * g6},
                        SymplecticPair{g3 * g5, g6}};
  req.policy = TransversalPolicy::ExplicitList;
  req.explicit_transversal = {
      PauliOperator::identity(ne),
      parse_pauli("I X I I I I X I I X", in.n).embedded(ne, 0),
      parse_pauli("X I I I I I X I X I", in.n).embedded(ne, 0),
      parse_pauli("Z I I I I I Z I Z I", in.n).embedded(ne, 0)};
  return req;
}

std::vector<std::size_t> syndrome_rows(const GeneratorSet& gens,
                                       const PauliOperator& op) {
  Syndrome s = gens.syndrome(op);
  std::vector<std::size_t> rows;
  for (std::size_t i = 0; i < gens.size(); ++i)
    if (get_bit(s.bits, i)) rows.push_back(i + 1);
  return rows;
}

CriterionResult catalog_distances(unsigned threads) {
  Checker c("catalog-distances");
  EaoaqecCode color = catalog_code("subsystem_color_code");
  DistanceReport d1 = distance(color, DistanceMode::Dressed, 4, threads);
  c.expect(d1.d == 3, "subsystem_color_code dressed distance " + opt_d(d1) +
                          ", expected 3");

  EaoaqecCode hea = catalog_code("color_code_hybrid_ea");
  DistanceReport d2 = distance(hea, DistanceMode::Dressed, 4, threads);
  c.expect(d2.d == 1, "color_code_hybrid_ea distance " + opt_d(d2) + ", expected 1");
  c.expect(d2.witness && d2.witness->same_bits(single1(15, 12, 'Z')),
           "distance-1 witness is not Z on qubit 12");
  c.expect(d2.branch == "coset-union",
           "distance-1 witness branch '" + d2.branch + "', expected coset-union");

  ConstructionRequest req;
  req.pair_indices = {0};
  req.check_distances = false;
  ConstructionResult eagf = ea_gauge_fix(hea, req);
  c.expect(parameters(eagf.code).str() == "[[15,1;5,1,2]]",
           "post-conversion parameters " + parameters(eagf.code).str());
  DistanceReport d3 = distance(eagf.code, DistanceMode::Dressed, 4, threads);
  c.expect(d3.d == 3, "post-conversion distance " + opt_d(d3) + ", expected 3");
  return c.finish("dressed=3; hybrid d=1 (witness Z12); after ebit conversion d=3");
}

CriterionResult gauge_fix_reproduction(unsigned threads) {
  Checker c("gauge-fix-reproduction");
  EaoaqecCode color = catalog_code("subsystem_color_code");
  ConstructionRequest req = gf_request_plain(color);
  req.check_distances = false;
  ConstructionResult gf = gauge_fix(color, req);
  DistanceReport d = distance(gf.code, DistanceMode::Dressed, 4, threads);
  c.expect(param_str(gf.code, d) == "[[15,1,3;4,0,4]]",
           "gauge-fixed code is " + param_str(gf.code, d) +
               ", expected [[15,1,3;4,0,4]]");

  EaoaqecCode hybrid = catalog_code("color_code_hybrid_gf");
  ConstructionRequest hreq = gf_request_plain(hybrid);
  hreq.policy = TransversalPolicy::FullProduct;
  hreq.explicit_transversal.clear();
  hreq.check_distances = false;
  ConstructionResult hgf = gauge_fix(hybrid, hreq);
  DistanceReport hd = distance(hgf.code, DistanceMode::Dressed, 4, threads);
  c.expect(param_str(hgf.code, hd) == "[[15,1,2;4,0,12]]",
           "hybrid gauge-fixed code is " + param_str(hgf.code, hd) +
               ", expected [[15,1,2;4,0,12]]");
  return c.finish("[[15,1,3;4,0,4]] and hybrid [[15,1,2;4,0,12]]");
}

CriterionResult clean_qubits_reproduction(unsigned threads) {
  Checker c("clean-qubits-reproduction");
  EaoaqecCode hybrid = catalog_code("color_code_hybrid_cq");
  ConstructionRequest req;
  req.e_qubits = {0, 1};
  req.check_distances = false;
  ConstructionResult cq = clean_qubits(hybrid, req);
  DistanceReport dd = distance(cq.code, DistanceMode::Dressed, 4, threads);
  DistanceReport dn = distance(cq.code, DistanceMode::NoisyBob, 4, threads);
  c.expect(param_str(cq.code, dd) == "[[13,1,3;6,2,3]]",
           "cleaned code is " + param_str(cq.code, dd) + ", expected [[13,1,3;6,2,3]]");
  c.expect(dn.d == 2, "noisy-ebit distance " + opt_d(dn) + ", expected 2");

  const char* expected_rows[8] = {
      "X I X I X I X I X I X I X I X", "I X X I I X X I I X X I I X X",
      "I I I X X X X I I I I X X X X", "I I I I I I I X X X X X X X X",
      "Z I Z I Z I Z I Z I Z I Z I Z", "I Z Z I I Z Z I I Z Z I I Z Z",
      "I I I Z Z Z Z I I I I Z Z Z Z", "I I I I I I I Z Z Z Z Z Z Z Z"};
  c.expect(cq.reduced_stabilizers.size() == 8, "expected 8 row-reduced stabilizers");
  for (std::size_t i = 0; i < 8 && i < cq.reduced_stabilizers.size(); ++i)
    c.expect(cq.reduced_stabilizers[i].same_bits(parse_pauli(expected_rows[i], 15)),
             "row-reduced stabilizer " + std::to_string(i + 1) + " is " +
                 format_cells(cq.reduced_stabilizers[i], 0));
  c.expect(cq.ebit_qubits == std::vector<std::size_t>{0, 1},
           "ebit qubits are not the first two");
  return c.finish("[[13,1,3;6,2,3]], noisy-ebit d=2, row-reduced table bit-exact");
}

CriterionResult general_gauge_fix_reproduction(unsigned threads) {
  Checker c("general-gauge-fix-reproduction");
  EaoaqecCode in = catalog_code("shortened_hamming_ea");
  ConstructionRequest req = ggf_request(in);
  req.check_distances = false;
  ConstructionResult r = general_gauge_fix(in, req);
  DistanceReport d = distance(r.code, DistanceMode::Dressed, 4, threads);
  c.expect(param_str(r.code, d) == "[[10,1,3;1,3,4]]",
           "constructed code is " + param_str(r.code, d) + ", expected [[10,1,3;1,3,4]]");

  // Expected 11-generator stabilizer table; the pinned row order fixes the
  // syndrome bit positions below.
  const char* rows[11] = {
      "Z I I Z Z I I Z Z I | Z I I", "I Z I Z I Z I Z I Z | I Z I",
      "Z I Z I Z I I I I I | I I Z", "X I I X X I I X X I | X I I",
      "I X I X I X I X I X | I X I", "X I X I X I I I I I | I I X",
      "I I I I I I X X X X | I I I", "I I X X X X I I I I | I I I",
      "I I I I I I Z Z Z Z | I I I", "I I Z Z Z Z I I I I | I I I",
      "Z Z Z Z I I I I I I | I I I"};
  std::vector<PauliOperator> expected;
  for (const char* row : rows) expected.push_back(parse_pauli(row, 13));
  c.expect(r.code.s_group.size() == 11, "stabilizer generator count is " +
                                            std::to_string(r.code.s_group.size()));
  for (const PauliOperator& want : expected) {
    bool found = false;
    for (const PauliOperator& got : r.code.s_group.generators())
      if (got.same_bits(want)) found = true;
    c.expect(found, "missing stabilizer row " + format_cells(want, 3));
  }

  GeneratorSet table = GeneratorSet::from_independent(expected);
  const std::vector<std::vector<std::size_t>> want_syn = {
      {11}, {3, 11}, {6}};
  c.expect(r.code.transversal.size() == 4, "transversal size is not 4");
  for (std::size_t t = 1; t < r.code.transversal.size() && t <= 3; ++t)
    c.expect(syndrome_rows(table, r.code.transversal[t]) == want_syn[t - 1],
             "transversal element " + std::to_string(t) + " has the wrong syndrome");

  PauliOperator t4 = parse_pauli("XZ X I I I I Z I XZ X | I I I", 13);
  PauliOperator t5 = parse_pauli("X I I I I I X X I I | I I I", 13);
  c.expect(syndrome_rows(table, t4) == std::vector<std::size_t>({3, 6}),
           "extra element T4 has the wrong syndrome");
  c.expect(syndrome_rows(table, t5) == std::vector<std::size_t>({2, 3, 11}),
           "extra element T5 has the wrong syndrome");

  EaoaqecCode with_t4 = r.code;
  with_t4.transversal.push_back(t4);
  DistanceReport d4 = distance(with_t4, DistanceMode::Dressed, 4, threads);
  c.expect(with_t4.transversal.size() == 5 && d4.d == 3,
           "adding T4 gives d=" + opt_d(d4) + ", expected 3 with 5 bit strings");

  EaoaqecCode with_t5 = r.code;
  with_t5.transversal.push_back(t5);
  DistanceReport d5 = distance(with_t5, DistanceMode::Dressed, 4, threads);
  c.expect(d5.d == 2, "adding T5 gives d=" + opt_d(d5) + ", expected 2");
  return c.finish("[[10,1,3;1,3,4]], 11-row table, syndromes, T4 keeps d=3, T5 gives d=2");
}

CriterionResult eacq_decisions(unsigned) {
  Checker c("eacq-decisions");
  RepresentabilityResult r7 = is_eacq_representable(catalog_code("seven_qubit_non_eacq"));
  c.expect(!r7.representable, "seven-qubit code was declared representable");
  c.expect(r7.obstruction == "classical-generator-outside-double-centralizer",
           "seven-qubit obstruction '" + r7.obstruction + "'");

  EaoaqecCode eacq = catalog_code("canonical_eacq_5q");
  RepresentabilityResult r5 = is_eacq_representable(eacq);
  c.expect(r5.representable, "canonical five-qubit instance not representable");
  if (r5.split) {
    const EacqSplit& s = *r5.split;
    // (1) the split regenerates the frame group
    std::vector<PauliOperator> all = s.quantum_gens;
    all.insert(all.end(), s.classical_gens.begin(), s.classical_gens.end());
    c.expect(GeneratorSet::reduce(all).spans_same(eacq.h_group),
             "split does not span the frame group");
    // (2) quantum generators commute with every transversal element
    for (const PauliOperator& q : s.quantum_gens)
      for (const PauliOperator& t : eacq.transversal)
        c.expect(commutes(q, t.restricted_prefix(eacq.n)),
                 "quantum generator " + q.str() + " anticommutes with a transversal element");
    // (3) each classical generator has its anticommuting transversal certificate
    c.expect(s.classical_gens.size() == s.classical_transversal.size(),
             "classical certificate count mismatch");
    for (std::size_t i = 0; i < s.classical_gens.size(); ++i)
      c.expect(!commutes(s.classical_gens[i], s.classical_transversal[i]),
               "classical generator " + std::to_string(i) +
                   " commutes with its certificate");
  }
  return c.finish("seven-qubit not representable; canonical instance representable");
}

CriterionResult correctability_goldens(unsigned) {
  Checker c("correctability-goldens");
  EaoaqecCode six = catalog_code("six_qubit_example");
  std::vector<std::pair<std::string, PauliOperator>> pool = {
      {"Z3", single1(6, 3, 'Z')}, {"Z4", single1(6, 4, 'Z')},
      {"X5", single1(6, 5, 'X')}, {"Z5", single1(6, 5, 'Z')},
      {"X1", single1(6, 1, 'X')}, {"X2", single1(6, 2, 'X')}};
  for (std::size_t a = 0; a < pool.size(); ++a) {
    c.expect(ea_correctable(six, {pool[a].second}).correctable,
             "singleton {" + pool[a].first + "} not correctable");
    for (std::size_t b = a + 1; b < pool.size(); ++b)
      c.expect(ea_correctable(six, {pool[a].second, pool[b].second}).correctable,
               "pair {" + pool[a].first + "," + pool[b].first + "} not correctable");
  }
  PauliOperator id6 = PauliOperator::identity(6);
  for (auto& [name, op] : std::vector<std::pair<std::string, PauliOperator>>{
           {"X3", single1(6, 3, 'X')},
           {"X4", single1(6, 4, 'X')},
           {"X6", single1(6, 6, 'X')}})
    c.expect(!ea_correctable(six, {id6, op}).correctable,
             "{I," + name + "} was declared correctable");
  return c.finish("21 correctable sets, 3 uncorrectable sets");
}

CriterionResult framework_agreement(unsigned) {
  Checker c("framework-agreement");
  std::size_t compared = 0;
  for (const std::string& name : catalog_names()) {
    EaoaqecCode code = catalog_code(name);
    std::vector<PauliOperator> singles = {PauliOperator::identity(code.n)};
    for (std::size_t q = 1; q <= 3; ++q)
      for (char kind : {'X', 'Y', 'Z'})
        singles.push_back(single1(code.n, q, kind));
    bool trivial_t = code.transversal.size() == 1;
    std::optional<EacqSplit> split;
    if (code.gauge_pairs.empty()) {
      RepresentabilityResult rr = is_eacq_representable(code);
      if (rr.representable) split = rr.split;
    }
    for (std::size_t a = 0; a < singles.size(); ++a)
      for (std::size_t b = a + 1; b < singles.size(); ++b) {
        std::vector<PauliOperator> errs = {singles[a], singles[b]};
        bool ea = ea_correctable(code, errs).correctable;
        std::vector<PauliOperator> lifted;
        for (const PauliOperator& e : errs)
          lifted.push_back(e.embedded(code.n + code.e, 0));
        ++compared;
        std::string where = name + " {" + singles[a].str() + "," + singles[b].str() + "}";
        c.expect(oaqec_correctable(code, lifted).correctable == ea,
                 "extended-register verdict disagrees on " + where);
        if (trivial_t)
          c.expect(eaoqec_correctable(code, errs).correctable == ea,
                   "subsystem verdict disagrees on " + where);
        if (split)
          c.expect(eacq_correctable(code, *split, errs).correctable == ea,
                   "classical-quantum verdict disagrees on " + where);
      }
  }
  return c.finish(std::to_string(compared) + " error pairs, zero disagreements");
}

CriterionResult distance_bounds(unsigned threads) {
  Checker c("distance-bounds");
  // Quantum-stabilizer lower bound on the trivial-gauge catalog codes.
  for (const std::string& name : catalog_names()) {
    EaoaqecCode code = catalog_code(name);
    if (!code.gauge_pairs.empty()) continue;
    SqBoundCheck b = sq_distance_bound_check(code, int(code.n), threads);
    c.expect(!b.d_code_exceeds_cutoff && !b.d_sq_exceeds_cutoff,
             name + ": distances not fully computed");
    c.expect(b.holds, name + ": d=" + std::to_string(b.d_code) +
                          " < quantum-stabilizer bound " + std::to_string(b.d_sq));
  }

  // Ebit gauge conversion never lowers the distance: randomized pair subsets.
  EaoaqecCode color = catalog_code("subsystem_color_code");
  DistanceReport d0 = distance(color, DistanceMode::Dressed, 6, threads);
  c.expect(d0.d.has_value(), "base color-code distance not computed");
  std::mt19937 rng(20240817);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < color.gauge_pairs.size(); ++i)
      if (rng() & 1) idx.push_back(i);
    if (idx.empty()) idx.push_back(rng() % color.gauge_pairs.size());
    ConstructionRequest req;
    req.pair_indices = idx;
    req.check_distances = false;
    ConstructionResult r = ea_gauge_fix(color, req);
    DistanceReport d1 = distance(r.code, DistanceMode::Dressed, 6, threads);
    // Converting many pairs can push the distance past the usual cutoff;
    // escalate until it is actually computed.
    for (int cutoff = 8; !d1.d && cutoff <= int(color.n); cutoff += 2)
      d1 = distance(r.code, DistanceMode::Dressed, cutoff, threads);
    c.expect(d1.d.has_value(), "trial " + std::to_string(trial) + ": distance not computed");
    if (d0.d && d1.d)
      c.expect(*d1.d >= *d0.d, "trial " + std::to_string(trial) + ": distance dropped to " +
                                   std::to_string(*d1.d));
  }

  // Gauge-fix equality case: full product transversal of the converted
  // pairs, starting from the trivial transversal.
  ConstructionRequest gfr = gf_request_plain(color);
  gfr.check_distances = true;
  gfr.hypothesis_cutoff = 4;
  gfr.threads = threads;
  ConstructionResult gf = gauge_fix(color, gfr);
  DistanceReport dgf = distance(gf.code, DistanceMode::Dressed, 4, threads);
  c.expect(d0.d && dgf.d && *dgf.d == *d0.d,
           "gauge-fix equality case: d'=" + opt_d(dgf) + " vs d=" + opt_d(d0));
  bool preserved_pass = false;
  for (const HypothesisCheck& h : gf.hypothesis_report)
    if (h.name == "gauge-fix-distance-preserved" &&
        h.status == HypothesisCheck::Status::Pass)
      preserved_pass = true;
  c.expect(preserved_pass, "gauge-fix distance-preservation hypothesis did not pass");
  return c.finish("quantum-stabilizer bound, 20 conversion trials, equality case");
}

CriterionResult oracle_equivalence(unsigned) {
  Checker c("oracle-equivalence");
  std::mt19937 rng(987654321u);
  for (const std::string& name : catalog_names()) {
    EaoaqecCode code = catalog_code(name);
    const std::vector<PauliOperator>& gens = code.h_group.generators();
    if (gens.size() > 12) continue;
    // Brute-force span of H: all subset products, phase-blind.
    std::unordered_set<std::string> span;
    std::vector<PauliOperator> elements;
    for (std::size_t mask = 0; mask < (std::size_t(1) << gens.size()); ++mask) {
      PauliOperator prod = PauliOperator::identity(code.n);
      for (std::size_t i = 0; i < gens.size(); ++i)
        if ((mask >> i) & 1) prod = prod * gens[i];
      span.insert(bit_key(prod));
      elements.push_back(prod);
    }
    for (const PauliOperator& el : elements)
      c.expect(code.h_group.in_span(el), name + ": span element rejected by in_span");
    for (int t = 0; t < 200; ++t) {
      Bits x(words_for(code.n), 0), z(words_for(code.n), 0);
      for (std::size_t q = 0; q < code.n; ++q) {
        set_bit(x, q, rng() & 1);
        set_bit(z, q, rng() & 1);
      }
      PauliOperator op = PauliOperator::from_bits(code.n, x, z);
      c.expect(code.h_group.in_span(op) == (span.count(bit_key(op)) > 0),
               name + ": in_span disagrees with enumeration on " + op.str());
    }
    // Brute-force quantum stabilizer subgroup: span elements commuting with
    // the whole transversal group (restricted to the first n qubits).
    GeneratorSet sq = quantum_stabilizer_subgroup(code);
    std::vector<PauliOperator> t0n;
    for (const PauliOperator& t : code.transversal)
      t0n.push_back(t.restricted_prefix(code.n));
    for (const PauliOperator& el : elements) {
      bool commuting = true;
      for (const PauliOperator& t : t0n)
        if (!commutes(el, t)) commuting = false;
      c.expect(sq.in_span(el) == commuting,
               name + ": quantum stabilizer subgroup disagrees on " + el.str());
    }
  }

  // Decomposition property: on random subgroups, pair members anticommute
  // with their mate only, isotropic generators commute with everything, and
  // the span is preserved.
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t n = 2 + rng() % 7;           // 2..8
    std::size_t target = 1 + rng() % std::min<std::size_t>(8, 2 * n);
    std::vector<PauliOperator> gens;
    GeneratorSet gs(n);
    int guard = 0;
    while (gens.size() < target && guard++ < 200) {
      Bits x(words_for(n), 0), z(words_for(n), 0);
      for (std::size_t q = 0; q < n; ++q) {
        set_bit(x, q, rng() & 1);
        set_bit(z, q, rng() & 1);
      }
      PauliOperator op = PauliOperator::from_bits(n, x, z);
      if (op.is_identity_bits() || gs.in_span(op)) continue;
      gs.push(op);
      gens.push_back(op);
    }
    if (gens.empty()) continue;
    SymplecticDecomposition dec = decompose(gens);
    std::vector<PauliOperator> flat;
    for (const SymplecticPair& p : dec.pairs) {
      c.expect(!commutes(p.first, p.second), "pair members commute");
      flat.push_back(p.first);
      flat.push_back(p.second);
    }
    flat.insert(flat.end(), dec.isotropic.begin(), dec.isotropic.end());
    c.expect(GeneratorSet::reduce(flat).spans_same(gs),
             "decomposition changed the span");
    for (std::size_t i = 0; i < flat.size(); ++i)
      for (std::size_t j = i + 1; j < flat.size(); ++j) {
        bool mates = i + 1 == j && j < 2 * dec.pairs.size() && i % 2 == 0;
        c.expect(commutes(flat[i], flat[j]) == !mates,
                 "wrong commutation between decomposition outputs");
      }
  }
  return c.finish("span, quantum-subgroup and decomposition oracles agree");
}

CriterionResult determinism(unsigned) {
  Checker c("determinism");
  const unsigned counts[3] = {1, 4, 0};  // 0 = hardware concurrency
  for (const std::string& name : catalog_names()) {
    EaoaqecCode code = catalog_code(name);
    for (DistanceMode mode :
         {DistanceMode::Dressed, DistanceMode::Bare, DistanceMode::NoisyBob}) {
      std::vector<std::string> results;
      for (unsigned t : counts) {
        DistanceReport dr = distance(code, mode, 4, t);
        results.push_back(opt_d(dr) + ":" + (dr.witness ? dr.witness->str() : "-") +
                          ":" + dr.branch);
      }
      c.expect(results[0] == results[1] && results[1] == results[2],
               name + ": distance results differ across thread counts");
    }
  }
  // Construction outputs across thread counts.
  EaoaqecCode color = catalog_code("subsystem_color_code");
  EaoaqecCode hamming = catalog_code("shortened_hamming_ea");
  EaoaqecCode cqin = catalog_code("color_code_hybrid_cq");
  std::vector<std::string> gf_out, cq_out, ggf_out;
  for (unsigned t : counts) {
    ConstructionRequest gfr = gf_request_plain(color);
    gfr.threads = t;
    gfr.hypothesis_cutoff = 3;
    std::ostringstream s1;
    write_code(s1, gauge_fix(color, gfr).code);
    gf_out.push_back(s1.str());

    ConstructionRequest cqr;
    cqr.e_qubits = {0, 1};
    cqr.threads = t;
    cqr.check_distances = false;
    std::ostringstream s2;
    write_code(s2, clean_qubits(cqin, cqr).code);
    cq_out.push_back(s2.str());

    ConstructionRequest ggfr = ggf_request(hamming);
    ggfr.threads = t;
    ggfr.hypothesis_cutoff = 3;
    std::ostringstream s3;
    write_code(s3, general_gauge_fix(hamming, ggfr).code);
    ggf_out.push_back(s3.str());
  }
  c.expect(gf_out[0] == gf_out[1] && gf_out[1] == gf_out[2],
           "gauge-fix output differs across thread counts");
  c.expect(cq_out[0] == cq_out[1] && cq_out[1] == cq_out[2],
           "clean-qubits output differs across thread counts");
  c.expect(ggf_out[0] == ggf_out[1] && ggf_out[1] == ggf_out[2],
           "general gauge-fix output differs across thread counts");
  return c.finish("byte-identical witnesses and construction outputs for 1/4/max threads");
}

using CriterionFn = CriterionResult (*)(unsigned);

const std::vector<std::pair<std::string, CriterionFn>>& registry() {
  static const std::vector<std::pair<std::string, CriterionFn>> reg = {
      {"catalog-distances", catalog_distances},
      {"gauge-fix-reproduction", gauge_fix_reproduction},
      {"clean-qubits-reproduction", clean_qubits_reproduction},
      {"general-gauge-fix-reproduction", general_gauge_fix_reproduction},
      {"eacq-decisions", eacq_decisions},
      {"correctability-goldens", correctability_goldens},
      {"framework-agreement", framework_agreement},
      {"distance-bounds", distance_bounds},
      {"oracle-equivalence", oracle_equivalence},
      {"determinism", determinism},
  };
  return reg;
}

}  // namespace

std::vector<std::string> criterion_ids() {
  std::vector<std::string> ids;
  for (const auto& [id, fn] : registry()) ids.push_back(id);
  return ids;
}

std::vector<CriterionResult> run_criteria(const std::vector<std::string>& ids,
                                          unsigned threads) {
  std::vector<std::string> wanted = ids;
  if (wanted.size() == 1 && wanted[0] == "all") wanted = criterion_ids();
  std::vector<CriterionResult> out;
  for (const std::string& id : wanted) {
    bool found = false;
    for (const auto& [name, fn] : registry())
      if (name == id) {
        out.push_back(fn(threads));
        found = true;
        break;
      }
    if (!found) throw std::invalid_argument("unknown criterion '" + id + "'");
  }
  return out;
}

}  // namespace eaoa
