#include "eaoa/construct.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include "membership.hpp"

namespace eaoa {

namespace {

PauliOperator pad_to(const PauliOperator& op, std::size_t total) {
  if (op.num_qubits() == total) return op;
  if (op.num_qubits() < total) return op.embedded(total, 0);
  throw CodeError("operator acts on more qubits than the target register");
}

std::vector<std::size_t> checked_indices(const std::vector<std::size_t>& idx,
                                         std::size_t count, const char* what) {
  std::vector<std::size_t> out = idx;
  std::sort(out.begin(), out.end());
  if (std::adjacent_find(out.begin(), out.end()) != out.end())
    throw CodeError(std::string(what) + ": duplicate index");
  for (std::size_t i : out)
    if (i >= count) throw CodeError(std::string(what) + ": index out of range");
  return out;
}

// Dressed distance, reported into params; returns the distance when found.
std::optional<std::size_t> fill_distance(const EaoaqecCode& code, CodeParameters& p,
                                         int cutoff, unsigned threads) {
  DistanceReport rep = distance(code, DistanceMode::Dressed, cutoff, threads);
  p.d = rep.d;
  p.d_exceeds_cutoff = !rep.d.has_value();
  return rep.d;
}

struct GgfSpec {
  std::vector<SymplecticPair> pairs;  // reordered: y_i gauge-fixed, y_s converted, rest kept
  std::size_t y_i = 0, y_s = 0;
};

/*
 * Shared engine for gauge_fix (y_s = 0), ea_gauge_fix (y_i = 0) and
 * general_gauge_fix.
 */
ConstructionResult ggf_engine(const EaoaqecCode& code, const GgfSpec& spec,
                              const ConstructionRequest& req) {
  std::size_t y = spec.y_i + spec.y_s;
  if (y > spec.pairs.size()) throw CodeError("more pairs selected than available");
  std::size_t new_e = code.e + spec.y_s;
  std::size_t total = code.n + new_e;
  auto ext = [&](const PauliOperator& op) { return pad_to(op, total); };

  // Role split for the gauge-fixed pairs.
  std::vector<PauliOperator> stab_members, trans_members;
  for (std::size_t i = 0; i < spec.y_i; ++i) {
    const SymplecticPair& p = spec.pairs[i];
    stab_members.push_back(req.swap_roles ? p.first : p.second);
    trans_members.push_back(req.swap_roles ? p.second : p.first);
  }
  std::vector<SymplecticPair> converted(spec.pairs.begin() + spec.y_i,
                                        spec.pairs.begin() + y);

  ConstructionResult res;
  EaoaqecCode& out = res.code;
  out.name = code.name;
  out.n = code.n;
  out.e = new_e;

  // New stabilizer.
  GeneratorSet s(total);
  for (const PauliOperator& g : code.s_group.generators()) s.push(ext(g));
  for (const PauliOperator& g : stab_members) s.push(ext(g));
  for (std::size_t j = 0; j < spec.y_s; ++j) {
    s.push(ext(converted[j].second) * PauliOperator::single(total, code.n + code.e + j, 'Z'));
    s.push(ext(converted[j].first) * PauliOperator::single(total, code.n + code.e + j, 'X'));
  }
  out.s_group = std::move(s);

  // New Pauli frame group on Alice's qubits.
  std::vector<PauliOperator> h_ops = code.h_group.generators();
  for (const PauliOperator& g : stab_members) h_ops.push_back(g.restricted_prefix(code.n));
  for (const SymplecticPair& p : converted) {
    h_ops.push_back(p.first.restricted_prefix(code.n));
    h_ops.push_back(p.second.restricted_prefix(code.n));
  }
  GeneratorSet::ReduceInfo info;
  out.h_group = GeneratorSet::reduce(h_ops, info);
  if (info.minus_identity || out.h_group.size() != h_ops.size())
    throw CodeError("selected gauge members are not independent of the frame group");

  for (std::size_t i = y; i < spec.pairs.size(); ++i)
    out.gauge_pairs.push_back(
        SymplecticPair{ext(spec.pairs[i].first), ext(spec.pairs[i].second)});
  for (const SymplecticPair& p : code.logical_pairs)
    out.logical_pairs.push_back(SymplecticPair{ext(p.first), ext(p.second)});

  // Transversal.
  if (req.policy == TransversalPolicy::FullProduct) {
    std::unordered_set<Syndrome, SyndromeHash> seen;
    for (const PauliOperator& t : code.transversal) {
      for (std::size_t mask = 0; mask < (std::size_t(1) << trans_members.size());
           ++mask) {
        PauliOperator cand = ext(t);
        for (std::size_t b = 0; b < trans_members.size(); ++b)
          if ((mask >> b) & 1) cand = cand * ext(trans_members[b]);
        if (seen.insert(out.s_group.syndrome(cand)).second)
          out.transversal.push_back(cand);
        else
          ++res.coset_collisions;
      }
    }
  } else {
    // Allowed cosets: products of the input transversal, the gauge-fixed
    // transversal members, and the converted pair members (identity-extended).
    gf2::Echelon allowed(out.s_group.size());
    auto syn_of = [&](const PauliOperator& op) {
      Syndrome s0 = out.s_group.syndrome(op);
      s0.bits.resize(words_for(std::max<std::size_t>(out.s_group.size(), 1)), 0);
      return s0;
    };
    for (const PauliOperator& t : code.transversal) allowed.insert(syn_of(ext(t)).bits);
    for (const PauliOperator& g : trans_members) allowed.insert(syn_of(ext(g)).bits);
    for (const SymplecticPair& p : converted) {
      allowed.insert(syn_of(ext(p.first)).bits);
      allowed.insert(syn_of(ext(p.second)).bits);
    }
    std::unordered_set<Syndrome, SyndromeHash> seen;
    out.transversal.push_back(PauliOperator::identity(total));
    seen.insert(syn_of(out.transversal.front()));
    for (const PauliOperator& raw : req.explicit_transversal) {
      PauliOperator t = pad_to(raw, total);
      if (!t.identity_on(code.n, total))
        throw CodeError("explicit transversal element acts on an ebit column");
      Syndrome s0 = syn_of(t);
      if (!allowed.contains(s0.bits))
        throw CodeError("explicit transversal element " + t.str() +
                        " is outside the reachable cosets");
      if (t.is_identity_bits()) continue;
      if (!seen.insert(s0).second)
        throw CodeError("explicit transversal elements share a coset");
      out.transversal.push_back(t);
    }
  }

  // Parameters and hypothesis report.
  res.before = parameters(code);
  res.after = parameters(out);
  std::optional<std::size_t> d_before;
  if (req.check_distances)
    d_before = fill_distance(code, res.before, req.hypothesis_cutoff, req.threads);

  if (spec.y_i > 0) {
    HypothesisCheck chk;
    chk.name = "gauge-fix-distance-preserved";
    if (!req.check_distances) {
      chk.status = HypothesisCheck::Status::Inconclusive;
      chk.detail = "input distance not computed";
    } else if (!d_before) {
      chk.status = HypothesisCheck::Status::Inconclusive;
      chk.detail = "input distance exceeds the cutoff";
    } else {
      // Every nontrivial element of <H_I', G0'|n> * <transversal members|n>
      // must have weight >= d.
      SymplecticDecomposition hd = decompose(out.h_group);
      gf2::Echelon base(2 * code.n);
      for (const PauliOperator& g : hd.isotropic) base.insert(symplectic_vector(g));
      for (const SymplecticPair& p : out.gauge_pairs) {
        base.insert(symplectic_vector(p.first.restricted_prefix(code.n)));
        base.insert(symplectic_vector(p.second.restricted_prefix(code.n)));
      }
      gf2::Echelon full = base;
      for (const PauliOperator& g : trans_members)
        full.insert(symplectic_vector(g.restricted_prefix(code.n)));
      auto low = min_weight_element(
          code.n, static_cast<int>(*d_before) - 1, req.threads,
          [&](const Bits& x, const Bits& z) {
            Bits v = detail::join_xz(x, z, code.n);
            return full.contains(v) && !base.contains(std::move(v));
          });
      if (low) {
        chk.status = HypothesisCheck::Status::Fail;
        chk.detail = "weight-" + std::to_string(low->weight()) +
                     " element " + low->str() + " falls below d = " +
                     std::to_string(*d_before);
      } else {
        chk.status = HypothesisCheck::Status::Pass;
        chk.detail = "no element below weight " + std::to_string(*d_before);
      }
    }
    res.hypothesis_report.push_back(std::move(chk));
  }
  if (spec.y_s > 0) {
    res.hypothesis_report.push_back(
        HypothesisCheck{"ea-gauge-fix-distance-non-decreasing",
                        HypothesisCheck::Status::Guaranteed,
                        "holds unconditionally"});
  }
  if (req.check_distances) {
    std::optional<std::size_t> d_after =
        fill_distance(out, res.after, req.hypothesis_cutoff, req.threads);
    HypothesisCheck chk;
    chk.name = "distance-comparison";
    if (d_before && d_after) {
      chk.status = *d_after >= *d_before ? HypothesisCheck::Status::Pass
                                         : HypothesisCheck::Status::Fail;
      chk.detail = "d = " + std::to_string(*d_before) + " -> " + std::to_string(*d_after);
    } else {
      chk.status = HypothesisCheck::Status::Inconclusive;
      chk.detail = "a distance exceeds the cutoff";
    }
    res.hypothesis_report.push_back(std::move(chk));
  }
  return res;
}

std::vector<SymplecticPair> reorder_pairs(const std::vector<SymplecticPair>& pairs,
                                          const std::vector<std::size_t>& selected) {
  std::vector<SymplecticPair> out;
  std::vector<bool> taken(pairs.size(), false);
  for (std::size_t i : selected) {
    out.push_back(pairs[i]);
    taken[i] = true;
  }
  for (std::size_t i = 0; i < pairs.size(); ++i)
    if (!taken[i]) out.push_back(pairs[i]);
  return out;
}

// Symplectic-vector rows of the check matrix restricted to the chosen
// qubits' x and z columns (2e bits per stabilizer generator).
std::vector<Bits> restricted_columns(const EaoaqecCode& code,
                                     const std::vector<std::size_t>& eq) {
  std::vector<Bits> rows;
  for (const PauliOperator& g : code.s_group.generators()) {
    Bits row(words_for(2 * eq.size()), 0);
    for (std::size_t i = 0; i < eq.size(); ++i) {
      set_bit(row, i, g.x(eq[i]));
      set_bit(row, eq.size() + i, g.z(eq[i]));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

ConstructionResult gauge_fix(const EaoaqecCode& code, const ConstructionRequest& req) {
  std::vector<std::size_t> sel =
      checked_indices(req.pair_indices, code.gauge_pairs.size(), "gauge_fix");
  if (sel.empty()) throw CodeError("gauge_fix: no pairs selected");
  GgfSpec spec;
  spec.pairs = reorder_pairs(code.gauge_pairs, sel);
  spec.y_i = sel.size();
  return ggf_engine(code, spec, req);
}

ConstructionResult ea_gauge_fix(const EaoaqecCode& code, const ConstructionRequest& req) {
  std::vector<std::size_t> sel =
      checked_indices(req.pair_indices, code.gauge_pairs.size(), "ea_gauge_fix");
  if (sel.empty()) throw CodeError("ea_gauge_fix: no pairs selected");
  GgfSpec spec;
  spec.pairs = reorder_pairs(code.gauge_pairs, sel);
  spec.y_s = sel.size();
  return ggf_engine(code, spec, req);
}

ConstructionResult general_gauge_fix(const EaoaqecCode& code,
                                     const ConstructionRequest& req) {
  GgfSpec spec;
  spec.y_i = req.y_i;
  spec.y_s = req.y_s;
  if (req.repaired_gauge.empty()) {
    spec.pairs = code.gauge_pairs;
  } else {
    spec.pairs = req.repaired_gauge;
    std::size_t total = code.n + code.e;
    for (SymplecticPair& p : spec.pairs) {
      p.first = pad_to(p.first, total);
      p.second = pad_to(p.second, total);
    }
    if (spec.pairs.size() != code.gauge_pairs.size())
      throw CodeError("re-paired gauge list has the wrong size");
    gf2::Echelon span(2 * total);
    for (const PauliOperator& g : code.gauge_ops()) span.insert(symplectic_vector(g));
    for (const SymplecticPair& p : spec.pairs) {
      if (!span.contains(symplectic_vector(p.first)) ||
          !span.contains(symplectic_vector(p.second)))
        throw CodeError("re-paired gauge operators leave the gauge group");
      if (commutes(p.first, p.second))
        throw CodeError("re-paired gauge members of one pair must anticommute");
    }
    for (std::size_t i = 0; i < spec.pairs.size(); ++i)
      for (std::size_t j = i + 1; j < spec.pairs.size(); ++j)
        if (!commutes(spec.pairs[i].first, spec.pairs[j].first) ||
            !commutes(spec.pairs[i].first, spec.pairs[j].second) ||
            !commutes(spec.pairs[i].second, spec.pairs[j].first) ||
            !commutes(spec.pairs[i].second, spec.pairs[j].second))
          throw CodeError("re-paired gauge pairs must commute across pairs");
  }
  if (spec.y_i + spec.y_s > spec.pairs.size())
    throw CodeError("general_gauge_fix: y_i + y_s exceeds the pair count");
  return ggf_engine(code, spec, req);
}

ConstructionResult clean_qubits(const EaoaqecCode& code, const ConstructionRequest& req) {
  if (code.e != 0) throw CodeError("clean_qubits expects a code without ebits");
  std::vector<std::size_t> eq = checked_indices(req.e_qubits, code.n, "clean_qubits");
  if (eq.empty()) throw CodeError("clean_qubits: no qubits selected");
  std::size_t e = eq.size();

  if (gf2::rank(restricted_columns(code, eq), 2 * e) != 2 * e)
    throw CodeError(
        "the chosen qubits' check-matrix columns are dependent; a nontrivial "
        "normalizer element is supported entirely on them");

  // Partial Gaussian elimination pivoting on the chosen columns
  // (x columns first, then z columns), applied to the operators themselves.
  std::vector<PauliOperator> gens = code.s_group.generators();
  std::vector<bool> used(gens.size(), false);
  std::unordered_map<std::size_t, std::size_t> xpivot, zpivot;
  auto eliminate = [&](bool xcol, std::size_t q) {
    auto bit = [&](const PauliOperator& g) { return xcol ? g.x(q) : g.z(q); };
    std::size_t pr = gens.size();
    for (std::size_t r = 0; r < gens.size(); ++r)
      if (!used[r] && bit(gens[r])) {
        pr = r;
        break;
      }
    if (pr == gens.size()) throw CodeError("pivot search failed");  // unreachable
    used[pr] = true;
    (xcol ? xpivot : zpivot)[q] = pr;
    for (std::size_t r = 0; r < gens.size(); ++r)
      if (r != pr && bit(gens[r])) gens[r] = gens[r] * gens[pr];
  };
  for (std::size_t q : eq) eliminate(true, q);
  for (std::size_t q : eq) eliminate(false, q);
  ConstructionResult res;
  res.reduced_stabilizers = gens;
  res.ebit_qubits = eq;

  // Clean an operator to identity on the chosen qubits by multiplying with
  // the pivot generators; this keeps it in the same normalizer coset.
  auto clean = [&](PauliOperator op) {
    for (std::size_t q : eq) {
      if (op.x(q)) op = op * gens[xpivot[q]];
      if (op.z(q)) op = op * gens[zpivot[q]];
    }
    return op;
  };

  // Alice's qubits first (original order), the new ebits last.
  std::vector<std::size_t> perm;
  std::vector<bool> is_eq(code.n, false);
  for (std::size_t q : eq) is_eq[q] = true;
  for (std::size_t q = 0; q < code.n; ++q)
    if (!is_eq[q]) perm.push_back(q);
  for (std::size_t q : eq) perm.push_back(q);
  std::size_t np = code.n - e;

  EaoaqecCode& out = res.code;
  out.name = code.name;
  out.n = np;
  out.e = e;
  {
    GeneratorSet s(code.n);
    for (const PauliOperator& g : gens) s.push(g.permuted(perm));
    out.s_group = std::move(s);
  }
  {
    std::vector<PauliOperator> h_ops;
    for (const PauliOperator& g : out.s_group.generators())
      h_ops.push_back(g.restricted_prefix(np));
    out.h_group = GeneratorSet::from_independent(h_ops);
  }
  for (const SymplecticPair& p : code.gauge_pairs)
    out.gauge_pairs.push_back(
        SymplecticPair{clean(p.first).permuted(perm), clean(p.second).permuted(perm)});
  for (const SymplecticPair& p : code.logical_pairs)
    out.logical_pairs.push_back(
        SymplecticPair{clean(p.first).permuted(perm), clean(p.second).permuted(perm)});
  for (const PauliOperator& t : code.transversal)
    out.transversal.push_back(clean(t).permuted(perm));

  res.before = parameters(code);
  res.after = parameters(out);
  res.hypothesis_report.push_back(
      HypothesisCheck{"cleaned-distance-non-decreasing",
                      HypothesisCheck::Status::Guaranteed, "holds unconditionally"});
  if (req.check_distances) {
    std::optional<std::size_t> d_before =
        fill_distance(code, res.before, req.hypothesis_cutoff, req.threads);
    std::optional<std::size_t> d_after =
        fill_distance(out, res.after, req.hypothesis_cutoff, req.threads);
    HypothesisCheck chk;
    chk.name = "distance-comparison";
    if (d_before && d_after) {
      chk.status = *d_after >= *d_before ? HypothesisCheck::Status::Pass
                                         : HypothesisCheck::Status::Fail;
      chk.detail = "d = " + std::to_string(*d_before) + " -> " + std::to_string(*d_after);
    } else {
      chk.status = HypothesisCheck::Status::Inconclusive;
      chk.detail = "a distance exceeds the cutoff";
    }
    res.hypothesis_report.push_back(std::move(chk));
  }
  return res;
}

ConstructionResult css_clean_qubits(const EaoaqecCode& code,
                                    const ConstructionRequest& req) {
  if (code.e != 0) throw CodeError("css_clean_qubits expects a code without ebits");
  std::vector<Bits> hx, hz;
  for (const PauliOperator& g : code.s_group.generators()) {
    bool has_x = !all_zero(g.x_bits()), has_z = !all_zero(g.z_bits());
    if (has_x && has_z)
      throw CodeError("stabilizer is not CSS: a generator mixes X and Z");
    if (has_x) hx.push_back(g.x_bits());
    if (has_z) hz.push_back(g.z_bits());
  }
  gf2::Echelon ex(code.n), ez(code.n);
  for (const Bits& r : hx) ex.insert(r);
  for (const Bits& r : hz) ez.insert(r);
  bool same = ex.rank() == ez.rank();
  for (const Bits& r : hz)
    if (same && !ex.contains(r)) same = false;
  if (!same) throw CodeError("stabilizer is not CSS: X and Z check matrices differ");
  if (req.ebits == 0 || req.ebits > ex.rank())
    throw CodeError("css_clean_qubits: requested ebits must be in [1, rank(H)] = [1, " +
                    std::to_string(ex.rank()) + "]");
  ConstructionRequest inner = req;
  inner.e_qubits.assign(ex.pivots().begin(), ex.pivots().begin() + req.ebits);
  return clean_qubits(code, inner);
}

std::vector<std::vector<std::size_t>> find_valid_eq(const EaoaqecCode& code,
                                                    std::size_t e, std::size_t limit) {
  std::vector<std::vector<std::size_t>> out;
  if (e == 0 || e > code.n) return out;
  std::vector<std::size_t> comb(e);
  for (std::size_t i = 0; i < e; ++i) comb[i] = i;
  while (true) {
    if (gf2::rank(restricted_columns(code, comb), 2 * e) == 2 * e) {
      out.push_back(comb);
      if (out.size() >= limit) break;
    }
    // next lexicographic combination
    std::size_t i = e;
    while (i-- > 0) {
      if (comb[i] < code.n - e + i) {
        ++comb[i];
        for (std::size_t j = i + 1; j < e; ++j) comb[j] = comb[j - 1] + 1;
        break;
      }
      if (i == 0) return out;
    }
    if (comb[0] > code.n - e) break;
  }
  return out;
}

}  // namespace eaoa
