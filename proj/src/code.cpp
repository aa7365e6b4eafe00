#include "eaoa/code.hpp"

#include <algorithm>
#include <stdexcept>

namespace eaoa {

std::string CodeParameters::str() const {
  std::string out = "[[" + std::to_string(n) + "," + std::to_string(k);
  if (d) out += "," + std::to_string(*d);
  out += ";" + std::to_string(r) + "," + std::to_string(e) + "," + std::to_string(c_b) + "]]";
  return out;
}

std::vector<PauliOperator> EaoaqecCode::gauge_ops() const {
  std::vector<PauliOperator> out;
  for (const SymplecticPair& p : gauge_pairs) {
    out.push_back(p.first);
    out.push_back(p.second);
  }
  return out;
}

std::vector<PauliOperator> EaoaqecCode::logical_ops() const {
  std::vector<PauliOperator> out;
  for (const SymplecticPair& p : logical_pairs) {
    out.push_back(p.first);
    out.push_back(p.second);
  }
  return out;
}

std::pair<GeneratorSet, std::size_t> extend_to_abelian(const GeneratorSet& h) {
  SymplecticDecomposition d = decompose(h);
  std::size_t n = h.num_qubits();
  std::size_t e = d.pairs.size();
  GeneratorSet s(n + e);
  for (std::size_t j = 0; j < e; ++j) {
    PauliOperator zext = d.pairs[j].first.embedded(n + e, 0) *
                         PauliOperator::single(n + e, n + j, 'Z');
    PauliOperator xext = d.pairs[j].second.embedded(n + e, 0) *
                         PauliOperator::single(n + e, n + j, 'X');
    s.push(zext);
    s.push(xext);
  }
  for (const PauliOperator& g : d.isotropic) s.push(g.embedded(n + e, 0));
  return {std::move(s), e};
}

namespace {

PauliOperator pad_to(const PauliOperator& op, std::size_t total) {
  if (op.num_qubits() == total) return op;
  if (op.num_qubits() < total) return op.embedded(total, 0);
  throw CodeError("operator has more qubits (" + std::to_string(op.num_qubits()) +
                  ") than the extended register (" + std::to_string(total) + ")");
}

std::vector<SymplecticPair> pair_up(const std::vector<PauliOperator>& flat,
                                    const char* what) {
  if (flat.empty()) return {};
  if (flat.size() % 2)
    throw CodeError(std::string(what) + " operator list has odd length");
  // Already-clean consecutive pairs are kept verbatim; otherwise re-pair by
  // symplectic Gram-Schmidt.
  bool clean = true;
  for (std::size_t i = 0; i < flat.size() && clean; i += 2) {
    if (commutes(flat[i], flat[i + 1])) clean = false;
    for (std::size_t j = 0; j < flat.size() && clean; ++j)
      if (j != i && j != i + 1 &&
          (!commutes(flat[i], flat[j]) || !commutes(flat[i + 1], flat[j])))
        clean = false;
  }
  std::vector<SymplecticPair> pairs;
  if (clean) {
    for (std::size_t i = 0; i < flat.size(); i += 2)
      pairs.push_back(SymplecticPair{flat[i], flat[i + 1]});
    return pairs;
  }
  SymplecticDecomposition d = decompose(flat);
  if (!d.isotropic.empty())
    throw CodeError(std::string(what) + " group is not fully symplectic");
  return d.pairs;
}

}  // namespace

EaoaqecCode make_code(std::size_t n, const std::vector<PauliOperator>& h_ops,
                      const std::vector<PauliOperator>& gauge_flat,
                      const std::vector<PauliOperator>& logical_flat,
                      const std::vector<PauliOperator>& transversal,
                      const std::vector<PauliOperator>& explicit_s,
                      const std::string& name) {
  EaoaqecCode code;
  code.name = name;
  code.n = n;
  GeneratorSet::ReduceInfo info;
  code.h_group = GeneratorSet::reduce(h_ops, info);
  if (info.minus_identity) throw CodeError("-I lies in the span of the Pauli frame group");
  SymplecticDecomposition d = decompose(code.h_group);
  code.e = d.pairs.size();
  std::size_t total = n + code.e;

  if (!explicit_s.empty()) {
    GeneratorSet s(total);
    for (const PauliOperator& op : explicit_s) s.push(pad_to(op, total));
    code.s_group = std::move(s);
    if (code.s_group.size() != code.h_group.size())
      throw CodeError("explicit S has the wrong number of generators");
  } else {
    code.s_group = extend_to_abelian(code.h_group).first;
  }

  std::vector<PauliOperator> gpad, lpad;
  for (const PauliOperator& op : gauge_flat) gpad.push_back(pad_to(op, total));
  for (const PauliOperator& op : logical_flat) lpad.push_back(pad_to(op, total));
  code.gauge_pairs = pair_up(gpad, "gauge");
  if (!lpad.empty())
    code.logical_pairs = pair_up(lpad, "logical");
  else
    code.logical_pairs =
        derive_logical_pairs(n, code.e, code.h_group, code.s_group, code.gauge_pairs);

  bool saw_identity = false;
  for (const PauliOperator& op : transversal) {
    PauliOperator t = pad_to(op, total);
    if (t.is_identity_bits()) {
      saw_identity = true;
      continue;
    }
    code.transversal.push_back(t);
  }
  (void)saw_identity;
  code.transversal.insert(code.transversal.begin(), PauliOperator::identity(total));
  return code;
}

bool ValidationReport::ok() const {
  for (const ValidationCheck& c : checks)
    if (!c.passed) return false;
  return true;
}

ValidationReport validate(const EaoaqecCode& code) {
  ValidationReport rep;
  auto add = [&rep](const std::string& name, bool ok, const std::string& detail = "") {
    rep.checks.push_back(ValidationCheck{name, ok, detail});
  };
  std::size_t total = code.n + code.e;

  // S Abelian.
  {
    bool ok = true;
    std::string detail;
    const auto& g = code.s_group.generators();
    for (std::size_t i = 0; i < g.size() && ok; ++i)
      for (std::size_t j = i + 1; j < g.size(); ++j)
        if (!commutes(g[i], g[j])) {
          ok = false;
          detail = "generators " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                   " anticommute";
          break;
        }
    add("s_abelian", ok, detail);
  }
  // Restriction of S to Alice's qubits spans H.
  {
    std::vector<PauliOperator> restricted;
    for (const PauliOperator& g : code.s_group.generators())
      restricted.push_back(g.restricted_prefix(code.n));
    GeneratorSet::ReduceInfo info;
    GeneratorSet r = GeneratorSet::reduce(restricted, info);
    bool ok = !info.minus_identity && r.spans_same(code.h_group);
    add("s_restriction_spans_h", ok);
  }
  // Gauge / logical / transversal identity on the ebit columns.
  {
    bool ok = true;
    std::string detail;
    auto check = [&](const PauliOperator& op, const std::string& what) {
      if (!op.identity_on(code.n, total)) {
        ok = false;
        if (detail.empty()) detail = what + " acts on an ebit column";
      }
    };
    for (const SymplecticPair& p : code.gauge_pairs) {
      check(p.first, "gauge operator");
      check(p.second, "gauge operator");
    }
    for (const SymplecticPair& p : code.logical_pairs) {
      check(p.first, "logical operator");
      check(p.second, "logical operator");
    }
    for (const PauliOperator& t : code.transversal) check(t, "transversal element");
    add("operators_identity_on_ebits", ok, detail);
  }
  // Gauge and logical operators commute with S.
  {
    bool ok = true;
    for (const PauliOperator& op : code.gauge_ops())
      if (!code.s_group.in_centralizer(op)) ok = false;
    for (const PauliOperator& op : code.logical_ops())
      if (!code.s_group.in_centralizer(op)) ok = false;
    add("gauge_logical_commute_with_s", ok);
  }
  // Gauge and logical groups mutually commute.
  {
    bool ok = true;
    for (const PauliOperator& g : code.gauge_ops())
      for (const PauliOperator& l : code.logical_ops())
        if (!commutes(g, l)) ok = false;
    add("gauge_logical_mutually_commute", ok);
  }
  // Pair structure: anticommuting within a pair, commuting across pairs.
  auto pair_check = [](const std::vector<SymplecticPair>& pairs) {
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      if (commutes(pairs[i].first, pairs[i].second)) return false;
      for (std::size_t j = 0; j < pairs.size(); ++j) {
        if (i == j) continue;
        if (!commutes(pairs[i].first, pairs[j].first) ||
            !commutes(pairs[i].first, pairs[j].second) ||
            !commutes(pairs[i].second, pairs[j].first) ||
            !commutes(pairs[i].second, pairs[j].second))
          return false;
      }
    }
    return true;
  };
  add("gauge_pairs_symplectic", pair_check(code.gauge_pairs));
  add("logical_pairs_symplectic", pair_check(code.logical_pairs));
  // Transversal shape: identity first, pairwise distinct cosets of the
  // normalizer of S.
  {
    bool ok = !code.transversal.empty() && code.transversal.front().is_identity_bits();
    add("transversal_identity_first", ok);
  }
  {
    bool ok = true;
    std::string detail;
    for (std::size_t i = 0; i < code.transversal.size() && ok; ++i)
      for (std::size_t j = i + 1; j < code.transversal.size(); ++j) {
        PauliOperator prod = code.transversal[i] * code.transversal[j];
        if (!code.s_group.syndrome(prod).any()) {
          ok = false;
          detail = "elements " + std::to_string(i) + " and " + std::to_string(j) +
                   " share a coset";
          break;
        }
      }
    add("transversal_distinct_cosets", ok, detail);
  }
  // Parameter arithmetic.
  {
    bool ok = code.h_group.size() >= 2 * code.e &&
              code.n >= code.e + code.s() + code.r() &&
              code.logical_pairs.size() == code.k();
    add("parameter_arithmetic", ok,
        ok ? "" : "k = n - e - s - r is inconsistent with the operator counts");
  }
  return rep;
}

CodeParameters parameters(const EaoaqecCode& code) {
  CodeParameters p;
  p.n = code.n;
  p.k = code.k();
  p.r = code.r();
  p.e = code.e;
  p.c_b = code.transversal.size();
  return p;
}

std::vector<PauliOperator> full_transversal(const EaoaqecCode& code, std::size_t limit) {
  std::size_t m = code.h_group.size();
  if (m > limit)
    throw CodeError("full transversal has 2^" + std::to_string(m) +
                    " elements, above the limit");
  SymplecticDecomposition d = decompose(code.h_group);
  std::vector<PauliOperator> basis;
  for (const SymplecticPair& p : d.pairs) {
    basis.push_back(p.first);
    basis.push_back(p.second);
  }
  for (const PauliOperator& dest : destabilizers(d, code.n)) basis.push_back(dest);
  std::size_t total = code.n + code.e;
  std::vector<PauliOperator> out;
  out.reserve(std::size_t(1) << m);
  for (std::size_t mask = 0; mask < (std::size_t(1) << m); ++mask) {
    PauliOperator prod = PauliOperator::identity(code.n);
    for (std::size_t b = 0; b < m; ++b)
      if ((mask >> b) & 1) prod = prod * basis[b];
    out.push_back(prod.embedded(total, 0));
  }
  return out;
}

std::vector<SymplecticPair> derive_logical_pairs(
    std::size_t n, std::size_t e, const GeneratorSet& h_group,
    const GeneratorSet& s_group, const std::vector<SymplecticPair>& gauge_pairs) {
  (void)e;
  // Constraints: commute with every S generator (restricted to Alice's
  // qubits this is the dual of H's generators) and with every gauge operator.
  std::vector<Bits> rows;
  for (const PauliOperator& g : s_group.generators())
    rows.push_back(symplectic_dual_vector(g.restricted_prefix(n)));
  for (const SymplecticPair& p : gauge_pairs) {
    rows.push_back(symplectic_dual_vector(p.first.restricted_prefix(n)));
    rows.push_back(symplectic_dual_vector(p.second.restricted_prefix(n)));
  }
  std::vector<Bits> kernel = gf2::kernel_basis(rows, 2 * n);

  // Quotient out the isotropic part of H and the gauge span.
  SymplecticDecomposition d = decompose(h_group);
  gf2::Echelon known(2 * n);
  for (const PauliOperator& g : d.isotropic) known.insert(symplectic_vector(g));
  for (const SymplecticPair& p : gauge_pairs) {
    known.insert(symplectic_vector(p.first.restricted_prefix(n)));
    known.insert(symplectic_vector(p.second.restricted_prefix(n)));
  }
  std::vector<PauliOperator> reps;
  gf2::Echelon seen = known;
  for (Bits v : kernel) {
    if (!seen.insert(v)) continue;
    Bits x(words_for(n), 0), z(words_for(n), 0);
    for (std::size_t q = 0; q < n; ++q) {
      set_bit(x, q, get_bit(v, q));
      set_bit(z, q, get_bit(v, n + q));
    }
    reps.push_back(PauliOperator::from_bits(n, std::move(x), std::move(z)));
  }
  SymplecticDecomposition lp = decompose(reps);
  if (!lp.isotropic.empty())
    throw std::logic_error("logical completion left an isotropic remainder");
  std::vector<SymplecticPair> out;
  std::size_t total = n + e;
  for (const SymplecticPair& p : lp.pairs)
    out.push_back(SymplecticPair{p.first.embedded(total, 0), p.second.embedded(total, 0)});
  return out;
}

}  // namespace eaoa
