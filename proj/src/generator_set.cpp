#include "eaoa/generator_set.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace eaoa {

Bits symplectic_vector(const PauliOperator& p) {
  std::size_t n = p.num_qubits();
  Bits v(words_for(2 * n), 0);
  for (std::size_t q = 0; q < n; ++q) {
    set_bit(v, q, p.x(q));
    set_bit(v, n + q, p.z(q));
  }
  return v;
}

Bits symplectic_dual_vector(const PauliOperator& p) {
  std::size_t n = p.num_qubits();
  Bits v(words_for(2 * n), 0);
  for (std::size_t q = 0; q < n; ++q) {
    set_bit(v, q, p.z(q));
    set_bit(v, n + q, p.x(q));
  }
  return v;
}

namespace {

std::size_t first_set(const Bits& v) {
  for (std::size_t w = 0; w < v.size(); ++w)
    if (v[w]) return w * 64 + std::countr_zero(v[w]);
  return v.size() * 64;
}

}  // namespace

GeneratorSet GeneratorSet::reduce(const std::vector<PauliOperator>& ops) {
  ReduceInfo info;
  return reduce(ops, info);
}

GeneratorSet GeneratorSet::reduce(const std::vector<PauliOperator>& ops, ReduceInfo& info) {
  if (ops.empty()) throw ParseError("generator list is empty");
  GeneratorSet g(ops.front().num_qubits());
  info = ReduceInfo{};
  // Row-echelon list of reduced *operators* so dependency phases are tracked.
  std::vector<PauliOperator> rows;
  std::vector<std::size_t> pivots;
  for (const PauliOperator& op : ops) {
    if (op.num_qubits() != g.n_)
      throw ParseError("generator list mixes qubit counts");
    PauliOperator r = op;
    Bits v = symplectic_vector(r);
    while (!all_zero(v)) {
      std::size_t p = first_set(v);
      auto it = std::lower_bound(pivots.begin(), pivots.end(), p);
      if (it == pivots.end() || *it != p) {
        std::size_t idx = it - pivots.begin();
        pivots.insert(it, p);
        rows.insert(rows.begin() + idx, r);
        g.gens_.push_back(op);
        g.echelon_.insert(v);
        g.duals_.push_back(symplectic_dual_vector(op));
        break;
      }
      r = r * rows[it - pivots.begin()];
      v = symplectic_vector(r);
    }
    if (all_zero(v)) {
      ++info.dropped;
      if (r.phase_exp() != 0) info.minus_identity = true;
    }
  }
  return g;
}

GeneratorSet GeneratorSet::from_independent(std::vector<PauliOperator> ops) {
  ReduceInfo info;
  GeneratorSet g = reduce(ops, info);
  if (g.size() != ops.size())
    throw ParseError("operators expected to be independent are not");
  return g;
}

void GeneratorSet::push(const PauliOperator& op) {
  if (n_ == 0 && gens_.empty()) {
    n_ = op.num_qubits();
    echelon_ = gf2::Echelon(2 * n_);
  }
  if (!echelon_.insert(symplectic_vector(op)))
    throw ParseError("pushed generator is dependent on the existing span");
  gens_.push_back(op);
  duals_.push_back(symplectic_dual_vector(op));
}

bool GeneratorSet::in_span(const PauliOperator& op) const {
  return echelon_.contains(symplectic_vector(op));
}

bool GeneratorSet::in_span_bits(const Bits& xz) const { return echelon_.contains(xz); }

bool GeneratorSet::in_centralizer(const PauliOperator& op) const {
  Bits v = symplectic_vector(op);
  for (const Bits& d : duals_)
    if (parity_of_and(d, v)) return false;
  return true;
}

Syndrome GeneratorSet::syndrome(const PauliOperator& op) const {
  Bits v = symplectic_vector(op);
  Syndrome s;
  s.bits.assign(words_for(std::max<std::size_t>(gens_.size(), 1)), 0);
  for (std::size_t i = 0; i < duals_.size(); ++i)
    if (parity_of_and(duals_[i], v)) set_bit(s.bits, i, true);
  return s;
}

Syndrome GeneratorSet::syndrome_bits(const Bits& x, const Bits& z) const {
  Bits v(words_for(2 * n_), 0);
  for (std::size_t q = 0; q < n_; ++q) {
    set_bit(v, q, get_bit(x, q));
    set_bit(v, n_ + q, get_bit(z, q));
  }
  Syndrome s;
  s.bits.assign(words_for(std::max<std::size_t>(gens_.size(), 1)), 0);
  for (std::size_t i = 0; i < duals_.size(); ++i)
    if (parity_of_and(duals_[i], v)) set_bit(s.bits, i, true);
  return s;
}

bool GeneratorSet::spans_same(const GeneratorSet& other) const {
  if (size() != other.size()) return false;
  for (const PauliOperator& g : other.generators())
    if (!in_span(g)) return false;
  return true;
}

SymplecticDecomposition decompose(const GeneratorSet& gens) {
  return decompose(gens.generators());
}

SymplecticDecomposition decompose(const std::vector<PauliOperator>& gens) {
  SymplecticDecomposition out;
  std::vector<PauliOperator> work = gens;
  while (!work.empty()) {
    PauliOperator g = work.front();
    work.erase(work.begin());
    std::size_t partner = work.size();
    for (std::size_t i = 0; i < work.size(); ++i)
      if (!commutes(g, work[i])) {
        partner = i;
        break;
      }
    if (partner == work.size()) {
      out.isotropic.push_back(g);
      continue;
    }
    PauliOperator p = work[partner];
    work.erase(work.begin() + partner);
    for (PauliOperator& h : work) {
      if (!commutes(h, g)) h = h * p;
      if (!commutes(h, p)) h = h * g;
    }
    out.pairs.push_back(SymplecticPair{g, p});
  }
  return out;
}

std::vector<PauliOperator> destabilizers(const SymplecticDecomposition& d,
                                         std::size_t num_qubits) {
  // Constraint rows: <dest, gen> = delta_{gen, target isotropic generator}.
  std::vector<Bits> rows;
  std::vector<const PauliOperator*> order;
  for (const SymplecticPair& p : d.pairs) {
    order.push_back(&p.first);
    order.push_back(&p.second);
  }
  for (const PauliOperator& g : d.isotropic) order.push_back(&g);
  for (const PauliOperator* g : order) rows.push_back(symplectic_dual_vector(*g));

  std::size_t base = 2 * d.pairs.size();
  std::vector<PauliOperator> out;
  for (std::size_t j = 0; j < d.isotropic.size(); ++j) {
    std::vector<bool> rhs(order.size(), false);
    rhs[base + j] = true;
    auto sol = gf2::solve(rows, 2 * num_qubits, rhs);
    if (!sol) throw std::logic_error("destabilizer system unsolvable");
    Bits x(words_for(num_qubits), 0), z(words_for(num_qubits), 0);
    for (std::size_t q = 0; q < num_qubits; ++q) {
      set_bit(x, q, get_bit(*sol, q));
      set_bit(z, q, get_bit(*sol, num_qubits + q));
    }
    out.push_back(PauliOperator::from_bits(num_qubits, std::move(x), std::move(z)));
  }
  return out;
}

}  // namespace eaoa
