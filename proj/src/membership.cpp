#include "membership.hpp"

namespace eaoa {
namespace detail {

Bits join_xz(const Bits& x, const Bits& z, std::size_t nq) {
  Bits v(words_for(2 * nq), 0);
  for (std::size_t q = 0; q < nq; ++q) {
    set_bit(v, q, get_bit(x, q));
    set_bit(v, nq + q, get_bit(z, q));
  }
  return v;
}

bool UncorrectableSet::contains(const Bits& x, const Bits& z, std::string* branch) const {
  Syndrome s = table.syn(x, z);
  if (!first_inside) {
    if (!s.any()) {
      Bits v = join_xz(x, z, nq);
      if (!allowed.contains(v)) {
        if (branch) *branch = "normalizer-minus-gauge";
        return true;
      }
    }
  } else {
    Bits v = join_xz(x, z, nq);
    if (first_inside->contains(v) && !allowed.contains(std::move(v))) {
      if (branch) *branch = "normalizer-minus-gauge";
      return true;
    }
  }
  if (!coset_synds.empty() && coset_synds.count(s)) {
    if (branch) *branch = "coset-union";
    return true;
  }
  return false;
}

namespace {

void add_coset_syndromes(const EaoaqecCode& code, const SyndromeTable& table,
                         std::size_t nq,
                         std::unordered_set<Syndrome, SyndromeHash>& out) {
  // Cosets T_i T_j^-1 Z(.); membership is phase-blind so the unordered
  // product's bit pattern determines the coset syndrome.
  const auto& t = code.transversal;
  for (std::size_t i = 0; i < t.size(); ++i)
    for (std::size_t j = i + 1; j < t.size(); ++j) {
      PauliOperator prod = (t[i] * t[j]).restricted_prefix(nq);
      out.insert(table.syn(prod.x_bits(), prod.z_bits()));
    }
}

}  // namespace

UncorrectableSet UncorrectableSet::dressed(const EaoaqecCode& code) {
  UncorrectableSet u;
  u.nq = code.n;
  for (const PauliOperator& g : code.h_group.generators()) u.table.add(g);
  u.allowed = gf2::Echelon(2 * code.n);
  SymplecticDecomposition d = decompose(code.h_group);
  for (const PauliOperator& g : d.isotropic) u.allowed.insert(symplectic_vector(g));
  for (const PauliOperator& g : code.gauge_ops())
    u.allowed.insert(symplectic_vector(g.restricted_prefix(code.n)));
  add_coset_syndromes(code, u.table, code.n, u.coset_synds);
  return u;
}

UncorrectableSet UncorrectableSet::bare(const EaoaqecCode& code) {
  UncorrectableSet u;
  u.nq = code.n;
  for (const PauliOperator& g : code.h_group.generators()) u.table.add(g);
  u.allowed = gf2::Echelon(2 * code.n);
  SymplecticDecomposition d = decompose(code.h_group);
  for (const PauliOperator& g : d.isotropic) u.allowed.insert(symplectic_vector(g));
  gf2::Echelon inside = u.allowed;
  for (const PauliOperator& g : code.logical_ops())
    inside.insert(symplectic_vector(g.restricted_prefix(code.n)));
  u.first_inside = std::move(inside);
  add_coset_syndromes(code, u.table, code.n, u.coset_synds);
  return u;
}

UncorrectableSet UncorrectableSet::noisy_bob(const EaoaqecCode& code) {
  UncorrectableSet u;
  std::size_t total = code.n + code.e;
  u.nq = total;
  for (const PauliOperator& g : code.s_group.generators()) u.table.add(g);
  u.allowed = gf2::Echelon(2 * total);
  for (const PauliOperator& g : code.s_group.generators())
    u.allowed.insert(symplectic_vector(g));
  for (const PauliOperator& g : code.gauge_ops()) u.allowed.insert(symplectic_vector(g));
  add_coset_syndromes(code, u.table, total, u.coset_synds);
  return u;
}

}  // namespace detail
}  // namespace eaoa
