#pragma once

#include <optional>
#include <string>
#include <unordered_set>

#include "eaoa/code.hpp"

namespace eaoa {
namespace detail {

// Fast anticommutation syndrome of a candidate bit pattern against a fixed
// generator list: bit i = <gen_i.z, x> + <gen_i.x, z> over F2.
struct SyndromeTable {
  std::vector<Bits> gz, gx;
  std::size_t nwords = 0;

  void add(const PauliOperator& g) {
    gz.push_back(g.z_bits());
    gx.push_back(g.x_bits());
  }
  Syndrome syn(const Bits& x, const Bits& z) const {
    Syndrome s;
    s.bits.assign(words_for(std::max<std::size_t>(gz.size(), 1)), 0);
    for (std::size_t i = 0; i < gz.size(); ++i)
      if (parity_of_and(gz[i], x) ^ parity_of_and(gx[i], z)) set_bit(s.bits, i, true);
    return s;
  }
};

/*
 * Membership test for an uncorrectable-error set of the common shape
 *   first-branch  U  union of normalizer cosets,
 * where the first branch is either "commutes with the group but outside the
 * allowed span" (dressed / noisy-Bob) or "inside one span but outside a
 * smaller one" (bare).
 */
struct UncorrectableSet {
  std::size_t nq = 0;
  SyndromeTable table;
  gf2::Echelon allowed{0};
  std::optional<gf2::Echelon> first_inside;  // bare mode only
  std::unordered_set<Syndrome, SyndromeHash> coset_synds;

  bool contains(const Bits& x, const Bits& z, std::string* branch = nullptr) const;
  bool contains(const PauliOperator& op, std::string* branch = nullptr) const {
    return contains(op.x_bits(), op.z_bits(), branch);
  }

  static UncorrectableSet dressed(const EaoaqecCode& code);
  static UncorrectableSet bare(const EaoaqecCode& code);
  static UncorrectableSet noisy_bob(const EaoaqecCode& code);
};

Bits join_xz(const Bits& x, const Bits& z, std::size_t nq);

}  // namespace detail
}  // namespace eaoa
