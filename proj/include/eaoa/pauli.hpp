#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace eaoa {

using Word = std::uint64_t;
using Bits = std::vector<Word>;  // packed bit-vector; bit q lives in word q/64

inline std::size_t words_for(std::size_t bits) { return (bits + 63) / 64; }

inline bool get_bit(const Bits& b, std::size_t i) {
  return (b[i >> 6] >> (i & 63)) & 1u;
}

inline void set_bit(Bits& b, std::size_t i, bool v) {
  Word mask = Word(1) << (i & 63);
  if (v)
    b[i >> 6] |= mask;
  else
    b[i >> 6] &= ~mask;
}

inline void xor_into(Bits& dst, const Bits& src) {
  for (std::size_t w = 0; w < dst.size(); ++w) dst[w] ^= src[w];
}

std::size_t popcount(const Bits& b);
bool parity_of_and(const Bits& a, const Bits& b);
bool all_zero(const Bits& b);

/*
 * An n-qubit Pauli operator stored as i^phase_exp * prod_q X^{x_q} Z^{z_q}
 * (per qubit, the X factor to the left of the Z factor). Y is represented
 * as x=z=1 with a phase contribution of i, i.e. Y = i XZ. Qubit 0 is the
 * leftmost column of the printed form.
 */
class PauliOperator {
 public:
  PauliOperator() = default;

  static PauliOperator identity(std::size_t n);
  static PauliOperator from_bits(std::size_t n, Bits x, Bits z, int phase_exp = 0);
  // kind in {'I','X','Y','Z'}; Y gets phase_exp 1 so it prints as "Y".
  static PauliOperator single(std::size_t n, std::size_t qubit, char kind);

  std::size_t num_qubits() const { return n_; }
  const Bits& x_bits() const { return x_; }
  const Bits& z_bits() const { return z_; }
  int phase_exp() const { return phase_; }

  bool x(std::size_t q) const { return get_bit(x_, q); }
  bool z(std::size_t q) const { return get_bit(z_, q); }

  bool is_identity_bits() const;           // bit pattern is identity, any phase
  bool is_identity() const;                // identity bits and phase_exp == 0
  bool identity_on(std::size_t from, std::size_t to) const;  // qubits [from,to)
  std::size_t weight() const;              // number of non-identity columns

  PauliOperator inverse() const;
  // Place this operator at qubit offset `offset` inside a `total`-qubit register.
  PauliOperator embedded(std::size_t total, std::size_t offset) const;
  // Keep only the listed qubits, in the listed order; phase_exp is preserved.
  PauliOperator restricted(const std::vector<std::size_t>& qubits) const;
  PauliOperator restricted_prefix(std::size_t n) const;  // first n qubits
  // new qubit i is old qubit perm[i]
  PauliOperator permuted(const std::vector<std::size_t>& perm) const;

  bool same_bits(const PauliOperator& other) const;
  bool operator==(const PauliOperator& other) const = default;

  // Canonical compact form: optional prefix from {"", "i", "-", "-i"},
  // then one of I/X/Y/Z per qubit.
  std::string str() const;

  friend PauliOperator operator*(const PauliOperator& a, const PauliOperator& b);
  friend bool commutes(const PauliOperator& a, const PauliOperator& b);

 private:
  std::size_t n_ = 0;
  Bits x_, z_;
  int phase_ = 0;
};

/*
 * Parse a Pauli string. Accepts an optional phase prefix (+, -, i, -i, +i),
 * then either one symbol per qubit (I/X/Y/Z, compact form) or
 * whitespace-separated per-qubit cells from {I, X, Y, Z, XZ}. In compact
 * form an embedded "XZ" pair is folded onto one qubit only when the symbol
 * count would otherwise exceed num_qubits (leftmost-first). A '|' column
 * separator is ignored.
 */
PauliOperator parse_pauli(const std::string& text, std::size_t num_qubits);

struct ParseError : std::exception {
  explicit ParseError(std::string m) : msg(std::move(m)) {}
  const char* what() const noexcept override { return msg.c_str(); }
  std::string msg;
};

}  // namespace eaoa
