#include "eaoa/pauli.hpp"

#include <bit>
#include <cctype>
#include <stdexcept>

namespace eaoa {

std::size_t popcount(const Bits& b) {
  std::size_t c = 0;
  for (Word w : b) c += std::popcount(w);
  return c;
}

bool parity_of_and(const Bits& a, const Bits& b) {
  Word acc = 0;
  for (std::size_t w = 0; w < a.size(); ++w) acc ^= a[w] & b[w];
  return std::popcount(acc) & 1u;
}

bool all_zero(const Bits& b) {
  for (Word w : b)
    if (w) return false;
  return true;
}

PauliOperator PauliOperator::identity(std::size_t n) {
  PauliOperator p;
  p.n_ = n;
  p.x_.assign(words_for(n), 0);
  p.z_.assign(words_for(n), 0);
  return p;
}

PauliOperator PauliOperator::from_bits(std::size_t n, Bits x, Bits z, int phase_exp) {
  PauliOperator p;
  p.n_ = n;
  p.x_ = std::move(x);
  p.z_ = std::move(z);
  p.x_.resize(words_for(n), 0);
  p.z_.resize(words_for(n), 0);
  p.phase_ = ((phase_exp % 4) + 4) % 4;
  return p;
}

PauliOperator PauliOperator::single(std::size_t n, std::size_t qubit, char kind) {
  PauliOperator p = identity(n);
  switch (kind) {
    case 'I':
      break;
    case 'X':
      set_bit(p.x_, qubit, true);
      break;
    case 'Z':
      set_bit(p.z_, qubit, true);
      break;
    case 'Y':
      set_bit(p.x_, qubit, true);
      set_bit(p.z_, qubit, true);
      p.phase_ = 1;
      break;
    default:
      throw ParseError(std::string("unknown Pauli kind '") + kind + "'");
  }
  return p;
}

bool PauliOperator::is_identity_bits() const {
  return all_zero(x_) && all_zero(z_);
}

bool PauliOperator::is_identity() const { return is_identity_bits() && phase_ == 0; }

bool PauliOperator::identity_on(std::size_t from, std::size_t to) const {
  for (std::size_t q = from; q < to; ++q)
    if (x(q) || z(q)) return false;
  return true;
}

std::size_t PauliOperator::weight() const {
  std::size_t c = 0;
  for (std::size_t w = 0; w < x_.size(); ++w) c += std::popcount(x_[w] | z_[w]);
  return c;
}

PauliOperator PauliOperator::inverse() const {
  // (i^p X^x Z^z)^-1 = i^{-p} Z^z X^x = i^{-p} (-1)^{x.z} X^x Z^z
  PauliOperator p = *this;
  int flip = parity_of_and(x_, z_) ? 2 : 0;
  p.phase_ = ((-phase_ + flip) % 4 + 4) % 4;
  return p;
}

PauliOperator PauliOperator::embedded(std::size_t total, std::size_t offset) const {
  PauliOperator p = identity(total);
  for (std::size_t q = 0; q < n_; ++q) {
    set_bit(p.x_, offset + q, x(q));
    set_bit(p.z_, offset + q, z(q));
  }
  p.phase_ = phase_;
  return p;
}

PauliOperator PauliOperator::restricted(const std::vector<std::size_t>& qubits) const {
  PauliOperator p = identity(qubits.size());
  for (std::size_t i = 0; i < qubits.size(); ++i) {
    set_bit(p.x_, i, x(qubits[i]));
    set_bit(p.z_, i, z(qubits[i]));
  }
  p.phase_ = phase_;
  return p;
}

PauliOperator PauliOperator::restricted_prefix(std::size_t n) const {
  std::vector<std::size_t> idx(n);
  for (std::size_t i = 0; i < n; ++i) idx[i] = i;
  return restricted(idx);
}

PauliOperator PauliOperator::permuted(const std::vector<std::size_t>& perm) const {
  return restricted(perm);
}

bool PauliOperator::same_bits(const PauliOperator& other) const {
  return n_ == other.n_ && x_ == other.x_ && z_ == other.z_;
}

PauliOperator operator*(const PauliOperator& a, const PauliOperator& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("Pauli product: size mismatch");
  PauliOperator p;
  p.n_ = a.n_;
  p.x_.resize(a.x_.size());
  p.z_.resize(a.z_.size());
  for (std::size_t w = 0; w < a.x_.size(); ++w) {
    p.x_[w] = a.x_[w] ^ b.x_[w];
    p.z_[w] = a.z_[w] ^ b.z_[w];
  }
  // Reordering Z^{z_a} past X^{x_b} contributes (-1)^{|z_a & x_b|}.
  int phase = a.phase_ + b.phase_ + (parity_of_and(a.z_, b.x_) ? 2 : 0);
  p.phase_ = ((phase % 4) + 4) % 4;
  return p;
}

bool commutes(const PauliOperator& a, const PauliOperator& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("commutes: size mismatch");
  return !(parity_of_and(a.x_, b.z_) ^ parity_of_and(a.z_, b.x_));
}

std::string PauliOperator::str() const {
  std::string out;
  int ny = 0;
  std::string body;
  body.reserve(n_);
  for (std::size_t q = 0; q < n_; ++q) {
    bool xb = x(q), zb = z(q);
    if (xb && zb) {
      body += 'Y';
      ++ny;
    } else if (xb) {
      body += 'X';
    } else if (zb) {
      body += 'Z';
    } else {
      body += 'I';
    }
  }
  static const char* prefixes[4] = {"", "i", "-", "-i"};
  out = prefixes[((phase_ - ny) % 4 + 4) % 4];
  out += body;
  return out;
}

namespace {

// Append one per-qubit cell to (x, z, phase). Returns false if the cell is invalid.
bool apply_cell(const std::string& cell, Bits& x, Bits& z, int& phase, std::size_t q) {
  if (cell == "I") return true;
  if (cell == "X") {
    set_bit(x, q, true);
    return true;
  }
  if (cell == "Z") {
    set_bit(z, q, true);
    return true;
  }
  if (cell == "Y") {
    set_bit(x, q, true);
    set_bit(z, q, true);
    phase += 1;
    return true;
  }
  if (cell == "XZ") {
    set_bit(x, q, true);
    set_bit(z, q, true);
    return true;
  }
  return false;
}

}  // namespace

PauliOperator parse_pauli(const std::string& text, std::size_t num_qubits) {
  // Strip the phase prefix.
  std::size_t pos = 0;
  while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  int phase = 0;
  bool neg = false;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    neg = text[pos] == '-';
    ++pos;
  }
  if (pos < text.size() && text[pos] == 'i') {
    phase = 1;
    ++pos;
  }
  if (neg) phase += 2;

  // Collect cells.
  std::vector<std::string> cells;
  bool has_space = false;
  for (std::size_t i = pos; i < text.size(); ++i)
    if (std::isspace(static_cast<unsigned char>(text[i]))) has_space = true;
  if (has_space) {
    std::string cur;
    for (std::size_t i = pos; i <= text.size(); ++i) {
      char c = i < text.size() ? text[i] : ' ';
      if (std::isspace(static_cast<unsigned char>(c))) {
        if (!cur.empty()) {
          if (cur != "|") cells.push_back(cur);
          cur.clear();
        }
      } else {
        cur += c;
      }
    }
  } else {
    // Compact form: one char per qubit, folding "XZ" pairs only when the
    // plain count would overshoot num_qubits.
    std::string body = text.substr(pos);
    std::size_t extra = body.size() > num_qubits ? body.size() - num_qubits : 0;
    for (std::size_t i = 0; i < body.size(); ++i) {
      if (extra > 0 && body[i] == 'X' && i + 1 < body.size() && body[i + 1] == 'Z') {
        cells.push_back("XZ");
        ++i;
        --extra;
      } else {
        cells.push_back(std::string(1, body[i]));
      }
    }
  }

  if (cells.size() != num_qubits)
    throw ParseError("expected " + std::to_string(num_qubits) + " cells, got " +
                     std::to_string(cells.size()) + " in '" + text + "'");
  Bits x(words_for(num_qubits), 0), z(words_for(num_qubits), 0);
  for (std::size_t q = 0; q < num_qubits; ++q)
    if (!apply_cell(cells[q], x, z, phase, q))
      throw ParseError("bad Pauli cell '" + cells[q] + "' in '" + text + "'");
  return PauliOperator::from_bits(num_qubits, std::move(x), std::move(z), phase);
}

}  // namespace eaoa
