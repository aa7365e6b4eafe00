#pragma once

#include <optional>
#include <vector>

#include "eaoa/pauli.hpp"

namespace eaoa {
namespace gf2 {

/*
 * Row-echelon basis over F2 with packed-word rows. Rows are kept sorted by
 * pivot column; reduce() XORs matching rows into a vector and reports whether
 * it vanished.
 */
class Echelon {
 public:
  explicit Echelon(std::size_t ncols) : ncols_(ncols) {}

  std::size_t ncols() const { return ncols_; }
  std::size_t rank() const { return rows_.size(); }
  const std::vector<Bits>& rows() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  // Reduce v in place against the basis; true if v became zero.
  bool reduce(Bits& v) const;
  bool contains(Bits v) const { return reduce(v); }
  // Reduce v and insert the remainder if nonzero. Returns true if inserted.
  bool insert(Bits v);

 private:
  std::size_t ncols_;
  std::vector<Bits> rows_;
  std::vector<std::size_t> pivots_;
};

// Solve A x = b over F2 (rows of A are ncols-bit vectors). Returns one
// solution with free variables set to zero, or nullopt if inconsistent.
std::optional<Bits> solve(const std::vector<Bits>& rows, std::size_t ncols,
                          const std::vector<bool>& rhs);

// Basis of the null space {x : A x = 0}.
std::vector<Bits> kernel_basis(const std::vector<Bits>& rows, std::size_t ncols);

std::size_t rank(const std::vector<Bits>& rows, std::size_t ncols);

}  // namespace gf2
}  // namespace eaoa
