#include "eaoa/gf2.hpp"

#include <algorithm>
#include <bit>

namespace eaoa {
namespace gf2 {

namespace {

std::size_t pivot_of(const Bits& v, std::size_t ncols) {
  for (std::size_t w = 0; w < v.size(); ++w) {
    if (v[w]) {
      std::size_t c = w * 64 + std::countr_zero(v[w]);
      return c < ncols ? c : ncols;
    }
  }
  return ncols;  // zero vector
}

}  // namespace

bool Echelon::reduce(Bits& v) const {
  for (std::size_t r = 0; r < rows_.size(); ++r)
    if (get_bit(v, pivots_[r])) xor_into(v, rows_[r]);
  return all_zero(v);
}

bool Echelon::insert(Bits v) {
  if (reduce(v)) return false;
  std::size_t p = pivot_of(v, ncols_);
  auto it = std::lower_bound(pivots_.begin(), pivots_.end(), p);
  std::size_t idx = it - pivots_.begin();
  pivots_.insert(it, p);
  rows_.insert(rows_.begin() + idx, std::move(v));
  return true;
}

std::optional<Bits> solve(const std::vector<Bits>& rows, std::size_t ncols,
                          const std::vector<bool>& rhs) {
  // Forward elimination on augmented rows.
  std::vector<Bits> a = rows;
  std::vector<bool> b(rhs);
  std::vector<std::size_t> pivot_col;
  std::vector<std::size_t> pivot_row;
  std::size_t mrows = a.size();
  std::vector<bool> used(mrows, false);
  for (std::size_t c = 0; c < ncols; ++c) {
    std::size_t pr = mrows;
    for (std::size_t r = 0; r < mrows; ++r)
      if (!used[r] && get_bit(a[r], c)) {
        pr = r;
        break;
      }
    if (pr == mrows) continue;
    used[pr] = true;
    pivot_col.push_back(c);
    pivot_row.push_back(pr);
    for (std::size_t r = 0; r < mrows; ++r)
      if (r != pr && get_bit(a[r], c)) {
        xor_into(a[r], a[pr]);
        b[r] = b[r] ^ b[pr];
      }
  }
  for (std::size_t r = 0; r < mrows; ++r)
    if (!used[r] && b[r] && all_zero(a[r])) return std::nullopt;
  // Any remaining non-pivot rows are zero rows; inconsistency only if b set.
  for (std::size_t r = 0; r < mrows; ++r)
    if (!used[r] && b[r]) return std::nullopt;
  Bits x(words_for(ncols), 0);
  for (std::size_t i = 0; i < pivot_col.size(); ++i)
    set_bit(x, pivot_col[i], b[pivot_row[i]]);
  return x;
}

std::vector<Bits> kernel_basis(const std::vector<Bits>& rows, std::size_t ncols) {
  // Column-reduce: track pivot column per reduced row, then free columns give basis.
  std::vector<Bits> a = rows;
  std::vector<std::size_t> pivot_col(a.size(), ncols);
  std::size_t rank = 0;
  for (std::size_t c = 0; c < ncols && rank < a.size(); ++c) {
    std::size_t pr = a.size();
    for (std::size_t r = rank; r < a.size(); ++r)
      if (get_bit(a[r], c)) {
        pr = r;
        break;
      }
    if (pr == a.size()) continue;
    std::swap(a[rank], a[pr]);
    for (std::size_t r = 0; r < a.size(); ++r)
      if (r != rank && get_bit(a[r], c)) xor_into(a[r], a[rank]);
    pivot_col[rank] = c;
    ++rank;
  }
  std::vector<bool> is_pivot(ncols, false);
  for (std::size_t r = 0; r < rank; ++r) is_pivot[pivot_col[r]] = true;
  std::vector<Bits> basis;
  for (std::size_t c = 0; c < ncols; ++c) {
    if (is_pivot[c]) continue;
    Bits v(words_for(ncols), 0);
    set_bit(v, c, true);
    for (std::size_t r = 0; r < rank; ++r)
      if (get_bit(a[r], c)) set_bit(v, pivot_col[r], true);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::size_t rank(const std::vector<Bits>& rows, std::size_t ncols) {
  Echelon e(ncols);
  for (const Bits& r : rows) e.insert(r);
  return e.rank();
}

}  // namespace gf2
}  // namespace eaoa
