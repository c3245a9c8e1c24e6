#pragma once

// Dense linear algebra over the chain ring Z/p^k.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "wittcenter/ring.hpp"

namespace wittcenter {

using ModRow = std::vector<std::uint64_t>;

// Row-major matrix over Z/p^k; rows are generators of a submodule of
// (Z/p^k)^cols.
class ModMatrix {
 public:
  ModMatrix(unsigned p, unsigned k, std::size_t cols);

  unsigned prime() const noexcept { return p_; }
  unsigned exponent() const noexcept { return k_; }
  std::uint64_t modulus() const noexcept { return q_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t rows() const noexcept { return rows_.size(); }

  const ModRow& row(std::size_t i) const { return rows_[i]; }
  const std::vector<ModRow>& data() const noexcept { return rows_; }

  // Entries are reduced modulo p^k on insertion.
  void add_row(ModRow row);

  friend bool operator==(const ModMatrix& a, const ModMatrix& b) noexcept {
    return a.p_ == b.p_ && a.k_ == b.k_ && a.cols_ == b.cols_ &&
           a.rows_ == b.rows_;
  }

 private:
  unsigned p_;
  unsigned k_;
  std::uint64_t q_;
  std::size_t cols_;
  std::vector<ModRow> rows_;
};

// Howell normal form: echelon form with pivots p^v, entries above each pivot
// reduced into [0, p^v), zero rows dropped, and closed under the saturation
// that makes it canonical. Two matrices span the same submodule iff their
// Howell forms are identical.
ModMatrix howell_form(const ModMatrix& m);

// Index of the first nonzero entry, or row.size() for a zero row.
std::size_t pivot_column(const ModRow& row);

// Howell basis of the left kernel {v : v * a = 0}.
ModMatrix left_kernel(const ModMatrix& a);

// Some v with v * a = target, or nothing when target is outside the row span.
std::optional<ModRow> solve_left(const ModMatrix& a, const ModRow& target);

// Reduces target by a Howell basis; the result is zero iff target lies in the
// row span.
ModRow reduce_by_howell(const ModMatrix& howell, ModRow target);

}  // namespace wittcenter
