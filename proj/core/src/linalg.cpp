#include "wittcenter/linalg.hpp"

#include <algorithm>
#include <string>

namespace wittcenter {

ModMatrix::ModMatrix(unsigned p, unsigned k, std::size_t cols)
    : p_(p), k_(k), cols_(cols) {
  require_prime(p);
  if (k == 0) throw RangeError("matrix over Z/p^0");
  q_ = checked_prime_power(p, k);
}

void ModMatrix::add_row(ModRow row) {
  if (row.size() != cols_) {
    throw StructuralError("row of length " + std::to_string(row.size()) +
                          " in a matrix with " + std::to_string(cols_) +
                          " columns");
  }
  for (auto& e : row) e %= q_;
  rows_.push_back(std::move(row));
}

std::size_t pivot_column(const ModRow& row) {
  for (std::size_t c = 0; c < row.size(); ++c) {
    if (row[c] != 0) return c;
  }
  return row.size();
}

namespace {

bool is_zero_row(const ModRow& row) {
  return std::all_of(row.begin(), row.end(), [](auto e) { return e == 0; });
}

// row -= factor * other, starting at column `from`.
void axpy(ModRow& row, const ModRow& other, std::uint64_t factor,
          std::size_t from, std::uint64_t q) {
  if (factor == 0) return;
  const std::uint64_t neg = q - factor;
  for (std::size_t c = from; c < row.size(); ++c) {
    if (other[c] != 0) row[c] = add_mod(row[c], mul_mod(neg, other[c], q), q);
  }
}

void scale(ModRow& row, std::uint64_t factor, std::size_t from,
           std::uint64_t q) {
  for (std::size_t c = from; c < row.size(); ++c) {
    if (row[c] != 0) row[c] = mul_mod(row[c], factor, q);
  }
}

}  // namespace

ModMatrix howell_form(const ModMatrix& m) {
  const unsigned p = m.prime();
  const unsigned k = m.exponent();
  const std::uint64_t q = m.modulus();
  const std::size_t cols = m.cols();

  std::vector<ModRow> work;
  work.reserve(m.rows());
  for (const auto& r : m.data()) {
    if (!is_zero_row(r)) work.push_back(r);
  }

  std::vector<ModRow> pivots;
  std::vector<std::size_t> pivot_cols;
  for (std::size_t c = 0; c < cols && !work.empty(); ++c) {
    std::size_t best = work.size();
    unsigned best_v = k;
    for (std::size_t i = 0; i < work.size(); ++i) {
      if (work[i][c] == 0) continue;
      unsigned v = valuation(work[i][c], p, k);
      if (v < best_v) {
        best_v = v;
        best = i;
        if (v == 0) break;
      }
    }
    if (best == work.size()) continue;

    ModRow piv = std::move(work[best]);
    work[best] = std::move(work.back());
    work.pop_back();

    const std::uint64_t pv = checked_prime_power(p, best_v);
    const std::uint64_t unit = piv[c] / pv;
    scale(piv, inverse_mod(unit, q), c, q);  // piv[c] == p^v now

    for (auto& r : work) {
      if (r[c] == 0) continue;
      axpy(r, piv, r[c] / pv, c, q);
    }
    // Saturation: p^(k-v) * piv vanishes at column c and must stay in the span.
    ModRow sat = piv;
    scale(sat, checked_prime_power(p, k - best_v), c, q);
    sat[c] = 0;
    work.push_back(std::move(sat));
    std::erase_if(work, is_zero_row);

    pivots.push_back(std::move(piv));
    pivot_cols.push_back(c);
  }

  // Reduce entries above each pivot into [0, pivot).
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    const std::size_t c = pivot_cols[i];
    const std::uint64_t pv = pivots[i][c];
    for (std::size_t j = 0; j < i; ++j) {
      const std::uint64_t e = pivots[j][c];
      if (e >= pv) axpy(pivots[j], pivots[i], e / pv, c, q);
    }
  }

  ModMatrix out(p, k, cols);
  for (auto& r : pivots) out.add_row(std::move(r));
  return out;
}

ModMatrix left_kernel(const ModMatrix& a) {
  const std::size_t n = a.rows();
  const std::size_t cols = a.cols();
  ModMatrix aug(a.prime(), a.exponent(), cols + n);
  for (std::size_t i = 0; i < n; ++i) {
    ModRow r(cols + n, 0);
    std::copy(a.row(i).begin(), a.row(i).end(), r.begin());
    r[cols + i] = 1;
    aug.add_row(std::move(r));
  }
  ModMatrix h = howell_form(aug);
  ModMatrix kernel(a.prime(), a.exponent(), n);
  for (const auto& r : h.data()) {
    if (pivot_column(r) >= cols) {
      kernel.add_row(ModRow(r.begin() + static_cast<std::ptrdiff_t>(cols), r.end()));
    }
  }
  return howell_form(kernel);
}

ModRow reduce_by_howell(const ModMatrix& howell, ModRow target) {
  const std::uint64_t q = howell.modulus();
  for (const auto& r : howell.data()) {
    const std::size_t c = pivot_column(r);
    if (target[c] == 0) continue;
    const std::uint64_t pv = r[c];
    if (target[c] % pv != 0) continue;
    axpy(target, r, target[c] / pv, c, q);
  }
  return target;
}

std::optional<ModRow> solve_left(const ModMatrix& a, const ModRow& target) {
  if (target.size() != a.cols()) {
    throw StructuralError("target length does not match matrix width");
  }
  const std::size_t n = a.rows();
  const std::size_t cols = a.cols();
  ModMatrix aug(a.prime(), a.exponent(), cols + n);
  for (std::size_t i = 0; i < n; ++i) {
    ModRow r(cols + n, 0);
    std::copy(a.row(i).begin(), a.row(i).end(), r.begin());
    r[cols + i] = 1;
    aug.add_row(std::move(r));
  }
  ModMatrix h = howell_form(aug);
  ModRow t(cols + n, 0);
  std::copy(target.begin(), target.end(), t.begin());
  for (auto& e : t) e %= a.modulus();
  t = reduce_by_howell(h, std::move(t));
  if (!std::all_of(t.begin(), t.begin() + static_cast<std::ptrdiff_t>(cols),
                   [](auto e) { return e == 0; })) {
    return std::nullopt;
  }
  ModRow v(n);
  const std::uint64_t q = a.modulus();
  for (std::size_t i = 0; i < n; ++i) {
    v[i] = t[cols + i] == 0 ? 0 : q - t[cols + i];
  }
  return v;
}

}  // namespace wittcenter
