#include "ncmorse/integer_matrix.hpp"

#include "ncmorse/errors.hpp"

#include <algorithm>
#include <utility>

namespace ncmorse {

IntegerMatrix::IntegerMatrix(std::initializer_list<std::initializer_list<long long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  entries_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw_invalid_input("ragged matrix literal");
    for (long long v : row) entries_.emplace_back(v);
  }
}

bool IntegerMatrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Integer& v) { return v == 0; });
}

IntegerMatrix multiply(const IntegerMatrix& a, const IntegerMatrix& b) {
  if (a.cols() != b.rows()) throw_invalid_input("matrix product dimension mismatch");
  IntegerMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

namespace {

using boost::multiprecision::abs;

void swap_rows(IntegerMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}

void swap_cols(IntegerMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m(i, a), m(i, b));
}

// Smallest nonzero |entry| in the trailing block starting at (t, t).
bool find_pivot(const IntegerMatrix& m, std::size_t t, std::size_t& pr, std::size_t& pc) {
  bool found = false;
  Integer best;
  for (std::size_t i = t; i < m.rows(); ++i)
    for (std::size_t j = t; j < m.cols(); ++j) {
      if (m(i, j) == 0) continue;
      Integer a = abs(m(i, j));
      if (!found || a < best) {
        best = a;
        pr = i;
        pc = j;
        found = true;
      }
    }
  return found;
}

}  // namespace

SmithForm smith_normal_form(IntegerMatrix m) {
  SmithForm out;
  const std::size_t limit = std::min(m.rows(), m.cols());
  std::size_t t = 0;
  for (; t < limit; ++t) {
    std::size_t pr = 0, pc = 0;
    if (!find_pivot(m, t, pr, pc)) break;
    swap_rows(m, t, pr);
    swap_cols(m, t, pc);
    for (;;) {
      bool dirty = false;
      // Clear column t below the pivot; a nonzero remainder becomes the new pivot.
      for (std::size_t i = t + 1; i < m.rows(); ++i) {
        if (m(i, t) == 0) continue;
        const Integer q = m(i, t) / m(t, t);
        for (std::size_t j = t; j < m.cols(); ++j) m(i, j) -= q * m(t, j);
        if (m(i, t) != 0) {
          swap_rows(m, t, i);
          dirty = true;
        }
      }
      for (std::size_t j = t + 1; j < m.cols(); ++j) {
        if (m(t, j) == 0) continue;
        const Integer q = m(t, j) / m(t, t);
        for (std::size_t i = t; i < m.rows(); ++i) m(i, j) -= q * m(i, t);
        if (m(t, j) != 0) {
          swap_cols(m, t, j);
          dirty = true;
        }
      }
      if (dirty) continue;
      // Pivot must divide the whole trailing block; otherwise fold the
      // offending row into row t and repeat.
      bool divides = true;
      for (std::size_t i = t + 1; i < m.rows() && divides; ++i)
        for (std::size_t j = t + 1; j < m.cols(); ++j)
          if (m(i, j) % m(t, t) != 0) {
            for (std::size_t k = t; k < m.cols(); ++k) m(t, k) += m(i, k);
            divides = false;
            break;
          }
      if (divides) break;
    }
    out.factors.push_back(abs(m(t, t)));
  }
  out.rank = out.factors.size();
  return out;
}

std::size_t rational_rank(const IntegerMatrix& input) {
  // Bareiss fraction-free elimination
  IntegerMatrix m = input;
  std::size_t rank = 0;
  Integer prev = 1;
  for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
    std::size_t p = rank;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    swap_rows(m, rank, p);
    for (std::size_t i = rank + 1; i < m.rows(); ++i) {
      for (std::size_t j = c + 1; j < m.cols(); ++j) m(i, j) = (m(rank, c) * m(i, j) - m(i, c) * m(rank, j)) / prev;
      m(i, c) = 0;
    }
    prev = m(rank, c);
    ++rank;
  }
  return rank;
}

std::vector<std::vector<Rational>> rational_kernel(const IntegerMatrix& input) {
  const std::size_t rows = input.rows();
  const std::size_t cols = input.cols();
  std::vector<std::vector<Rational>> a(rows, std::vector<Rational>(cols));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) a[i][j] = Rational(input(i, j));

  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[r], a[p]);
    const Rational inv = 1 / a[r][c];
    for (std::size_t j = c; j < cols; ++j) a[r][j] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      const Rational factor = a[i][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= factor * a[r][j];
    }
    pivot_cols.push_back(c);
    ++r;
  }

  std::vector<char> is_pivot(cols, 0);
  for (std::size_t c : pivot_cols) is_pivot[c] = 1;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> x(cols);
    x[free] = 1;
    for (std::size_t i = 0; i < pivot_cols.size(); ++i) x[pivot_cols[i]] = -a[i][free];
    basis.push_back(std::move(x));
  }
  return basis;
}

}  // namespace ncmorse
