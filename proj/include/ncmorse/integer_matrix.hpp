#pragma once

#include "ncmorse/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <vector>

namespace ncmorse {

class IntegerMatrix {
 public:
  IntegerMatrix() = default;
  IntegerMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}
  IntegerMatrix(std::initializer_list<std::initializer_list<long long>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Integer& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  bool is_zero() const;
  friend bool operator==(const IntegerMatrix&, const IntegerMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> entries_;
};

IntegerMatrix multiply(const IntegerMatrix& a, const IntegerMatrix& b);

struct SmithForm {
  std::vector<Integer> factors;  // d_1 | d_2 | ... | d_r, all positive
  std::size_t rank = 0;
};

/// Invariant factors by unimodular row and column operations, exact.
SmithForm smith_normal_form(IntegerMatrix m);

/// Rank over the rationals (fraction-free elimination).
std::size_t rational_rank(const IntegerMatrix& m);

/// Basis of {x : m x = 0} over the rationals, from the reduced row echelon form.
std::vector<std::vector<Rational>> rational_kernel(const IntegerMatrix& m);

}  // namespace ncmorse
