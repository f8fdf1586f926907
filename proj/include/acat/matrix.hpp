#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <vector>

#include "acat/category.hpp"

namespace acat {

using Int = boost::multiprecision::cpp_int;
using IntVec = std::vector<Int>;

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols) {}
  static IntMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Int& at(int r, int c) { return a_[size_t(r) * cols_ + c]; }
  const Int& at(int r, int c) const { return a_[size_t(r) * cols_ + c]; }

  IntMatrix operator*(const IntMatrix& other) const;
  bool operator==(const IntMatrix&) const = default;
  IntMatrix transposed() const;
  bool is_zero() const;
  IntVec apply(const IntVec& v) const;  // M v
  IntVec column(int c) const;
  IntMatrix columns(int from, int to) const;  // [from, to)

  void swap_rows(int a, int b);
  void swap_cols(int a, int b);
  void negate_row(int r);
  void negate_col(int c);
  void add_row(int dst, int src, const Int& k);  // row dst += k * row src
  void add_col(int dst, int src, const Int& k);

 private:
  int rows_ = 0, cols_ = 0;
  IntVec a_;
};

// P * M * Q = S with P, Q unimodular and S diagonal with positive invariant
// factors in a divisibility chain.
struct SmithNormalForm {
  IntMatrix S, P, Pinv, Q, Qinv;
  int rank = 0;
  IntVec factors;
};

SmithNormalForm smith_normal_form(const IntMatrix& m);

// Integer solution of M x = v, if one exists.
std::optional<IntVec> solve_linear(const IntMatrix& m, const IntVec& v);

}  // namespace acat
