#pragma once

// Exact solvers for A x = b with integer A and b:
//   * solve_rational: fraction-free (Bareiss) elimination, free unknowns set
//     to zero, so the returned solution is canonical for a given column order.
//   * solve_integer: column Hermite normal form A U = H with U unimodular,
//     forward substitution in H, then x = U y.  Infeasibility is conclusive.

#include "shapetile/rational.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace shapetile {

/// Dense row-major integer matrix.
class IntMatrix {
  public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, Integer(0)) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Integer> data_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);

std::optional<std::vector<Rational>> solve_rational(const IntMatrix& a, const std::vector<Integer>& b);

struct HermiteColumnForm {
    IntMatrix h;  // lower echelon: column k has its leading entry at pivot_rows[k], positive
    IntMatrix u;  // unimodular, a * u == h
    std::vector<std::size_t> pivot_rows;  // pivot row of columns 0..rank-1
};

HermiteColumnForm hermite_column_form(const IntMatrix& a);

std::optional<std::vector<Integer>> solve_integer(const IntMatrix& a, const std::vector<Integer>& b);

}  // namespace shapetile
