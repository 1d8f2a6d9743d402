#pragma once

#include <cstddef>
#include <limits>
#include <span>
#include <vector>

namespace nsopt {

/// Dynamically growing row-stacked matrix with a fixed column count.
/// Rows are contiguous; row(i) spans stay valid until the next append.
class RowMatrix {
 public:
  RowMatrix() = default;
  explicit RowMatrix(std::size_t cols) : cols_(cols) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0; }

  /// Drops all rows, keeps the column count.
  void clear() noexcept {
    data_.clear();
    rows_ = 0;
  }

  /// Appends one row. Throws std::invalid_argument on width mismatch.
  void append_row(std::span<const double> row);

  std::span<const double> row(std::size_t i) const noexcept {
    return {data_.data() + i * cols_, cols_};
  }

 private:
  std::vector<double> data_;
  std::size_t cols_ = 0;
  std::size_t rows_ = 0;
};

/// Active-constraint Jacobians shared by the three optimization passes within
/// one outer iteration: equality rows, activated inequality rows, and the
/// running count of active constraints.
struct ActiveJacobianSet {
  RowMatrix j_eq;
  RowMatrix j_ineq;
  std::size_t n_ac = 0;

  explicit ActiveJacobianSet(std::size_t dimension)
      : j_eq(dimension), j_ineq(dimension) {}

  void reset() noexcept {
    j_eq.clear();
    j_ineq.clear();
    n_ac = 0;
  }
};

/// Eigendecomposition of a symmetric matrix by cyclic Jacobi rotations.
/// `a` is m-by-m row-major and is destroyed. On return `eigenvalues[i]`
/// pairs with eigenvector column i of `eigenvectors` (also m-by-m row-major),
/// so A = V diag(w) V^T.
void symmetric_eigen(std::vector<double>& a, std::size_t m,
                     std::vector<double>& eigenvectors,
                     std::vector<double>& eigenvalues);

/// Orthogonal projection of g onto the nullspace of J:
///   r = (I - J^T (J J^T)^+ J) g
/// The pseudoinverse discards eigenvalues of J J^T below rank_tol times the
/// largest one, so linearly dependent (e.g. duplicated) rows are harmless.
/// `row_limit` restricts the projection to the first rows of J; by default
/// all rows participate. A matrix with no (participating) rows constrains
/// nothing and g is returned unchanged.
/// Throws std::invalid_argument if g's length differs from J's column count.
std::vector<double> project_onto_nullspace(
    const RowMatrix& j, std::span<const double> g, double rank_tol,
    std::size_t row_limit = std::numeric_limits<std::size_t>::max());

/// True iff the vectors point into opposing half-spaces (a . b < 0).
bool opposes(std::span<const double> a, std::span<const double> b) noexcept;

}  // namespace nsopt
