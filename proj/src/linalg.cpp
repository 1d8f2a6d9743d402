#include "nsopt/linalg.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <stdexcept>

#include "nsopt/kernels.hpp"

namespace nsopt {

void RowMatrix::append_row(std::span<const double> row) {
  if (cols_ == 0 && rows_ == 0) cols_ = row.size();
  if (row.size() != cols_) {
    throw std::invalid_argument("RowMatrix::append_row: expected width " +
                                std::to_string(cols_) + ", got " +
                                std::to_string(row.size()));
  }
  data_.insert(data_.end(), row.begin(), row.end());
  ++rows_;
}

void symmetric_eigen(std::vector<double>& a, std::size_t m,
                     std::vector<double>& eigenvectors,
                     std::vector<double>& eigenvalues) {
  assert(a.size() == m * m);
  auto at = [&](std::size_t r, std::size_t c) -> double& { return a[r * m + c]; };

  eigenvectors.assign(m * m, 0.0);
  for (std::size_t i = 0; i < m; ++i) eigenvectors[i * m + i] = 1.0;
  eigenvalues.assign(m, 0.0);
  if (m == 0) return;

  constexpr int kMaxSweeps = 64;
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    double off = 0.0;
    double diag = 0.0;
    for (std::size_t p = 0; p < m; ++p) {
      diag += at(p, p) * at(p, p);
      for (std::size_t q = p + 1; q < m; ++q) off += at(p, q) * at(p, q);
    }
    if (off <= 1e-30 * std::max(diag, 1e-300)) break;

    for (std::size_t p = 0; p < m; ++p) {
      for (std::size_t q = p + 1; q < m; ++q) {
        const double apq = at(p, q);
        if (apq == 0.0) continue;
        // Stable rotation angle: tan(2t) = 2 a_pq / (a_qq - a_pp).
        const double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;

        for (std::size_t i = 0; i < m; ++i) {
          const double aip = at(i, p);
          const double aiq = at(i, q);
          at(i, p) = c * aip - s * aiq;
          at(i, q) = s * aip + c * aiq;
        }
        for (std::size_t i = 0; i < m; ++i) {
          const double api = at(p, i);
          const double aqi = at(q, i);
          at(p, i) = c * api - s * aqi;
          at(q, i) = s * api + c * aqi;
        }
        for (std::size_t i = 0; i < m; ++i) {
          const double vip = eigenvectors[i * m + p];
          const double viq = eigenvectors[i * m + q];
          eigenvectors[i * m + p] = c * vip - s * viq;
          eigenvectors[i * m + q] = s * vip + c * viq;
        }
      }
    }
  }
  for (std::size_t i = 0; i < m; ++i) eigenvalues[i] = at(i, i);
}

std::vector<double> project_onto_nullspace(const RowMatrix& j,
                                           std::span<const double> g,
                                           double rank_tol,
                                           std::size_t row_limit) {
  const std::size_t m = std::min(j.rows(), row_limit);
  std::vector<double> result(g.begin(), g.end());
  if (m == 0) return result;
  if (g.size() != j.cols()) {
    throw std::invalid_argument(
        "project_onto_nullspace: vector length " + std::to_string(g.size()) +
        " does not match Jacobian width " + std::to_string(j.cols()));
  }

  // Gram matrix A = J J^T, symmetric positive semidefinite.
  std::vector<double> gram(m * m, 0.0);
  for (std::size_t p = 0; p < m; ++p) {
    for (std::size_t q = p; q < m; ++q) {
      const double v = kernels::dot(j.row(p), j.row(q));
      gram[p * m + q] = v;
      gram[q * m + p] = v;
    }
  }

  std::vector<double> v;
  std::vector<double> w;
  symmetric_eigen(gram, m, v, w);

  double w_max = 0.0;
  for (const double wi : w) w_max = std::max(w_max, wi);
  const double cutoff = rank_tol * w_max;

  // z = (J J^T)^+ (J g), expanded through the eigenbasis.
  std::vector<double> jg(m);
  for (std::size_t p = 0; p < m; ++p) jg[p] = kernels::dot(j.row(p), g);

  std::vector<double> u(m, 0.0);
  for (std::size_t i = 0; i < m; ++i) {
    if (w[i] <= cutoff) continue;
    double proj = 0.0;
    for (std::size_t p = 0; p < m; ++p) proj += v[p * m + i] * jg[p];
    u[i] = proj / w[i];
  }
  std::vector<double> z(m, 0.0);
  for (std::size_t p = 0; p < m; ++p) {
    double acc = 0.0;
    for (std::size_t i = 0; i < m; ++i) acc += v[p * m + i] * u[i];
    z[p] = acc;
  }

  // r = g - J^T z
  for (std::size_t p = 0; p < m; ++p) {
    kernels::axpy(-z[p], j.row(p), result);
  }
  return result;
}

bool opposes(std::span<const double> a, std::span<const double> b) noexcept {
  assert(a.size() == b.size());
  return kernels::dot(a, b) < 0.0;
}

}  // namespace nsopt
