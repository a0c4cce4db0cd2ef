// SPDX-License-Identifier: Apache-2.0
// Copyright (c) sagsense contributors

#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace sagsense {

using cxd = std::complex<double>;

/// Dense complex column vector.
using ComplexVector = std::vector<cxd>;

/// Dense complex matrix, row-major storage.
class ComplexMatrix {
  public:
    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols);

    static ComplexMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return data_.empty(); }

    cxd& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const cxd& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    ComplexMatrix adjoint() const;
    ComplexMatrix operator*(const ComplexMatrix& rhs) const;
    ComplexVector operator*(const ComplexVector& v) const;
    ComplexMatrix& operator+=(const ComplexMatrix& rhs);
    ComplexMatrix operator+(const ComplexMatrix& rhs) const;
    ComplexMatrix operator-(const ComplexMatrix& rhs) const;
    ComplexMatrix scaled(cxd factor) const;
    ComplexMatrix& add_scaled_identity(double factor);

    double frobenius_norm() const;
    /// Frobenius norm of A - A^H; zero for exactly Hermitian matrices.
    double hermitian_deviation() const;
    /// Real part of the trace.
    double trace_real() const;
    bool is_finite() const;

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<cxd> data_;
};

/// col * row without conjugation: out(i,j) = col[i] * row[j].
ComplexMatrix outer(const ComplexVector& col, const ComplexVector& row);

/// a * a^H: out(i,j) = a[i] * conj(a[j]). Hermitian PSD, rank <= 1.
ComplexMatrix hermitian_outer(const ComplexVector& a);

/// Inner product a^H b (conjugates the first argument).
cxd inner(const ComplexVector& a, const ComplexVector& b);

/// Unconjugated dot product sum_i a[i] * b[i].
cxd dotu(const ComplexVector& a, const ComplexVector& b);

double norm2_squared(const ComplexVector& a);
double norm2(const ComplexVector& a);

ComplexVector scaled(const ComplexVector& a, cxd factor);
ComplexVector conjugated(const ComplexVector& a);

/// Real part of u^H M u. M must be square with matching dimension.
double quadratic_form_real(const ComplexMatrix& m, const ComplexVector& u);

/// Column k of a matrix as a vector.
ComplexVector column(const ComplexMatrix& m, std::size_t k);

} // namespace sagsense
