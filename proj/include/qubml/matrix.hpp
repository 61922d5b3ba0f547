#pragma once

#include <cstddef>
#include <cstdlib>
#include <cstring>
#include <new>
#include <utility>

namespace qubml {

// Dense row-major matrix of doubles. Fresh storage comes from calloc, so a
// large matrix that is mostly zero only faults in the pages actually written.
class Matrix {
 public:
  Matrix() = default;

  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {
    if (rows_ * cols_ == 0) {
      rows_ = rows;
      cols_ = cols;
      return;
    }
    data_ = static_cast<double*>(std::calloc(rows_ * cols_, sizeof(double)));
    if (!data_) throw std::bad_alloc();
  }

  Matrix(const Matrix& other) : Matrix(other.rows_, other.cols_) {
    if (data_) std::memcpy(data_, other.data_, rows_ * cols_ * sizeof(double));
  }

  Matrix(Matrix&& other) noexcept
      : rows_(other.rows_), cols_(other.cols_), data_(other.data_) {
    other.rows_ = other.cols_ = 0;
    other.data_ = nullptr;
  }

  Matrix& operator=(Matrix other) noexcept {
    swap(other);
    return *this;
  }

  ~Matrix() { std::free(data_); }

  void swap(Matrix& other) noexcept {
    std::swap(rows_, other.rows_);
    std::swap(cols_, other.cols_);
    std::swap(data_, other.data_);
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t size() const { return rows_ * cols_; }

  double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  double* data() { return data_; }
  const double* data() const { return data_; }

  double* row(std::size_t i) { return data_ + i * cols_; }
  const double* row(std::size_t i) const { return data_ + i * cols_; }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  double* data_ = nullptr;
};

Matrix matmul(const Matrix& a, const Matrix& b);
Matrix transpose(const Matrix& a);
Matrix kron(const Matrix& a, const Matrix& b);
double max_abs(const Matrix& a);
std::size_t count_nonzeros(const Matrix& a);

}  // namespace qubml
