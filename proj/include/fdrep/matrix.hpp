#pragma once
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace fdrep {

using Vec = std::vector<uint32_t>;

// Dense row-major matrix over F_p.
class Mat {
 public:
  Mat() = default;
  Mat(size_t rows, size_t cols, uint32_t p) : r_(rows), c_(cols), p_(p), d_(rows * cols, 0) {}
  static Mat identity(size_t n, uint32_t p);
  static Mat from_rows(const std::vector<Vec>& rows, size_t cols, uint32_t p);

  size_t rows() const { return r_; }
  size_t cols() const { return c_; }
  uint32_t p() const { return p_; }

  uint32_t& at(size_t i, size_t j) { return d_[i * c_ + j]; }
  uint32_t at(size_t i, size_t j) const { return d_[i * c_ + j]; }
  uint32_t* row(size_t i) { return d_.data() + i * c_; }
  const uint32_t* row(size_t i) const { return d_.data() + i * c_; }
  Vec row_vec(size_t i) const { return Vec(row(i), row(i) + c_); }
  Vec col_vec(size_t j) const;
  void set(size_t i, size_t j, int64_t v);

  void append_row(const Vec& v);
  void append_row(const uint32_t* v);
  bool is_zero() const;
  size_t nnz() const;

  Mat operator*(const Mat& o) const;
  Mat operator+(const Mat& o) const;
  Mat operator-(const Mat& o) const;
  Vec operator*(const Vec& v) const;  // column action
  Mat scaled(uint32_t c) const;
  Mat transpose() const;
  Mat pow(uint64_t e) const;
  bool operator==(const Mat& o) const { return r_ == o.r_ && c_ == o.c_ && p_ == o.p_ && d_ == o.d_; }
  bool operator!=(const Mat& o) const { return !(*this == o); }

  const std::vector<uint32_t>& data() const { return d_; }
  uint32_t* raw() { return d_.data(); }

 private:
  size_t r_ = 0, c_ = 0;
  uint32_t p_ = 2;
  std::vector<uint32_t> d_;
};

// Row vector times matrix.
Vec vec_mul(const Vec& v, const Mat& m);

// In-place reduced row echelon form; returns pivot columns.  Rows past the rank are zero.
std::vector<size_t> rref(Mat& a);
size_t rank(Mat a);
// Basis of {x : A x = 0}, one vector per row.
Mat kernel(const Mat& a);
// Basis of the row space, echelonised.
Mat row_space(const Mat& a);
std::optional<Mat> inverse(const Mat& a);
Mat vstack(const Mat& a, const Mat& b);

// Incremental semi-echelon basis of a subspace of F_p^n.
class Echelon {
 public:
  Echelon(size_t n, uint32_t p) : n_(n), p_(p) {}
  // Reduces v in place against the stored rows; returns the first nonzero column or n.
  size_t reduce(Vec& v) const;
  // Inserts v if independent; returns true when the dimension grew.
  bool insert(Vec v);
  bool contains(Vec v) const;
  size_t dim() const { return rows_.size(); }
  size_t ambient() const { return n_; }
  uint32_t p() const { return p_; }
  const std::vector<Vec>& rows() const { return rows_; }
  const std::vector<size_t>& pivots() const { return piv_; }
  Mat basis() const;

 private:
  size_t n_;
  uint32_t p_;
  std::vector<Vec> rows_;
  std::vector<size_t> piv_;
};

}  // namespace fdrep
