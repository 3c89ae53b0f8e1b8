#include "fdrep/matrix.hpp"

#include <stdexcept>

#include "scalars/fp.hpp"
#include "scalars/kernels.hpp"

namespace fdrep {

using scalars::mod_inv;
using scalars::mod_neg;
namespace kern = scalars::kernels;

Mat Mat::identity(size_t n, uint32_t p) {
  Mat m(n, n, p);
  for (size_t i = 0; i < n; ++i) m.at(i, i) = 1 % p;
  return m;
}

Mat Mat::from_rows(const std::vector<Vec>& rows, size_t cols, uint32_t p) {
  Mat m(0, cols, p);
  for (const auto& r : rows) m.append_row(r);
  return m;
}

Vec Mat::col_vec(size_t j) const {
  Vec v(r_);
  for (size_t i = 0; i < r_; ++i) v[i] = at(i, j);
  return v;
}

void Mat::set(size_t i, size_t j, int64_t v) { at(i, j) = scalars::mod_reduce(v, p_); }

void Mat::append_row(const Vec& v) {
  if (v.size() != c_) throw std::invalid_argument("append_row: length mismatch");
  d_.insert(d_.end(), v.begin(), v.end());
  ++r_;
}

void Mat::append_row(const uint32_t* v) {
  d_.insert(d_.end(), v, v + c_);
  ++r_;
}

bool Mat::is_zero() const {
  for (uint32_t x : d_)
    if (x) return false;
  return true;
}

size_t Mat::nnz() const {
  size_t k = 0;
  for (uint32_t x : d_) k += x != 0;
  return k;
}

Mat Mat::operator*(const Mat& o) const {
  if (c_ != o.r_ || p_ != o.p_) throw std::invalid_argument("matrix product: shape or field mismatch");
  Mat r(r_, o.c_, p_);
  for (size_t i = 0; i < r_; ++i) {
    const uint32_t* a = row(i);
    uint32_t* out = r.row(i);
    for (size_t k = 0; k < c_; ++k)
      if (a[k]) kern::axpy(out, o.row(k), a[k], p_, o.c_);
  }
  return r;
}

Mat Mat::operator+(const Mat& o) const {
  if (r_ != o.r_ || c_ != o.c_ || p_ != o.p_) throw std::invalid_argument("matrix sum: shape mismatch");
  Mat r = *this;
  kern::axpy(r.d_.data(), o.d_.data(), 1, p_, d_.size());
  return r;
}

Mat Mat::operator-(const Mat& o) const {
  if (r_ != o.r_ || c_ != o.c_ || p_ != o.p_) throw std::invalid_argument("matrix difference: shape mismatch");
  Mat r = *this;
  kern::axpy(r.d_.data(), o.d_.data(), p_ - 1, p_, d_.size());
  return r;
}

Vec Mat::operator*(const Vec& v) const {
  if (v.size() != c_) throw std::invalid_argument("matrix-vector: length mismatch");
  Vec out(r_, 0);
  for (size_t i = 0; i < r_; ++i) {
    uint64_t acc = 0;
    const uint32_t* a = row(i);
    for (size_t k = 0; k < c_; ++k) {
      acc += static_cast<uint64_t>(a[k]) * v[k];
      if (p_ >= (1u << 20) || (k & 255) == 255) acc %= p_;
    }
    out[i] = static_cast<uint32_t>(acc % p_);
  }
  return out;
}

Mat Mat::scaled(uint32_t c) const {
  Mat r = *this;
  kern::scale(r.d_.data(), c % p_, p_, d_.size());
  return r;
}

Mat Mat::transpose() const {
  Mat t(c_, r_, p_);
  for (size_t i = 0; i < r_; ++i)
    for (size_t j = 0; j < c_; ++j) t.at(j, i) = at(i, j);
  return t;
}

Mat Mat::pow(uint64_t e) const {
  if (r_ != c_) throw std::invalid_argument("pow of non-square matrix");
  Mat r = identity(r_, p_), b = *this;
  while (e) {
    if (e & 1) r = r * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return r;
}

Vec vec_mul(const Vec& v, const Mat& m) {
  if (v.size() != m.rows()) throw std::invalid_argument("vector-matrix: length mismatch");
  Vec out(m.cols(), 0);
  for (size_t k = 0; k < v.size(); ++k)
    if (v[k]) kern::axpy(out.data(), m.row(k), v[k], m.p(), m.cols());
  return out;
}

std::vector<size_t> rref(Mat& a) {
  const uint32_t p = a.p();
  std::vector<size_t> piv;
  size_t r = 0;
  for (size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    size_t sel = r;
    while (sel < a.rows() && a.at(sel, c) == 0) ++sel;
    if (sel == a.rows()) continue;
    if (sel != r)
      for (size_t j = 0; j < a.cols(); ++j) std::swap(a.at(r, j), a.at(sel, j));
    kern::scale(a.row(r), mod_inv(a.at(r, c), p), p, a.cols());
    for (size_t i = 0; i < a.rows(); ++i)
      if (i != r && a.at(i, c)) kern::axpy(a.row(i), a.row(r), mod_neg(a.at(i, c), p), p, a.cols());
    piv.push_back(c);
    ++r;
  }
  return piv;
}

size_t rank(Mat a) { return rref(a).size(); }

Mat kernel(const Mat& a) {
  Mat e = a;
  auto piv = rref(e);
  const uint32_t p = a.p();
  std::vector<bool> is_piv(a.cols(), false);
  for (size_t c : piv) is_piv[c] = true;
  Mat k(0, a.cols(), p);
  for (size_t f = 0; f < a.cols(); ++f) {
    if (is_piv[f]) continue;
    Vec v(a.cols(), 0);
    v[f] = 1 % p;
    for (size_t i = 0; i < piv.size(); ++i) v[piv[i]] = mod_neg(e.at(i, f), p);
    k.append_row(v);
  }
  return k;
}

Mat row_space(const Mat& a) {
  Mat e = a;
  size_t rk = rref(e).size();
  Mat out(0, a.cols(), a.p());
  for (size_t i = 0; i < rk; ++i) out.append_row(e.row(i));
  return out;
}

std::optional<Mat> inverse(const Mat& a) {
  if (a.rows() != a.cols()) return std::nullopt;
  const size_t n = a.rows();
  Mat aug(n, 2 * n, a.p());
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, n + i) = 1 % a.p();
  }
  auto piv = rref(aug);
  if (piv.size() < n || piv[n - 1] != n - 1) return std::nullopt;
  Mat inv(n, n, a.p());
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
  return inv;
}

Mat vstack(const Mat& a, const Mat& b) {
  if (a.cols() != b.cols()) throw std::invalid_argument("vstack: column mismatch");
  Mat r = a;
  for (size_t i = 0; i < b.rows(); ++i) r.append_row(b.row(i));
  return r;
}

size_t Echelon::reduce(Vec& v) const {
  for (size_t i = 0; i < rows_.size(); ++i) {
    uint32_t c = v[piv_[i]];
    if (c) kern::axpy(v.data(), rows_[i].data(), mod_neg(c, p_), p_, n_);
  }
  for (size_t j = 0; j < n_; ++j)
    if (v[j]) return j;
  return n_;
}

bool Echelon::insert(Vec v) {
  if (v.size() != n_) throw std::invalid_argument("Echelon::insert: length mismatch");
  size_t lead = reduce(v);
  if (lead == n_) return false;
  kern::scale(v.data(), mod_inv(v[lead], p_), p_, n_);
  rows_.push_back(std::move(v));
  piv_.push_back(lead);
  return true;
}

bool Echelon::contains(Vec v) const { return reduce(v) == n_; }

Mat Echelon::basis() const { return Mat::from_rows(rows_, n_, p_); }

}  // namespace fdrep
