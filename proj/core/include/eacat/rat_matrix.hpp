#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace eacat {

using Rational = boost::multiprecision::cpp_rational;

/// re + im·i with exact rational parts.
struct ComplexRational {
  Rational re, im;

  ComplexRational() = default;
  ComplexRational(Rational r, Rational i = 0) : re(std::move(r)), im(std::move(i)) {}
  ComplexRational(int r) : re(r), im(0) {}

  bool is_real() const { return im == 0; }
  ComplexRational conj() const { return {re, -im}; }

  friend ComplexRational operator+(const ComplexRational& a, const ComplexRational& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend ComplexRational operator-(const ComplexRational& a, const ComplexRational& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend ComplexRational operator-(const ComplexRational& a) { return {-a.re, -a.im}; }
  friend ComplexRational operator*(const ComplexRational& a, const ComplexRational& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  /// Throws Error on division by zero.
  friend ComplexRational operator/(const ComplexRational& a, const ComplexRational& b);

  friend bool operator==(const ComplexRational& a, const ComplexRational& b) {
    return a.re == b.re && a.im == b.im;
  }
  // lexicographic on (re, im); only for use as a map key
  friend bool operator<(const ComplexRational& a, const ComplexRational& b) {
    if (a.re != b.re)
      return a.re < b.re;
    return a.im < b.im;
  }
};

std::string to_string(const Rational& r);
/// "3/4", "1/2+1/3i", "-2i", ...
std::string to_string(const ComplexRational& z);

/// Square complex-rational matrix, row-major.
class RatMatrix {
public:
  RatMatrix() = default;
  explicit RatMatrix(std::size_t dim);  // zero matrix
  /// Throws Error unless rows is square and non-empty.
  RatMatrix(std::initializer_list<std::initializer_list<ComplexRational>> rows);

  static RatMatrix zero(std::size_t dim) { return RatMatrix(dim); }
  static RatMatrix identity(std::size_t dim);
  static RatMatrix scalar(std::size_t dim, const ComplexRational& s);
  static RatMatrix diagonal(const std::vector<ComplexRational>& d);

  std::size_t dim() const noexcept { return dim_; }
  const ComplexRational& operator()(std::size_t r, std::size_t c) const { return entries_[r * dim_ + c]; }
  ComplexRational& operator()(std::size_t r, std::size_t c) { return entries_[r * dim_ + c]; }

  RatMatrix adjoint() const;
  ComplexRational trace() const;

  friend RatMatrix operator+(const RatMatrix& a, const RatMatrix& b);
  friend RatMatrix operator-(const RatMatrix& a, const RatMatrix& b);
  friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
  friend RatMatrix operator*(const ComplexRational& s, const RatMatrix& a);

  friend bool operator==(const RatMatrix& a, const RatMatrix& b) {
    return a.dim_ == b.dim_ && a.entries_ == b.entries_;
  }
  friend bool operator<(const RatMatrix& a, const RatMatrix& b);

private:
  std::size_t dim_ = 0;
  std::vector<ComplexRational> entries_;
};

/// "[[1/2,0],[0,1/2]]"; contains no whitespace, so it doubles as an element label.
std::string to_string(const RatMatrix& m);

bool is_hermitian(const RatMatrix& m);
/// M = M* and M·M = M, exactly.
bool is_projection(const RatMatrix& m);

/// Coefficients of det(λ·Id + M), highest power first (leading 1), via the
/// Faddeev–LeVerrier recurrence on -M.
std::vector<ComplexRational> shifted_char_poly(const RatMatrix& m);

/// Hermitian and every coefficient of det(λ·Id + M) is real and ≥ 0. For a
/// Hermitian matrix those coefficients are the elementary symmetric functions
/// of its (real) eigenvalues, and they are all nonnegative exactly when no
/// eigenvalue is negative. Non-Hermitian input gives false.
bool is_psd(const RatMatrix& m);

} // namespace eacat
