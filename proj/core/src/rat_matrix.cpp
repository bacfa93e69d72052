#include "eacat/rat_matrix.hpp"

#include "eacat/error.hpp"

namespace eacat {

ComplexRational operator/(const ComplexRational& a, const ComplexRational& b) {
  Rational n = b.re * b.re + b.im * b.im;
  if (n == 0)
    throw Error("division by zero");
  ComplexRational p = a * b.conj();
  return {p.re / n, p.im / n};
}

std::string to_string(const Rational& r) { return r.str(); }

std::string to_string(const ComplexRational& z) {
  if (z.im == 0)
    return to_string(z.re);
  std::string im = (abs(z.im) == 1 ? std::string() : to_string(Rational(abs(z.im)))) + "i";
  if (z.re == 0)
    return (z.im < 0 ? "-" : "") + im;
  return to_string(z.re) + (z.im < 0 ? "-" : "+") + im;
}

RatMatrix::RatMatrix(std::size_t dim) : dim_(dim), entries_(dim * dim) {}

RatMatrix::RatMatrix(std::initializer_list<std::initializer_list<ComplexRational>> rows)
    : dim_(rows.size()) {
  if (dim_ == 0)
    throw Error("matrix must have at least one row");
  entries_.reserve(dim_ * dim_);
  for (const auto& row : rows) {
    if (row.size() != dim_)
      throw Error("matrix must be square");
    entries_.insert(entries_.end(), row.begin(), row.end());
  }
}

RatMatrix RatMatrix::identity(std::size_t dim) { return scalar(dim, 1); }

RatMatrix RatMatrix::scalar(std::size_t dim, const ComplexRational& s) {
  RatMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i)
    m(i, i) = s;
  return m;
}

RatMatrix RatMatrix::diagonal(const std::vector<ComplexRational>& d) {
  RatMatrix m(d.size());
  for (std::size_t i = 0; i < d.size(); ++i)
    m(i, i) = d[i];
  return m;
}

RatMatrix RatMatrix::adjoint() const {
  RatMatrix m(dim_);
  for (std::size_t r = 0; r < dim_; ++r)
    for (std::size_t c = 0; c < dim_; ++c)
      m(c, r) = (*this)(r, c).conj();
  return m;
}

ComplexRational RatMatrix::trace() const {
  ComplexRational t;
  for (std::size_t i = 0; i < dim_; ++i)
    t = t + (*this)(i, i);
  return t;
}

static void require_same_dim(const RatMatrix& a, const RatMatrix& b) {
  if (a.dim() != b.dim())
    throw Error("matrix dimensions differ: " + std::to_string(a.dim()) + " vs " +
                std::to_string(b.dim()));
}

RatMatrix operator+(const RatMatrix& a, const RatMatrix& b) {
  require_same_dim(a, b);
  RatMatrix m(a.dim_);
  for (std::size_t k = 0; k < a.entries_.size(); ++k)
    m.entries_[k] = a.entries_[k] + b.entries_[k];
  return m;
}

RatMatrix operator-(const RatMatrix& a, const RatMatrix& b) {
  require_same_dim(a, b);
  RatMatrix m(a.dim_);
  for (std::size_t k = 0; k < a.entries_.size(); ++k)
    m.entries_[k] = a.entries_[k] - b.entries_[k];
  return m;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
  require_same_dim(a, b);
  const std::size_t n = a.dim_;
  RatMatrix m(n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t k = 0; k < n; ++k) {
      const ComplexRational& x = a(r, k);
      if (x == ComplexRational())
        continue;
      for (std::size_t c = 0; c < n; ++c)
        m(r, c) = m(r, c) + x * b(k, c);
    }
  return m;
}

RatMatrix operator*(const ComplexRational& s, const RatMatrix& a) {
  RatMatrix m(a.dim_);
  for (std::size_t k = 0; k < a.entries_.size(); ++k)
    m.entries_[k] = s * a.entries_[k];
  return m;
}

bool operator<(const RatMatrix& a, const RatMatrix& b) {
  if (a.dim_ != b.dim_)
    return a.dim_ < b.dim_;
  for (std::size_t k = 0; k < a.entries_.size(); ++k) {
    if (a.entries_[k] < b.entries_[k])
      return true;
    if (b.entries_[k] < a.entries_[k])
      return false;
  }
  return false;
}

std::string to_string(const RatMatrix& m) {
  std::string s = "[";
  for (std::size_t r = 0; r < m.dim(); ++r) {
    s += r ? ",[" : "[";
    for (std::size_t c = 0; c < m.dim(); ++c) {
      if (c)
        s += ',';
      s += to_string(m(r, c));
    }
    s += ']';
  }
  return s + "]";
}

bool is_hermitian(const RatMatrix& m) { return m == m.adjoint(); }

bool is_projection(const RatMatrix& m) { return is_hermitian(m) && m * m == m; }

std::vector<ComplexRational> shifted_char_poly(const RatMatrix& m) {
  // det(λI - A) = λⁿ + c₁λⁿ⁻¹ + ... + cₙ with A = -M
  const std::size_t n = m.dim();
  const RatMatrix A = ComplexRational(-1) * m;
  std::vector<ComplexRational> c(n + 1);
  c[0] = 1;
  RatMatrix Mk(n);  // M_0 = 0
  for (std::size_t k = 1; k <= n; ++k) {
    Mk = A * Mk + RatMatrix::scalar(n, c[k - 1]);
    ComplexRational t = (A * Mk).trace();
    c[k] = -t / ComplexRational(Rational(static_cast<long long>(k)));
  }
  return c;
}

bool is_psd(const RatMatrix& m) {
  if (m.dim() == 0 || !is_hermitian(m))
    return false;
  for (const ComplexRational& c : shifted_char_poly(m))
    if (!c.is_real() || c.re < 0)
      return false;
  return true;
}

} // namespace eacat
