#include "gamma4/exact.hpp"

#include <sstream>

namespace gamma4::exact {

RationalMatrix to_rational(const IntMatrix& m) {
  RationalMatrix q(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) q(i, j) = Rational(m(i, j));
  return q;
}

std::vector<Integer> SNFResult::diagonal() const {
  std::vector<Integer> out;
  const std::size_t k = std::min(D.rows(), D.cols());
  out.reserve(k);
  for (std::size_t i = 0; i < k; ++i) out.push_back(D(i, i));
  return out;
}

Integer det(const IntMatrix& m) {
  if (!m.square()) throw MatrixError("det: matrix is not square");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        a(i, j) = t;
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

namespace {

Integer cofactor_expand(const IntMatrix& m, std::vector<std::size_t>& cols, std::size_t row) {
  if (cols.empty()) return 1;
  Integer total = 0;
  for (std::size_t k = 0; k < cols.size(); ++k) {
    const std::size_t c = cols[k];
    if (m(row, c) == 0) continue;
    std::vector<std::size_t> rest;
    rest.reserve(cols.size() - 1);
    for (std::size_t t = 0; t < cols.size(); ++t)
      if (t != k) rest.push_back(cols[t]);
    Integer minor = cofactor_expand(m, rest, row + 1);
    if (k % 2 == 0)
      total += m(row, c) * minor;
    else
      total -= m(row, c) * minor;
  }
  return total;
}

}  // namespace

Integer det_cofactor(const IntMatrix& m) {
  if (!m.square()) throw MatrixError("det: matrix is not square");
  if (m.rows() > 8) throw MatrixError("det_cofactor: matrix too large for Laplace expansion");
  std::vector<std::size_t> cols(m.cols());
  for (std::size_t j = 0; j < cols.size(); ++j) cols[j] = j;
  return cofactor_expand(m, cols, 0);
}

RationalMatrix inverse(const IntMatrix& m) {
  if (!m.square()) throw MatrixError("inverse: matrix is not square");
  const std::size_t n = m.rows();
  RationalMatrix a = to_rational(m);
  RationalMatrix inv = RationalMatrix::identity(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a(p, k) == 0) ++p;
    if (p == n) throw SingularMatrixError("inverse: matrix is singular");
    a.swap_rows(k, p);
    inv.swap_rows(k, p);
    const Rational pivot = a(k, k);
    for (std::size_t j = 0; j < n; ++j) {
      a(k, j) /= pivot;
      inv(k, j) /= pivot;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || a(i, k) == 0) continue;
      const Rational f = a(i, k);
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) -= f * a(k, j);
        inv(i, j) -= f * inv(k, j);
      }
    }
  }
  return inv;
}

IntMatrix unimodular_inverse(const IntMatrix& m) {
  const Integer d = det(m);
  if (abs(d) != 1) throw MatrixError("unimodular_inverse: determinant is not +-1");
  RationalMatrix q = inverse(m);
  IntMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = q(i, j).get_num();
  return out;
}

std::size_t rank(const IntMatrix& m) {
  RationalMatrix a = to_rational(m);
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && a(p, c) == 0) ++p;
    if (p == a.rows()) continue;
    a.swap_rows(r, p);
    for (std::size_t i = r + 1; i < a.rows(); ++i) {
      if (a(i, c) == 0) continue;
      const Rational f = a(i, c) / a(r, c);
      for (std::size_t j = c; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
    }
    ++r;
  }
  return r;
}

std::string to_string(const Rational& r) {
  Rational q = r;
  q.canonicalize();
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_string(const IntMatrix& m) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i) os << ", ";
    os << '[';
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) os << ',';
      os << m(i, j).get_str();
    }
    os << ']';
  }
  os << ']';
  return os.str();
}

}  // namespace gamma4::exact
