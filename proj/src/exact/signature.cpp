#include "gamma4/exact.hpp"

namespace gamma4::exact {

namespace {

int sgn(const Rational& q) { return q > 0 ? 1 : (q < 0 ? -1 : 0); }

// Symmetric permutation: swap index a and b in both rows and columns.
void sym_swap(RationalMatrix& a, std::size_t i, std::size_t j) {
  a.swap_rows(i, j);
  a.swap_cols(i, j);
}

}  // namespace

int signature(const IntMatrix& m) {
  if (!m.symmetric()) throw MatrixError("signature: matrix is not symmetric");
  RationalMatrix a = to_rational(m);
  const std::size_t n = a.rows();
  int sig = 0;
  std::size_t t = 0;

  while (t < n) {
    std::size_t p = t;
    while (p < n && a(p, p) == 0) ++p;

    if (p < n) {
      sym_swap(a, t, p);
      const Rational d = a(t, t);
      sig += sgn(d);
      for (std::size_t i = t + 1; i < n; ++i) {
        if (a(i, t) == 0) continue;
        const Rational f = a(i, t) / d;
        for (std::size_t j = t + 1; j < n; ++j) a(i, j) -= f * a(t, j);
      }
      for (std::size_t i = t + 1; i < n; ++i) {
        a(i, t) = 0;
        a(t, i) = 0;
      }
      t += 1;
      continue;
    }

    // Zero diagonal on the trailing block: split off a hyperbolic 2x2 block.
    std::size_t q = t + 1;
    while (q < n && a(t, q) == 0) ++q;
    if (q == n) throw SingularMatrixError("signature: matrix is singular");
    sym_swap(a, t + 1, q);
    const Rational b = a(t, t + 1);
    // Block [[0,b],[b,0]] has one positive and one negative eigenvalue.
    // Schur complement: A22 - A21 * [[0,1/b],[1/b,0]] * A12.
    for (std::size_t i = t + 2; i < n; ++i) {
      for (std::size_t j = t + 2; j < n; ++j) {
        a(i, j) -= (a(i, t) * a(t + 1, j) + a(i, t + 1) * a(t, j)) / b;
      }
    }
    for (std::size_t i = t + 2; i < n; ++i) {
      a(i, t) = a(t, i) = 0;
      a(i, t + 1) = a(t + 1, i) = 0;
    }
    t += 2;
  }
  return sig;
}

}  // namespace gamma4::exact
