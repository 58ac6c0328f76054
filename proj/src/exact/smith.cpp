#include "gamma4/exact.hpp"

#include <optional>
#include <utility>

namespace gamma4::exact {

namespace {

struct Reduction {
  IntMatrix D;
  IntMatrix U;  // row operations accumulate here
  IntMatrix V;  // column operations accumulate here

  void swap_rows(std::size_t a, std::size_t b) {
    D.swap_rows(a, b);
    U.swap_rows(a, b);
  }
  void swap_cols(std::size_t a, std::size_t b) {
    D.swap_cols(a, b);
    V.swap_cols(a, b);
  }
  // row[dst] += f * row[src]
  void add_row(std::size_t dst, std::size_t src, const Integer& f) {
    for (std::size_t j = 0; j < D.cols(); ++j) D(dst, j) += f * D(src, j);
    for (std::size_t j = 0; j < U.cols(); ++j) U(dst, j) += f * U(src, j);
  }
  // col[dst] += f * col[src]
  void add_col(std::size_t dst, std::size_t src, const Integer& f) {
    for (std::size_t i = 0; i < D.rows(); ++i) D(i, dst) += f * D(i, src);
    for (std::size_t i = 0; i < V.rows(); ++i) V(i, dst) += f * V(i, src);
  }
  void negate_row(std::size_t r) {
    for (std::size_t j = 0; j < D.cols(); ++j) D(r, j) = -D(r, j);
    for (std::size_t j = 0; j < U.cols(); ++j) U(r, j) = -U(r, j);
  }

  // Smallest nonzero |entry| in the trailing block starting at (t, t).
  std::optional<std::pair<std::size_t, std::size_t>> min_pivot(std::size_t t) const {
    std::optional<std::pair<std::size_t, std::size_t>> best;
    Integer best_abs;
    for (std::size_t i = t; i < D.rows(); ++i)
      for (std::size_t j = t; j < D.cols(); ++j) {
        if (D(i, j) == 0) continue;
        Integer a = abs(D(i, j));
        if (!best || a < best_abs) {
          best = {i, j};
          best_abs = a;
        }
      }
    return best;
  }
};

}  // namespace

SNFResult smith_normal_form(const IntMatrix& m) {
  Reduction r{m, IntMatrix::identity(m.rows()), IntMatrix::identity(m.cols())};
  const std::size_t k = std::min(m.rows(), m.cols());

  for (std::size_t t = 0; t < k; ++t) {
    for (;;) {
      auto pivot = r.min_pivot(t);
      if (!pivot) break;  // trailing block is zero
      r.swap_rows(t, pivot->first);
      r.swap_cols(t, pivot->second);

      bool clean = true;
      for (std::size_t i = t + 1; i < m.rows(); ++i) {
        if (r.D(i, t) == 0) continue;
        Integer q;
        mpz_tdiv_q(q.get_mpz_t(), r.D(i, t).get_mpz_t(), r.D(t, t).get_mpz_t());
        r.add_row(i, t, -q);
        if (r.D(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < m.cols(); ++j) {
        if (r.D(t, j) == 0) continue;
        Integer q;
        mpz_tdiv_q(q.get_mpz_t(), r.D(t, j).get_mpz_t(), r.D(t, t).get_mpz_t());
        r.add_col(j, t, -q);
        if (r.D(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Pivot isolated; enforce divisibility of the rest of the block.
      std::optional<std::size_t> offender;
      for (std::size_t i = t + 1; i < m.rows() && !offender; ++i)
        for (std::size_t j = t + 1; j < m.cols(); ++j)
          if (!mpz_divisible_p(r.D(i, j).get_mpz_t(), r.D(t, t).get_mpz_t())) {
            offender = i;
            break;
          }
      if (!offender) break;
      r.add_row(t, *offender, 1);
    }
    if (r.D(t, t) < 0) r.negate_row(t);
  }
  return SNFResult{std::move(r.U), std::move(r.V), std::move(r.D)};
}

}  // namespace gamma4::exact
