#include "gamma4/linkform.hpp"

#include <numeric>
#include <stdexcept>

namespace gamma4::linkform {

namespace {

long mulmod(long a, long b, long m) {
  return static_cast<long>((static_cast<__int128>(a) * b) % m);
}

}  // namespace

Rational mod_one(const Rational& q) {
  exact::Integer fl;
  mpz_fdiv_q(fl.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  Rational r = q - Rational(fl);
  r.canonicalize();
  return r;
}

LinkingForm::LinkingForm(FiniteAbelianGroup group, const RationalMatrix& values, bool sign_fixed)
    : group_(std::move(group)), modulus_(group_.exponent()), sign_fixed_(sign_fixed) {
  const std::size_t k = group_.rank();
  if (values.rows() != k || values.cols() != k)
    throw std::invalid_argument("linking form: value matrix does not match the group rank");
  num_.assign(k, std::vector<long>(k, 0));
  const auto& d = group_.factors();
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      Rational v = mod_one(values(i, j));
      if (v != mod_one(values(j, i))) throw std::invalid_argument("linking form: not symmetric");
      // lambda(d_i g_i, g_j) must vanish, so the denominator divides gcd(d_i, d_j).
      if (!v.get_den().fits_slong_p() || std::gcd(d[i], d[j]) % v.get_den().get_si() != 0)
        throw std::invalid_argument("linking form: value " + exact::to_string(v) +
                                    " is not defined on " + group_.to_string());
      num_[i][j] = Rational(v * modulus_).get_num().get_si();
    }
}

Rational LinkingForm::value(std::size_t i, std::size_t j) const {
  Rational q(num_[i][j], modulus_);
  q.canonicalize();
  return q;
}

RationalMatrix LinkingForm::matrix() const {
  const std::size_t k = group_.rank();
  RationalMatrix m(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) m(i, j) = value(i, j);
  return m;
}

long LinkingForm::pair_numerator(const Element& x, const Element& y) const {
  const std::size_t k = group_.rank();
  long s = 0;
  for (std::size_t i = 0; i < k; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < k; ++j) {
      if (y[j] == 0 || num_[i][j] == 0) continue;
      s = (s + mulmod(mulmod(x[i], y[j], modulus_), num_[i][j], modulus_)) % modulus_;
    }
  }
  return s;
}

Rational LinkingForm::pair(const Element& x, const Element& y) const {
  Rational q(pair_numerator(x, y), modulus_);
  q.canonicalize();
  return q;
}

bool LinkingForm::nondegenerate() const {
  const long n = group_.order();
  const std::size_t k = group_.rank();
  for (long idx = 1; idx < n; ++idx) {
    Element x = group_.element(idx);
    bool seen = false;
    for (std::size_t j = 0; j < k && !seen; ++j) {
      Element e = group_.zero();
      e[j] = 1;
      seen = pair_numerator(x, e) != 0;
    }
    if (!seen) return false;
  }
  return true;
}

LinkingForm LinkingForm::negated() const {
  LinkingForm f = *this;
  for (auto& row : f.num_)
    for (auto& v : row) v = (modulus_ - v) % modulus_;
  return f;
}

LinkingForm LinkingForm::with_sign(int sign) const {
  LinkingForm f = sign < 0 ? negated() : *this;
  f.sign_fixed_ = true;
  return f;
}

FiniteAbelianGroup homology(const IntMatrix& g) {
  if (!g.square()) throw exact::MatrixError("homology: relation matrix must be square");
  std::vector<long> factors;
  for (const auto& d : exact::smith_normal_form(g).diagonal()) {
    if (d == 0) throw exact::SingularMatrixError("homology: singular Goeritz matrix");
    if (d > 1) factors.push_back(d.get_si());
  }
  return FiniteAbelianGroup(std::move(factors));
}

FiniteAbelianGroup homology(const planar::GoeritzData& gd) { return homology(gd.reduced); }

LinkingForm linking_form(const IntMatrix& g) {
  if (!g.square()) throw exact::MatrixError("linking form: relation matrix must be square");
  if (g.rows() == 0) return LinkingForm(FiniteAbelianGroup(), RationalMatrix(0, 0));

  exact::SNFResult snf = exact::smith_normal_form(g);
  auto diag = snf.diagonal();
  std::vector<std::size_t> keep;
  std::vector<long> factors;
  for (std::size_t i = 0; i < diag.size(); ++i) {
    if (diag[i] == 0) throw exact::SingularMatrixError("linking form: singular Goeritz matrix");
    if (diag[i] > 1) {
      keep.push_back(i);
      factors.push_back(diag[i].get_si());
    }
  }
  // Generators are the columns of U^{-1}; transport G^{-1} to them.
  RationalMatrix W = exact::to_rational(exact::unimodular_inverse(snf.U));
  RationalMatrix T = W.transpose() * exact::inverse(g) * W;
  RationalMatrix values(keep.size(), keep.size());
  for (std::size_t a = 0; a < keep.size(); ++a)
    for (std::size_t b = 0; b < keep.size(); ++b) values(a, b) = T(keep[a], keep[b]);
  return LinkingForm(FiniteAbelianGroup(std::move(factors)), values);
}

LinkingForm linking_form(const planar::GoeritzData& gd) { return linking_form(gd.reduced); }

LinkingForm cyclic_form(long n, long a, bool sign_fixed) {
  if (n < 1) throw std::invalid_argument("cyclic form: order must be positive");
  if (n == 1) return LinkingForm(FiniteAbelianGroup(), RationalMatrix(0, 0), sign_fixed);
  if (std::gcd(((a % n) + n) % n, n) != 1)
    throw std::invalid_argument("cyclic form: numerator must be a unit mod n");
  RationalMatrix v(1, 1);
  v(0, 0) = Rational(a, n);
  v(0, 0).canonicalize();
  return LinkingForm(FiniteAbelianGroup({n}), v, sign_fixed);
}

std::set<Rational> generator_values(const LinkingForm& f) {
  const auto& grp = f.group();
  if (!grp.cyclic()) throw std::invalid_argument("generator values: group is not cyclic");
  std::set<Rational> out;
  if (grp.trivial()) {
    out.insert(Rational(0));
    return out;
  }
  const long n = grp.order();
  for (long m = 1; m < n; ++m)
    if (std::gcd(m, n) == 1) out.insert(f.self({m}));
  return out;
}

}  // namespace gamma4::linkform
