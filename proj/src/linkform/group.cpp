#include "gamma4/linkform.hpp"

#include <numeric>
#include <stdexcept>

namespace gamma4::linkform {

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<long> factors) : factors_(std::move(factors)) {
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (factors_[i] < 2) throw std::invalid_argument("invariant factors must exceed 1");
    if (i > 0 && factors_[i] % factors_[i - 1] != 0)
      throw std::invalid_argument("invariant factors must form a divisibility chain");
  }
}

long FiniteAbelianGroup::order() const {
  long n = 1;
  for (long d : factors_) n *= d;
  return n;
}

Element FiniteAbelianGroup::element(long index) const {
  Element x(factors_.size());
  for (std::size_t i = factors_.size(); i-- > 0;) {
    x[i] = index % factors_[i];
    index /= factors_[i];
  }
  return x;
}

long FiniteAbelianGroup::index(const Element& x) const {
  long idx = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i) idx = idx * factors_[i] + x[i];
  return idx;
}

Element FiniteAbelianGroup::add(const Element& x, const Element& y) const {
  Element z(factors_.size());
  for (std::size_t i = 0; i < factors_.size(); ++i) z[i] = (x[i] + y[i]) % factors_[i];
  return z;
}

Element FiniteAbelianGroup::scale(const Element& x, long m) const {
  Element z(factors_.size());
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    long d = factors_[i];
    z[i] = ((x[i] % d) * (((m % d) + d) % d)) % d;
  }
  return z;
}

long FiniteAbelianGroup::order_of(const Element& x) const {
  long ord = 1;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    long d = factors_[i];
    long oi = d / std::gcd(x[i] % d, d);
    ord = std::lcm(ord, oi);
  }
  return ord;
}

std::vector<Element> FiniteAbelianGroup::elements() const {
  std::vector<Element> out;
  const long n = order();
  out.reserve(n);
  for (long i = 0; i < n; ++i) out.push_back(element(i));
  return out;
}

std::string FiniteAbelianGroup::to_string() const {
  if (factors_.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i) s += "+";
    s += "Z" + std::to_string(factors_[i]);
  }
  return s;
}

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::pair<long, int>> factorize(long n) {
  std::vector<std::pair<long, int>> out;
  for (long p = 2; p * p <= n; ++p) {
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e) out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

}  // namespace gamma4::linkform
