#include "gamma4/linkform.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace gamma4::linkform {

namespace {

ObstructionVerdict verdict(Result r, std::string detail, std::optional<Element> w = std::nullopt) {
  return ObstructionVerdict{r, std::move(w), std::move(detail)};
}

std::string frac(long num, long den) { return exact::to_string(Rational(num, den)); }

std::string pm_frac(long den) { return "+-1/" + std::to_string(den); }

bool squarefree(long n) {
  for (const auto& [p, e] : factorize(n))
    if (e > 1) return false;
  return true;
}

// Self-linking of m*g on a cyclic group, as a numerator over n.
long cyclic_self(const LinkingForm& f, long m) { return f.pair_numerator({m}, {m}); }

}  // namespace

std::string to_string(Result r) {
  switch (r) {
    case Result::Obstructed:
      return "Obstructed";
    case Result::NotObstructed:
      return "NotObstructed";
    case Result::Inapplicable:
      break;
  }
  return "Inapplicable";
}

ObstructionVerdict mobius_obstruction_cyclic(const LinkingForm& f) {
  const auto& g = f.group();
  if (!g.cyclic()) return verdict(Result::Inapplicable, g.to_string() + " is not cyclic");
  if (g.trivial()) return verdict(Result::NotObstructed, "trivial group", g.zero());
  const long n = g.order();
  for (const auto& [p, e] : factorize(n))
    if (e % 2 == 0)
      return verdict(Result::Inapplicable,
                     "prime " + std::to_string(p) + " has even exponent in " + std::to_string(n));

  for (long m = 1; m < n; ++m) {
    if (std::gcd(m, n) != 1) continue;
    long v = cyclic_self(f, m);
    if (v == 1 || v == n - 1)
      return verdict(Result::NotObstructed,
                     "generator " + std::to_string(m) + "g has self-linking " + frac(v, n), Element{m});
  }
  return verdict(Result::Obstructed, "orbit of " + frac(cyclic_self(f, 1), n) + " misses " + pm_frac(n));
}

std::optional<std::pair<long, long>> p2q_split(long n) {
  if (n < 4) return std::nullopt;
  long p = 0, q = 1;
  for (const auto& [r, e] : factorize(n)) {
    if (e == 2 && p == 0)
      p = r;
    else if (e == 1)
      q *= r;
    else
      return std::nullopt;
  }
  if (p == 0) return std::nullopt;
  return std::make_pair(p, q);
}

ObstructionVerdict mobius_obstruction_p2q(const LinkingForm& f, long p, long q) {
  const auto& g = f.group();
  const long n = g.order();
  if (!g.cyclic() || g.trivial()) return verdict(Result::Inapplicable, g.to_string() + " is not Z_{p^2 q}");
  if (!is_prime(p) || q < 1 || !squarefree(q) || std::gcd(p, q) != 1 || p * p * q != n)
    return verdict(Result::Inapplicable, "order " + std::to_string(n) + " is not p^2 q with p=" +
                                             std::to_string(p) + ", q=" + std::to_string(q));

  for (long m = 1; m < n; ++m) {
    if (std::gcd(m, n) != 1) continue;
    long v = cyclic_self(f, m);
    if (v == 1 || v == n - 1)
      return verdict(Result::NotObstructed,
                     "generator " + std::to_string(m) + "g has self-linking " + frac(v, n), Element{m});
  }
  if (q == 1) return verdict(Result::NotObstructed, "q = 1: the Z_q summand is trivial", Element{0});
  // Elements of order q are p^2 k with gcd(k, q) = 1; their self-linking is a
  // multiple of p^2/n = 1/q.
  const long pp = p * p;
  for (long k = 1; k < q; ++k) {
    if (std::gcd(k, q) != 1) continue;
    long v = cyclic_self(f, pp * k);
    if (v == pp || v == n - pp)
      return verdict(Result::NotObstructed,
                     "order-" + std::to_string(q) + " element " + std::to_string(pp * k) +
                         "g has self-linking " + frac(v, n),
                     Element{pp * k});
  }
  return verdict(Result::Obstructed, "no generator with " + pm_frac(n) + " and no order-" +
                                         std::to_string(q) + " element with " + pm_frac(q));
}

std::optional<long> klein_prime(const FiniteAbelianGroup& g) {
  const auto& d = g.factors();
  if (d.size() == 2 && d[0] == d[1] && is_prime(d[0])) return d[0];
  return std::nullopt;
}

ObstructionVerdict klein_discriminant(const LinkingForm& f, long p) {
  const auto& g = f.group();
  if (klein_prime(g) != p)
    return verdict(Result::Inapplicable, g.to_string() + " is not Z" + std::to_string(p) + "+Z" +
                                             std::to_string(p));
  // With modulus p the stored numerators are exactly p * lambda.
  Element e0{1, 0}, e1{0, 1};
  long a = f.pair_numerator(e0, e0), b = f.pair_numerator(e0, e1), c = f.pair_numerator(e1, e1);
  long det = ((a * c - b * b) % p + p) % p;
  if (det == 0) return verdict(Result::Inapplicable, "degenerate form");
  std::vector<bool> square(p, false);
  for (long x = 1; x < p; ++x) square[(x * x) % p] = true;
  std::string d = "det(p*lambda) = " + std::to_string(det) + " mod " + std::to_string(p);
  if (square[det] || square[p - det]) return verdict(Result::NotObstructed, d + " is +- a square");
  return verdict(Result::Obstructed, d + " is not +- a square");
}

MetabolicResult metabolic_test(const LinkingForm& f) {
  const auto& g = f.group();
  const long n = g.order();
  long root = 0;
  while ((root + 1) * (root + 1) <= n) ++root;
  if (root * root != n) return {};
  if (n == 1) return {true, {g.zero()}};

  auto elems = g.elements();
  std::vector<bool> isotropic(n);
  for (long i = 0; i < n; ++i) isotropic[i] = f.pair_numerator(elems[i], elems[i]) == 0;

  // Closure of H + <x>, assuming x is orthogonal to H.
  auto extend = [&](const std::vector<long>& h, long x) {
    std::vector<bool> in(n, false);
    std::vector<long> out;
    for (long y : h) {
      Element z = elems[y];
      for (;;) {
        long zi = g.index(z);
        if (in[zi]) break;
        in[zi] = true;
        out.push_back(zi);
        z = g.add(z, elems[x]);
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  };

  MetabolicResult res;
  std::function<bool(const std::vector<long>&, long)> dfs = [&](const std::vector<long>& h,
                                                                 long from) -> bool {
    if (static_cast<long>(h.size()) == root) {
      for (long i : h) res.subgroup.push_back(elems[i]);
      res.metabolic = true;
      return true;
    }
    for (long x = from; x < n; ++x) {
      if (!isotropic[x] || std::binary_search(h.begin(), h.end(), x)) continue;
      bool orth = std::all_of(h.begin(), h.end(),
                              [&](long y) { return f.pair_numerator(elems[x], elems[y]) == 0; });
      if (!orth) continue;
      auto h2 = extend(h, x);
      if (static_cast<long>(h2.size()) > root || root % static_cast<long>(h2.size()) != 0) continue;
      if (dfs(h2, x + 1)) return true;
    }
    return false;
  };
  dfs({0}, 1);
  return res;
}

ObstructionVerdict definiteness_consistency(const LinkingForm& f, std::optional<int> required_sign) {
  if (!required_sign) return verdict(Result::Inapplicable, "no required definiteness");
  if (!f.sign_fixed()) return verdict(Result::Inapplicable, "sign of the form is not fixed");
  const auto& g = f.group();
  if (!g.cyclic()) return verdict(Result::Inapplicable, g.to_string() + " is not cyclic");
  const long n = g.order();
  const char* want = *required_sign > 0 ? "positive" : "negative";
  if (n == 1) return verdict(Result::NotObstructed, "trivial group", g.zero());

  std::optional<long> plus, minus;
  for (long m = 1; m < n; ++m) {
    if (std::gcd(m, n) != 1) continue;
    long v = cyclic_self(f, m);
    if (v == 1 && !plus) plus = m;
    if (v == n - 1 && !minus) minus = m;
  }
  if (!plus && !minus) return verdict(Result::Inapplicable, "no generator with " + pm_frac(n));
  if (plus && minus)
    return verdict(Result::NotObstructed, "both +1/" + std::to_string(n) + " and -1/" +
                                              std::to_string(n) + " occur",
                   Element{*required_sign > 0 ? *plus : *minus});
  const int eps = plus ? 1 : -1;
  const long m = plus ? *plus : *minus;
  std::string d = "form is " + std::string(eps > 0 ? "+" : "-") + "1/" + std::to_string(n) +
                  " (generator " + std::to_string(m) + "g), required " + want;
  if (eps != *required_sign) return verdict(Result::Obstructed, d, Element{m});
  return verdict(Result::NotObstructed, d, Element{m});
}

}  // namespace gamma4::linkform
