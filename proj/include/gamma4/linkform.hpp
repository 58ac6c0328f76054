#pragma once

// Homology of the double branched cover and its linking form, with the
// Mobius-band, Klein-bottle, metabolic and definiteness tests.

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "gamma4/exact.hpp"
#include "gamma4/planar.hpp"

namespace gamma4::linkform {

using exact::IntMatrix;
using exact::Rational;
using exact::RationalMatrix;

/// Coordinates with respect to the invariant-factor generators.
using Element = std::vector<long>;

class FiniteAbelianGroup {
public:
  FiniteAbelianGroup() = default;
  /// Factors must be > 1 and form a divisibility chain.
  explicit FiniteAbelianGroup(std::vector<long> factors);

  const std::vector<long>& factors() const { return factors_; }
  std::size_t rank() const { return factors_.size(); }
  long order() const;
  /// Largest invariant factor (1 for the trivial group).
  long exponent() const { return factors_.empty() ? 1 : factors_.back(); }
  bool trivial() const { return factors_.empty(); }
  bool cyclic() const { return factors_.size() <= 1; }

  Element zero() const { return Element(factors_.size(), 0); }
  Element element(long index) const;  // mixed radix, last coordinate fastest
  long index(const Element& x) const;
  Element add(const Element& x, const Element& y) const;
  Element scale(const Element& x, long m) const;
  long order_of(const Element& x) const;
  std::vector<Element> elements() const;

  std::string to_string() const;  // "Z51", "Z3+Z3", "0"
  friend bool operator==(const FiniteAbelianGroup&, const FiniteAbelianGroup&) = default;

private:
  std::vector<long> factors_;
};

/// Symmetric Q/Z-valued pairing given by its values on the generators.
class LinkingForm {
public:
  LinkingForm() = default;
  /// values[i][j] is reduced mod 1; throws if inconsistent with the group.
  LinkingForm(FiniteAbelianGroup group, const RationalMatrix& values, bool sign_fixed = false);

  const FiniteAbelianGroup& group() const { return group_; }
  bool sign_fixed() const { return sign_fixed_; }

  Rational value(std::size_t i, std::size_t j) const;
  RationalMatrix matrix() const;

  Rational pair(const Element& x, const Element& y) const;
  Rational self(const Element& x) const { return pair(x, x); }
  /// pair(x, y) * exponent, as an integer in [0, exponent).
  long pair_numerator(const Element& x, const Element& y) const;

  bool nondegenerate() const;
  LinkingForm negated() const;
  /// Resolves the global sign: multiplies by `sign` and marks the sign fixed.
  LinkingForm with_sign(int sign) const;

private:
  FiniteAbelianGroup group_;
  long modulus_ = 1;
  std::vector<std::vector<long>> num_;  // values * modulus_
  bool sign_fixed_ = false;
};

/// q reduced into [0, 1).
Rational mod_one(const Rational& q);

FiniteAbelianGroup homology(const IntMatrix& g);
FiniteAbelianGroup homology(const planar::GoeritzData& gd);

/// lambda = +G^{-1} transported to the invariant-factor generators (columns
/// of U^{-1} for the Smith form U G V = D). The sign is left unfixed.
LinkingForm linking_form(const IntMatrix& g);
LinkingForm linking_form(const planar::GoeritzData& gd);

/// The form a/n on Z_n; requires gcd(a, n) = 1.
LinkingForm cyclic_form(long n, long a, bool sign_fixed = false);

/// { m^2 lambda(g,g) mod 1 : gcd(m, N) = 1 } for a cyclic form.
std::set<Rational> generator_values(const LinkingForm& f);

enum class Result { Obstructed, NotObstructed, Inapplicable };
std::string to_string(Result r);

struct ObstructionVerdict {
  Result result = Result::Inapplicable;
  std::optional<Element> witness;
  std::string detail;

  bool obstructed() const { return result == Result::Obstructed; }
};

/// Cyclic group of order n with every prime exponent odd: obstructed iff no
/// generator a has lambda(a,a) = +-1/n.
ObstructionVerdict mobius_obstruction_cyclic(const LinkingForm& f);

/// Cyclic group of order p^2 q: not obstructed iff some generator a has
/// lambda(a,a) = +-1/(p^2 q) or some element a of order q has lambda(a,a) = +-1/q.
ObstructionVerdict mobius_obstruction_p2q(const LinkingForm& f, long p, long q);
/// (p, q) when n = p^2 q with p prime and q squarefree, coprime to p.
std::optional<std::pair<long, long>> p2q_split(long n);

/// Z_p + Z_p: not obstructed iff det(p * lambda) is +- a square mod p.
ObstructionVerdict klein_discriminant(const LinkingForm& f, long p);
/// p when the group is Z_p + Z_p with p prime.
std::optional<long> klein_prime(const FiniteAbelianGroup& g);

struct MetabolicResult {
  bool metabolic = false;
  std::vector<Element> subgroup;  // the isotropic subgroup when metabolic
};
MetabolicResult metabolic_test(const LinkingForm& f);

/// Cyclic form with fixed sign against a required sign (+1/-1) for the
/// bounding 4-manifold.
ObstructionVerdict definiteness_consistency(const LinkingForm& f, std::optional<int> required_sign);

bool is_prime(long n);
std::vector<std::pair<long, int>> factorize(long n);

}  // namespace gamma4::linkform
