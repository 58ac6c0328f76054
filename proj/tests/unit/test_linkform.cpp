#include "doctest.h"

#include <map>
#include <numeric>
#include <random>

#include "gamma4/linkform.hpp"

using namespace gamma4;
using namespace gamma4::linkform;
using exact::IntMatrix;

namespace {

const IntMatrix kPrinted = {{3, -1, 0, -1}, {-1, 5, -1, 0}, {0, -1, 0, 2}, {-1, 0, 2, 0}};

Rational q(long a, long b) {
  Rational r(a, b);
  r.canonicalize();
  return mod_one(r);
}

std::vector<knotio::KnotRecord> dataset() {
  return knotio::load_dataset(std::string(GAMMA4_DATA_DIR) + "/knots.csv");
}

// Multiset of self-linkings x^T G^{-1} x over Z^m / G Z^m, from the box
// [0, N)^m (every coset occurs N^(m-1) times there).
std::map<Rational, long> self_linking_oracle(const IntMatrix& g) {
  const long n = exact::Integer(abs(exact::det(g))).get_si();
  const std::size_t m = g.rows();
  exact::RationalMatrix inv = exact::inverse(g);
  std::map<Rational, long> count;
  std::vector<long> x(m, 0);
  long total = 1;
  for (std::size_t i = 0; i < m; ++i) total *= n;
  for (long idx = 0; idx < total; ++idx) {
    long t = idx;
    for (std::size_t i = 0; i < m; ++i) {
      x[i] = t % n;
      t /= n;
    }
    Rational s = 0;
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) s += inv(i, j) * x[i] * x[j];
    ++count[mod_one(s)];
  }
  long rep = total / n;
  for (auto& [v, c] : count) c /= rep;
  return count;
}

std::map<Rational, long> self_linking_of(const LinkingForm& f) {
  std::map<Rational, long> count;
  for (const auto& x : f.group().elements()) ++count[f.self(x)];
  return count;
}

bool is_square_mod(long a, long p) {
  for (long x = 1; x < p; ++x)
    if ((x * x) % p == ((a % p) + p) % p) return true;
  return false;
}

}  // namespace

TEST_CASE("finite abelian groups") {
  FiniteAbelianGroup g({3, 15});
  CHECK(g.order() == 45);
  CHECK(!g.cyclic());
  CHECK(g.to_string() == "Z3+Z15");
  for (long i = 0; i < g.order(); ++i) CHECK(g.index(g.element(i)) == i);
  CHECK(g.order_of({1, 0}) == 3);
  CHECK(g.order_of({1, 5}) == 3);
  CHECK(g.order_of({0, 1}) == 15);
  CHECK(g.add({2, 14}, {2, 2}) == Element{1, 1});
  CHECK_THROWS(FiniteAbelianGroup({3, 5}));
  CHECK_THROWS(FiniteAbelianGroup({1}));
  CHECK(FiniteAbelianGroup().to_string() == "0");
}

TEST_CASE("homology from relation matrices") {
  CHECK(homology(kPrinted).factors() == std::vector<long>{51});
  CHECK(homology(IntMatrix{{3}}).factors() == std::vector<long>{3});
  CHECK(homology(IntMatrix(0, 0)).trivial());
  CHECK(homology(IntMatrix{{3, 0}, {0, -5}}).factors() == std::vector<long>{15});
  CHECK(homology(IntMatrix{{3, 0}, {0, 3}}).factors() == std::vector<long>{3, 3});
  CHECK_THROWS_AS(homology(IntMatrix{{1, 1}, {1, 1}}), exact::SingularMatrixError);
}

TEST_CASE("linking form of the printed matrix") {
  LinkingForm f = linking_form(kPrinted);
  REQUIRE(f.group().factors() == std::vector<long>{51});
  CHECK(!f.sign_fixed());
  auto orbit = generator_values(f);
  CHECK((orbit.count(q(20, 51)) || orbit.count(q(-20, 51))));
  CHECK(!orbit.count(q(1, 51)));
  CHECK(!orbit.count(q(50, 51)));
  CHECK(f.nondegenerate());
}

TEST_CASE("linking form of [3] and of diag(3,-5)") {
  LinkingForm f3 = linking_form(IntMatrix{{3}});
  CHECK((f3.value(0, 0) == q(1, 3) || f3.value(0, 0) == q(-1, 3)));

  IntMatrix d = {{3, 0}, {0, -5}};
  LinkingForm f = linking_form(d);
  CHECK(f.group().order() == 15);
  CHECK(self_linking_of(f) == self_linking_oracle(d));
  // lambda = 1/3 (+) -1/5: the order-3 and order-5 parts.
  Element g3 = f.group().scale({1}, 5), g5 = f.group().scale({1}, 3);
  auto v3 = generator_values(cyclic_form(3, 1)), v5 = generator_values(cyclic_form(5, -1));
  CHECK(v3.count(f.self(g3)));
  CHECK(v5.count(f.self(g5)));
  CHECK(f.pair(g3, g5) == 0);
}

TEST_CASE("pairing oracle on random small relation matrices") {
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> e(-4, 4);
  int done = 0;
  while (done < 40) {
    std::size_t m = 1 + done % 3;
    IntMatrix g(m, m);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = i; j < m; ++j) g(i, j) = g(j, i) = e(rng);
    long n = exact::Integer(abs(exact::det(g))).get_si();
    if (n == 0 || n > 40) continue;
    LinkingForm f = linking_form(g);
    CHECK(f.group().order() == n);
    CHECK(f.nondegenerate());
    CHECK(self_linking_of(f) == self_linking_oracle(g));
    ++done;
  }
}

TEST_CASE("transported form agrees with G^-1 on the standard basis") {
  for (const auto& r : dataset()) {
    auto gd = planar::goeritz(*r.pd);
    const IntMatrix& g = gd.reduced;
    LinkingForm f = linking_form(g);
    CHECK(f.group().order() == r.determinant);
    CHECK(f.nondegenerate());
    auto snf = exact::smith_normal_form(g);
    auto diag = snf.diagonal();
    auto inv = exact::inverse(g);
    auto coords = [&](std::size_t i) {
      Element x;
      for (std::size_t k = 0; k < diag.size(); ++k)
        if (diag[k] > 1) {
          long d = diag[k].get_si();
          x.push_back(((snf.U(k, i).get_si() % d) + d) % d);
        }
      return x;
    };
    for (std::size_t i = 0; i < g.rows(); ++i)
      for (std::size_t j = 0; j < g.rows(); ++j) CHECK(f.pair(coords(i), coords(j)) == mod_one(inv(i, j)));
  }
}

TEST_CASE("generator values") {
  auto o51 = generator_values(cyclic_form(51, 20));
  CHECK(!o51.count(q(1, 51)));
  CHECK(!o51.count(q(50, 51)));
  CHECK(generator_values(cyclic_form(3, 1)) == std::set<Rational>{q(1, 3)});
  CHECK(generator_values(cyclic_form(5, 1)) == std::set<Rational>{q(1, 5), q(4, 5)});
  CHECK(generator_values(cyclic_form(1, 0)) == std::set<Rational>{Rational(0)});
  CHECK_THROWS(generator_values(LinkingForm(FiniteAbelianGroup({3, 3}), exact::RationalMatrix(2, 2))));
  // Invariant under a change of generator.
  for (long n : {35L, 51L, 63L, 87L})
    for (long m = 1; m < n; ++m)
      if (std::gcd(m, n) == 1) CHECK(generator_values(cyclic_form(n, m * m * 2 % n)) == generator_values(cyclic_form(n, 2)));
}

TEST_CASE("invalid forms are rejected") {
  exact::RationalMatrix v(1, 1);
  v(0, 0) = q(1, 2);
  CHECK_THROWS(LinkingForm(FiniteAbelianGroup({3}), v));
  CHECK_THROWS(cyclic_form(9, 3));
  exact::RationalMatrix w(2, 2);
  w(0, 1) = q(1, 3);
  CHECK_THROWS(LinkingForm(FiniteAbelianGroup({3, 3}), w));
}

TEST_CASE("Mobius test on cyclic groups") {
  auto v155 = mobius_obstruction_cyclic(cyclic_form(51, 20));
  CHECK(v155.result == Result::Obstructed);
  CHECK(mobius_obstruction_cyclic(cyclic_form(55, 42)).result == Result::Obstructed);
  auto v17 = mobius_obstruction_cyclic(cyclic_form(47, 1));
  CHECK(v17.result == Result::NotObstructed);
  REQUIRE(v17.witness);
  CHECK(cyclic_form(47, 1).self(*v17.witness) == q(1, 47));
  CHECK(mobius_obstruction_cyclic(cyclic_form(1, 0)).result == Result::NotObstructed);
  CHECK(mobius_obstruction_cyclic(cyclic_form(9, 1)).result == Result::Inapplicable);
  CHECK(mobius_obstruction_cyclic(cyclic_form(63, 61)).result == Result::Inapplicable);
  exact::RationalMatrix h(2, 2);
  h(0, 1) = h(1, 0) = q(1, 5);
  CHECK(mobius_obstruction_cyclic(LinkingForm(FiniteAbelianGroup({5, 5}), h)).result == Result::Inapplicable);
}

TEST_CASE("Mobius verdicts ignore the global sign") {
  for (long n = 1; n <= 120; ++n)
    for (long a = 1; a < std::max(2L, n); ++a) {
      if (n > 1 && std::gcd(a, n) != 1) continue;
      LinkingForm f = cyclic_form(n, n == 1 ? 0 : a);
      CHECK(mobius_obstruction_cyclic(f).result == mobius_obstruction_cyclic(f.negated()).result);
      if (auto pq = p2q_split(n))
        CHECK(mobius_obstruction_p2q(f, pq->first, pq->second).result ==
              mobius_obstruction_p2q(f.negated(), pq->first, pq->second).result);
    }
}

TEST_CASE("p^2 q splitting") {
  CHECK(p2q_split(63) == std::make_pair(3L, 7L));
  CHECK(p2q_split(45) == std::make_pair(3L, 5L));
  CHECK(p2q_split(25) == std::make_pair(5L, 1L));
  CHECK(!p2q_split(51));
  CHECK(!p2q_split(27));
  CHECK(!p2q_split(225));
}

TEST_CASE("p^2 q test") {
  CHECK(mobius_obstruction_p2q(cyclic_form(63, 1), 3, 7).result == Result::NotObstructed);
  // 61/63: no generator reaches +-1/63, but 9g has self-linking 6/7 = -1/7.
  auto v = mobius_obstruction_p2q(cyclic_form(63, 61), 3, 7);
  CHECK(v.result == Result::NotObstructed);
  REQUIRE(v.witness);
  CHECK(cyclic_form(63, 61).group().order_of(*v.witness) == 7);
  CHECK(!generator_values(cyclic_form(63, 61)).count(q(1, 63)));
  CHECK(!generator_values(cyclic_form(63, 61)).count(q(62, 63)));
  // 38/45: order-5 elements 9k give 3 k^2 * 38 / 5 = 4k^2/5 mod 1, never +-1/5.
  CHECK(mobius_obstruction_p2q(cyclic_form(45, 38), 3, 5).result == Result::Obstructed);
  CHECK(mobius_obstruction_p2q(cyclic_form(25, 7), 5, 1).result == Result::NotObstructed);
  CHECK(mobius_obstruction_p2q(cyclic_form(63, 61), 3, 5).result == Result::Inapplicable);
  CHECK(mobius_obstruction_p2q(cyclic_form(63, 61), 4, 7).result == Result::Inapplicable);
}

TEST_CASE("p^2 q test against element enumeration") {
  for (long n = 4; n <= 200; ++n) {
    auto pq = p2q_split(n);
    if (!pq) continue;
    auto [p, qq] = *pq;
    for (long a = 1; a < n; ++a) {
      if (std::gcd(a, n) != 1) continue;
      LinkingForm f = cyclic_form(n, a);
      bool witness = false;
      for (long x = 0; x < n && !witness; ++x) {
        Rational s = f.self({x});
        long ord = n / std::gcd(x, n);
        if (ord == n && (s == q(1, n) || s == q(-1, n))) witness = true;
        if (ord == qq && (s == q(1, qq) || s == q(-1, qq))) witness = true;
      }
      auto res = mobius_obstruction_p2q(f, p, qq).result;
      CHECK(res == (witness ? Result::NotObstructed : Result::Obstructed));
    }
  }
}

TEST_CASE("Klein-bottle discriminant") {
  auto form2 = [](long p, long a, long b, long c) {
    exact::RationalMatrix v(2, 2);
    v(0, 0) = q(a, p);
    v(0, 1) = v(1, 0) = q(b, p);
    v(1, 1) = q(c, p);
    return LinkingForm(FiniteAbelianGroup({p, p}), v);
  };
  CHECK(klein_discriminant(form2(5, 0, 1, 0), 5).result == Result::NotObstructed);
  CHECK(klein_discriminant(form2(3, 1, 0, 1), 3).result == Result::NotObstructed);
  CHECK(klein_discriminant(form2(5, 1, 0, 2), 5).result == Result::Obstructed);
  CHECK(klein_discriminant(cyclic_form(5, 1), 5).result == Result::Inapplicable);
  CHECK(klein_prime(FiniteAbelianGroup({7, 7})) == 7);
  CHECK(!klein_prime(FiniteAbelianGroup({9, 9})));
  for (long p : {3L, 5L, 7L, 11L, 13L})
    for (long a = 1; a < p; ++a)
      for (long b = 1; b < p; ++b) {
        bool pm_square = is_square_mod(a * b, p) || is_square_mod(-a * b, p);
        CHECK(klein_discriminant(form2(p, a, 0, b), p).result ==
              (pm_square ? Result::NotObstructed : Result::Obstructed));
      }
}

TEST_CASE("metabolic forms") {
  CHECK(!metabolic_test(cyclic_form(3, 1)).metabolic);
  auto m9 = metabolic_test(cyclic_form(9, 1));
  CHECK(m9.metabolic);
  std::set<long> h;
  for (const auto& x : m9.subgroup) h.insert(x[0]);
  CHECK(h == std::set<long>{0, 3, 6});

  exact::RationalMatrix hyp(2, 2);
  hyp(0, 1) = hyp(1, 0) = q(1, 5);
  auto mh = metabolic_test(LinkingForm(FiniteAbelianGroup({5, 5}), hyp));
  CHECK(mh.metabolic);
  CHECK(mh.subgroup.size() == 5);

  // Cyclic of square order: <k> is always isotropic.
  for (long k = 2; k <= 12; ++k)
    for (long a = 1; a < k * k; ++a)
      if (std::gcd(a, k * k) == 1) CHECK(metabolic_test(cyclic_form(k * k, a)).metabolic);

  // Z_p + Z_p diagonal: metabolic iff -ab is a square mod p.
  for (long p : {3L, 5L, 7L, 11L})
    for (long a = 1; a < p; ++a)
      for (long b = 1; b < p; ++b) {
        exact::RationalMatrix v(2, 2);
        v(0, 0) = q(a, p);
        v(1, 1) = q(b, p);
        CHECK(metabolic_test(LinkingForm(FiniteAbelianGroup({p, p}), v)).metabolic == is_square_mod(-a * b, p));
      }
}

TEST_CASE("definiteness consistency") {
  CHECK(definiteness_consistency(cyclic_form(3, 1, true), -1).result == Result::Obstructed);
  CHECK(definiteness_consistency(cyclic_form(79, -1, true), -1).result == Result::NotObstructed);
  CHECK(definiteness_consistency(cyclic_form(47, 1, true), 1).result == Result::NotObstructed);
  CHECK(definiteness_consistency(cyclic_form(47, 1, true), std::nullopt).result == Result::Inapplicable);
  CHECK(definiteness_consistency(cyclic_form(3, 1, false), -1).result == Result::Inapplicable);
  CHECK(definiteness_consistency(cyclic_form(51, 20, true), 1).result == Result::Inapplicable);
  CHECK(definiteness_consistency(cyclic_form(5, 1, true), -1).result == Result::NotObstructed);
  CHECK(cyclic_form(3, 1).with_sign(-1).value(0, 0) == q(2, 3));
  CHECK(cyclic_form(3, 1).with_sign(-1).sign_fixed());
}
