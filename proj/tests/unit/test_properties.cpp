// Seeded random checks of the algebraic identities behind the engine.
#include <doctest.h>

#include <random>

#include "../oracles.hpp"
#include "hpss/calculus.hpp"
#include "hpss/catalog.hpp"

using namespace hpss;

namespace {

constexpr int kRounds = 12;

std::vector<CatalogEntry> algebras() {
  std::vector<CatalogEntry> out = oracle::degeneration_suite();
  out.push_back(iwasawa());
  out.push_back(torus(2));
  return out;
}

Scalar sign(int e) { return e % 2 ? Scalar(-1) : Scalar(1); }

int small(std::mt19937_64& rng, int bound) { return static_cast<int>(rng() % static_cast<std::uint64_t>(bound + 1)); }

}  // namespace

TEST_SUITE("properties") {
  TEST_CASE("differentials square to zero and anticommute") {
    std::mt19937_64 rng(101);
    for (const CatalogEntry& e : algebras()) {
      ComplexifiedAlgebra alg = complexify(e.spec);
      Calculus calc(alg);
      const int n = static_cast<int>(alg.n());
      for (int t = 0; t < kRounds; ++t) {
        int p = small(rng, n), q = small(rng, n);
        SparseElement b = oracle::random_element(rng, Side::B, alg.n(), p, q);
        CHECK(calc.dbar(calc.dbar(b)).is_zero());
        CHECK(calc.del(calc.del(b)).is_zero());
        CHECK((calc.del(calc.dbar(b)) + calc.dbar(calc.del(b))).is_zero());
        SparseElement a = oracle::random_element(rng, Side::A, alg.n(), p, q);
        CHECK(calc.dbar(calc.dbar(a)).is_zero());
      }
    }
  }

  TEST_CASE("dbar and del are derivations") {
    std::mt19937_64 rng(102);
    for (const CatalogEntry& e : algebras()) {
      ComplexifiedAlgebra alg = complexify(e.spec);
      Calculus calc(alg);
      for (int t = 0; t < kRounds; ++t) {
        Side side = t % 2 ? Side::A : Side::B;
        SparseElement x = oracle::random_element(rng, side, alg.n(), small(rng, 1), small(rng, 1));
        SparseElement y = oracle::random_element(rng, side, alg.n(), small(rng, 2), small(rng, 1));
        Scalar s = sign(x.degree());
        CHECK(calc.dbar(wedge(x, y)) == wedge(calc.dbar(x), y) + s * wedge(x, calc.dbar(y)));
        if (side == Side::B) CHECK(calc.del(wedge(x, y)) == wedge(calc.del(x), y) + s * wedge(x, calc.del(y)));
      }
    }
  }

  TEST_CASE("schouten bracket: graded antisymmetry, Leibniz, Jacobi") {
    std::mt19937_64 rng(103);
    for (const CatalogEntry& e : algebras()) {
      ComplexifiedAlgebra alg = complexify(e.spec);
      Calculus calc(alg);
      const std::size_t n = alg.n();
      for (int t = 0; t < kRounds; ++t) {
        SparseElement p = oracle::random_element(rng, Side::A, n, 1 + small(rng, 1), 0);
        SparseElement q = oracle::random_element(rng, Side::A, n, small(rng, 2), small(rng, 1));
        SparseElement r = oracle::random_element(rng, Side::A, n, small(rng, 1), small(rng, 1));
        const int k = p.degree(), l = q.degree();
        CHECK(calc.schouten(p, q) == -(sign((k - 1) * (l - 1)) * calc.schouten(q, p)));
        CHECK(calc.schouten(p, wedge(q, r)) ==
              wedge(calc.schouten(p, q), r) + sign((k - 1) * l) * wedge(q, calc.schouten(p, r)));
        SparseElement p2 = oracle::random_element(rng, Side::A, n, 1 + small(rng, 1), 0);
        const int k2 = p2.degree();
        CHECK(calc.schouten(p, calc.schouten(p2, q)) ==
              calc.schouten(calc.schouten(p, p2), q) + sign((k - 1) * (k2 - 1)) * calc.schouten(p2, calc.schouten(p, q)));
      }
    }
  }

  TEST_CASE("dbar is a derivation of the schouten bracket") {
    std::mt19937_64 rng(104);
    for (const CatalogEntry& e : algebras()) {
      ComplexifiedAlgebra alg = complexify(e.spec);
      Calculus calc(alg);
      for (int t = 0; t < kRounds; ++t) {
        SparseElement p = oracle::random_element(rng, Side::A, alg.n(), 1 + small(rng, 1), 0);
        SparseElement q = oracle::random_element(rng, Side::A, alg.n(), 1 + small(rng, 1), 0);
        CHECK(calc.dbar(calc.schouten(p, q)) ==
              calc.schouten(calc.dbar(p), q) + sign(p.degree() - 1) * calc.schouten(p, calc.dbar(q)));
      }
    }
  }

  TEST_CASE("ad of a Poisson bivector squares to zero and anticommutes with dbar") {
    std::mt19937_64 rng(105);
    for (const CatalogEntry& e : algebras()) {
      ComplexifiedAlgebra alg = complexify(e.spec);
      Calculus calc(alg);
      SampleResult s = sample_poisson(alg, 4, 105);
      for (const PoissonCandidate& lam : s.accepted) {
        for (int t = 0; t < 4; ++t) {
          SparseElement x = oracle::random_element(rng, Side::A, alg.n(), small(rng, 2), small(rng, 2));
          CHECK(calc.ad_lambda(lam, calc.ad_lambda(lam, x)).is_zero());
          CHECK((calc.ad_lambda(lam, calc.dbar(x)) + calc.dbar(calc.ad_lambda(lam, x))).is_zero());
        }
      }
    }
  }

  TEST_CASE("phi is multiplicative") {
    std::mt19937_64 rng(106);
    for (const CatalogEntry& e : algebras()) {
      ComplexifiedAlgebra alg = complexify(e.spec);
      Calculus calc(alg);
      SparseElement lam = oracle::random_bivector(rng, alg.n());
      for (int t = 0; t < kRounds; ++t) {
        SparseElement x = oracle::random_element(rng, Side::B, alg.n(), small(rng, 1), small(rng, 1));
        SparseElement y = oracle::random_element(rng, Side::B, alg.n(), small(rng, 1), small(rng, 2));
        CHECK(calc.phi(lam, wedge(x, y)) == wedge(calc.phi(lam, x), calc.phi(lam, y)));
      }
    }
  }
}
