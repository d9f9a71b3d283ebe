#include <doctest.h>

#include "../oracles.hpp"
#include "hpss/calculus.hpp"
#include "hpss/catalog.hpp"
#include "hpss/error.hpp"

using namespace hpss;

namespace {

SparseElement gen(Side s, std::size_t n, std::size_t g, const Scalar& c = 1) {
  return SparseElement::generator(s, n, g, c);
}

}  // namespace

TEST_SUITE("calculus") {
  TEST_CASE("kodaira dbar on generators") {
    ComplexifiedAlgebra alg = complexify(kodaira().spec);
    Calculus calc(alg);
    Scalar half_i(0, mpq_class(1, 2));
    // T = f0, W = f1, ω̄^T = generator 2; canonical order puts the vector first
    CHECK(calc.dbar(gen(Side::A, 2, 0)) == half_i * wedge(gen(Side::A, 2, 1), gen(Side::A, 2, 2)));
    CHECK(calc.dbar(gen(Side::A, 2, 1)).is_zero());
    CHECK(calc.dbar(gen(Side::A, 2, 2)).is_zero());
    CHECK(calc.dbar(gen(Side::A, 2, 3)).is_zero());
  }

  TEST_CASE("iwasawa del of the dual basis") {
    ComplexifiedAlgebra alg = complexify(iwasawa().spec);
    Calculus calc(alg);
    CHECK(calc.del(gen(Side::B, 3, 1)) == -wedge(gen(Side::B, 3, 0), gen(Side::B, 3, 2)));
    CHECK(calc.del(gen(Side::B, 3, 0)).is_zero());
    CHECK(calc.dbar(gen(Side::B, 3, 1)).is_zero());
    // conjugate: ∂̄ω̄² = −ω̄¹∧ω̄³
    CHECK(calc.dbar(gen(Side::B, 3, 4)) == -wedge(gen(Side::B, 3, 3), gen(Side::B, 3, 5)));
    CHECK_THROWS_AS(calc.del(gen(Side::A, 3, 0)), Error);
  }

  TEST_CASE("iwasawa schouten self-bracket of W1∧W3") {
    ComplexifiedAlgebra alg = complexify(iwasawa().spec);
    Calculus calc(alg);
    SparseElement w13 = wedge(gen(Side::A, 3, 0), gen(Side::A, 3, 2));
    SparseElement w123 = wedge(wedge(gen(Side::A, 3, 0), gen(Side::A, 3, 1)), gen(Side::A, 3, 2));
    SparseElement sq = calc.schouten(w13, w13);
    CHECK(sq == Scalar(-2) * w123);
    CHECK(sq == oracle::schouten_koszul(alg, w13, w13));

    PoissonCandidate bad = calc.check_holomorphic_poisson(w13);
    CHECK(bad.is_holomorphic);
    CHECK(!bad.is_poisson);
    CHECK_THROWS_AS(calc.ad_lambda(bad, gen(Side::A, 3, 3)), Error);
    CHECK_NOTHROW(calc.ad_lambda(bad, gen(Side::A, 3, 3), true));

    PoissonCandidate good = calc.check_holomorphic_poisson(wedge(gen(Side::A, 3, 0), gen(Side::A, 3, 1)));
    CHECK(good.is_holomorphic);
    CHECK(good.is_poisson);
  }

  TEST_CASE("schouten matches the Koszul formula on polyvectors") {
    std::mt19937_64 rng(17);
    for (const CatalogEntry& e : {iwasawa(), kodaira(), h_times_h(1, 1), w_family(1)}) {
      ComplexifiedAlgebra alg = complexify(e.spec);
      Calculus calc(alg);
      for (int t = 0; t < 25; ++t) {
        int p1 = 1 + static_cast<int>(rng() % 2), p2 = 1 + static_cast<int>(rng() % 2);
        SparseElement x = oracle::random_element(rng, Side::A, alg.n(), p1, 0);
        SparseElement y = oracle::random_element(rng, Side::A, alg.n(), p2, 0);
        CHECK(calc.schouten(x, y) == oracle::schouten_koszul(alg, x, y));
      }
    }
  }

  TEST_CASE("schouten on forms is the action on the dual") {
    // [X, ω̄](Z̄) = −ω̄([X, Z̄]) for invariant X and ω̄
    for (const CatalogEntry& e : {kodaira(), h_times_r(2), p_family(1)}) {
      ComplexifiedAlgebra alg = complexify(e.spec);
      Calculus calc(alg);
      const std::size_t n = alg.n();
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t j = 0; j < n; ++j) {
          Vector got = oracle::as_antiform(calc.schouten(gen(Side::A, n, a), gen(Side::A, n, n + j)));
          for (std::size_t k = 0; k < n; ++k) {
            Vector br = alg.bracket(alg.basis_vector(a), alg.basis_vector(n + k));
            CHECK(got[k] == -br[n + j]);
          }
        }
      }
    }
  }

  TEST_CASE("unsupported pair") {
    ComplexifiedAlgebra alg = complexify(kodaira().spec);
    Calculus calc(alg);
    SparseElement a = wedge(gen(Side::A, 2, 0), gen(Side::A, 2, 2));
    try {
      calc.schouten(a, a);
      FAIL("expected UnsupportedPair");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::UnsupportedPair);
    }
  }

  TEST_CASE("zero and standard bivectors are holomorphic Poisson") {
    for (const std::string& name : catalog_names()) {
      ComplexifiedAlgebra alg = complexify(catalog_entry(name, 1, 1).spec);
      Calculus calc(alg);
      PoissonCandidate zero = calc.check_holomorphic_poisson(SparseElement(Side::A, alg.n(), 2, 0));
      CHECK(zero.is_holomorphic);
      CHECK(zero.is_poisson);
      PoissonCandidate st = calc.check_holomorphic_poisson(standard_lambda(alg));
      CHECK_MESSAGE(st.is_poisson, name);
    }
  }

  TEST_CASE("kodaira phi") {
    ComplexifiedAlgebra alg = complexify(kodaira().spec);
    Calculus calc(alg);
    SparseElement lambda = standard_lambda(alg);
    CHECK(calc.phi(lambda, gen(Side::B, 2, 0)) == gen(Side::A, 2, 1));
    CHECK(calc.phi(lambda, gen(Side::B, 2, 2)) == gen(Side::A, 2, 2));
    CHECK(calc.phi(lambda, SparseElement::scalar(Side::B, 2, 3)) == SparseElement::scalar(Side::A, 2, 3));
  }

  TEST_CASE("non-integrable constants are refused") {
    // [f0, f1] = f2 puts a (0,1) vector in the bracket of two (1,0) vectors
    StructureConstants sc(4);
    sc(0, 1) = Vector{0, 0, 1, 0};
    sc(1, 0) = Vector{0, 0, -1, 0};
    sc(2, 3) = Vector{1, 0, 0, 0};
    sc(3, 2) = Vector{-1, 0, 0, 0};
    ComplexifiedAlgebra alg("bad", {"T1", "T2"}, sc, {false, false});
    try {
      Calculus calc(alg);
      FAIL("expected NonIntegrable");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::NonIntegrable);
    }
  }
}
