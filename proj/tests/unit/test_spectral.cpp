#include <doctest.h>

#include "../oracles.hpp"
#include "hpss/catalog.hpp"
#include "hpss/error.hpp"
#include "hpss/spectral.hpp"

using namespace hpss;

namespace {

// v ∈ (0,1), w ∈ (1,0), u ∈ (1,1), z ∈ (2,0) with ∂̄w = u, ad v = u, ad w = z.
DoubleComplex zigzag() {
  std::vector<std::vector<std::size_t>> dims{{0, 1}, {1, 1}, {1, 0}};
  std::vector<std::vector<Matrix>> vert(3, std::vector<Matrix>(2)), hor(3, std::vector<Matrix>(2));
  for (int p = 0; p < 3; ++p) {
    for (int q = 0; q < 2; ++q) {
      std::size_t src = dims[p][q];
      vert[p][q] = Matrix(q + 1 < 2 ? dims[p][q + 1] : 0, src);
      hor[p][q] = Matrix(p + 1 < 3 ? dims[p + 1][q] : 0, src);
    }
  }
  vert[1][0](0, 0) = 1;
  hor[0][1](0, 0) = 1;
  hor[1][0](0, 0) = 1;
  return DoubleComplex::from_matrices(dims, vert, hor);
}

std::size_t page_dim(const SpectralPage& page, int p, int q) { return page.at(p, q).dim; }

PoissonCandidate candidate(const ComplexifiedAlgebra& alg, const SparseElement& x) {
  return Calculus(alg).check_holomorphic_poisson(x);
}

SparseElement w1w2_plus(const ComplexifiedAlgebra& alg, const Scalar& a, const Scalar& b) {
  auto g = [&](std::size_t i) { return SparseElement::generator(Side::A, alg.n(), i); };
  return a * wedge(g(0), g(1)) + b * wedge(g(1), g(2));
}

}  // namespace

TEST_SUITE("spectral") {
  TEST_CASE("zigzag complex: d2 by chasing") {
    DoubleComplex dc = zigzag();
    CHECK(dc.square_zero());
    PagesResult res = compute_pages(dc, 4);
    CHECK(res.square_zero);
    CHECK(res.dims_consistent);
    const SpectralPage& e1 = res.pages[1];
    CHECK(page_dim(e1, 0, 1) == 1);
    CHECK(page_dim(e1, 2, 0) == 1);
    CHECK(page_dim(e1, 1, 0) == 0);
    CHECK(page_dim(e1, 1, 1) == 0);
    CHECK(e1.d_is_zero());
    const SpectralPage& e2 = res.pages[2];
    REQUIRE(page_dim(e2, 0, 1) == 1);
    REQUIRE(page_dim(e2, 2, 0) == 1);
    // the chase gives −z; the page matrix must agree in the representative bases
    Vector chased = d2_by_chasing(dc, 0, 1, Vector{1});
    CHECK(chased == Vector{-1});
    CHECK(!is_zero(e2.at(0, 1).d.column(0)));
    CHECK(d2_chasing_agrees(dc, e2));
    CHECK(!d2_chasing_vanishes(dc, e2));
    for (int p = 0; p <= 2; ++p)
      for (int q = 0; q <= 1; ++q) CHECK(page_dim(res.pages[3], p, q) == 0);
    CHECK(total_cohomology(dc) == std::vector<std::size_t>{0, 0, 0, 0});
    CHECK(degeneracy_page(res) == 3);
    CHECK(einfty_consistent(dc, res.pages[static_cast<std::size_t>(stable_page(dc))]));
  }

  TEST_CASE("chasing refuses non-cycles") {
    DoubleComplex dc = zigzag();
    CHECK_THROWS_AS(d2_by_chasing(dc, 1, 0, Vector{1}), Error);
  }

  TEST_CASE("from_matrices validates shapes") {
    std::vector<std::vector<std::size_t>> dims{{1}};
    std::vector<std::vector<Matrix>> ok{{Matrix(0, 1)}}, bad{{Matrix(2, 1)}};
    CHECK_NOTHROW(DoubleComplex::from_matrices(dims, ok, ok));
    CHECK_THROWS_AS(DoubleComplex::from_matrices(dims, bad, ok), Error);
  }

  TEST_CASE("non square-zero raw complex is detected") {
    // a → b → c vertically with both maps the identity
    std::vector<std::vector<std::size_t>> dims{{1, 1, 1}};
    std::vector<std::vector<Matrix>> vert{{Matrix::identity(1), Matrix::identity(1), Matrix(0, 1)}};
    std::vector<std::vector<Matrix>> hor{{Matrix(0, 1), Matrix(0, 1), Matrix(0, 1)}};
    try {
      DoubleComplex::from_matrices(dims, vert, hor);
      FAIL("expected SquareZeroViolation");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::SquareZeroViolation);
    }
  }

  TEST_CASE("torus pages") {
    ComplexifiedAlgebra alg = complexify(torus(2).spec);
    DoubleComplex dc = DoubleComplex::build(alg, candidate(alg, standard_lambda(alg)));
    CHECK(dc.horizontal_is_zero());
    PagesResult res = compute_pages(dc, 5);
    std::size_t grid[3][3] = {{1, 2, 1}, {2, 4, 2}, {1, 2, 1}};
    for (int p = 0; p <= 2; ++p)
      for (int q = 0; q <= 2; ++q) CHECK(page_dim(res.pages[1], p, q) == grid[q][p]);
    CHECK(degeneracy_page(res) == 1);
    CHECK(total_cohomology(dc) == std::vector<std::size_t>{1, 4, 6, 4, 1});
  }

  TEST_CASE("iwasawa E1 and total cohomology") {
    ComplexifiedAlgebra alg = complexify(iwasawa().spec);
    const std::size_t h[4] = {1, 2, 2, 1};
    std::vector<std::size_t> expected(7, 0);
    for (std::size_t p = 0; p <= 3; ++p)
      for (std::size_t q = 0; q <= 3; ++q) expected[p + q] += h[q] * oracle::binom(3, p);
    CHECK(expected == std::vector<std::size_t>{1, 5, 11, 14, 11, 5, 1});
    DoubleComplex dc = DoubleComplex::build(alg, candidate(alg, w1w2_plus(alg, 1, 0)));
    PagesResult res = compute_pages(dc, 7);
    for (int p = 0; p <= 3; ++p) {
      for (int q = 0; q <= 3; ++q) {
        CHECK(page_dim(res.pages[1], p, q) == h[q] * oracle::binom(3, static_cast<std::size_t>(p)));
      }
    }
    CHECK(total_cohomology(dc) == expected);
    CHECK(degeneracy_page(res) == 1);
  }

  TEST_CASE("E2 factorises on the parallelizable Iwasawa algebra") {
    // E2^{p,q} = H^q(g^{*(0,1)}) ⊗ H^p(ad_Λ on ∧^p g^{1,0})
    ComplexifiedAlgebra alg = complexify(iwasawa().spec);
    const std::size_t h[4] = {1, 2, 2, 1};
    for (auto [a, b] : std::vector<std::pair<int, int>>{{1, 0}, {0, 1}, {1, 1}, {2, -1}}) {
      DoubleComplex dc = DoubleComplex::build(alg, candidate(alg, w1w2_plus(alg, a, b)));
      PagesResult res = compute_pages(dc, 2);
      for (int p = 0; p <= 3; ++p) {
        std::size_t ker = dc.block_dim(p, 0) - rank(dc.horizontal(p, 0));
        std::size_t im = p > 0 ? rank(dc.horizontal(p - 1, 0)) : 0;
        for (int q = 0; q <= 3; ++q) CHECK(page_dim(res.pages[2], p, q) == h[q] * (ker - im));
      }
    }
  }

  TEST_CASE("frolicher total cohomology matches real Betti numbers") {
    for (const CatalogEntry& e : {kodaira(), iwasawa(), h_times_r(2), h_times_h(1, 1), w_family(1), p_family(1)}) {
      ComplexifiedAlgebra alg = complexify(e.spec);
      DoubleComplex dc = DoubleComplex::frolicher(alg);
      CHECK_MESSAGE(total_cohomology(dc) == oracle::real_betti(e.spec), e.name);
      PagesResult res = compute_pages(dc, stable_page(dc));
      CHECK(einfty_consistent(dc, res.pages.back()));
    }
    CHECK(oracle::real_betti(kodaira().spec) == std::vector<std::size_t>{1, 3, 4, 3, 1});
  }

  TEST_CASE("frolicher degeneracy") {
    ComplexifiedAlgebra kod = complexify(kodaira().spec);
    CHECK(degeneracy_page(DoubleComplex::frolicher(kod)) == 1);
    ComplexifiedAlgebra iw = complexify(iwasawa().spec);
    CHECK(degeneracy_page(DoubleComplex::frolicher(iw)) == 2);
  }

  TEST_CASE("kodaira chain map residuals vanish") {
    ComplexifiedAlgebra alg = complexify(kodaira().spec);
    Calculus calc(alg);
    PoissonCandidate lam = calc.check_holomorphic_poisson(standard_lambda(alg));
    CHECK(chain_map_holds(calc, lam));
    DoubleComplex a = DoubleComplex::build(alg, lam), b = DoubleComplex::frolicher(alg);
    PagesResult ap = compute_pages(a, 1), bp = compute_pages(b, 1);
    PageMap map = page_map(calc, lam, b, bp.pages[1], a, ap.pages[1]);
    CHECK(map.identity_on_p0);
    CHECK(map.commutes);
    for (const Matrix& r : map.residuals) CHECK(r.is_zero());
  }

  TEST_CASE("no differential leaves the p = 0 column when the Frolicher d1 vanishes there") {
    for (const CatalogEntry& e : oracle::degeneration_suite()) {
      ComplexifiedAlgebra alg = complexify(e.spec);
      DoubleComplex b = DoubleComplex::frolicher(alg);
      PagesResult bp = compute_pages(b, 1);
      bool d1_zero = true;
      for (int q = 0; q <= b.q_max(); ++q) d1_zero = d1_zero && bp.pages[1].at(0, q).d.is_zero();
      if (!d1_zero) continue;
      SampleResult s = sample_poisson(alg, 3, 7);
      for (const PoissonCandidate& c : s.accepted) {
        DoubleComplex a = DoubleComplex::build(alg, c);
        PagesResult ap = compute_pages(a, stable_page(a));
        for (std::size_t r = 1; r < ap.pages.size(); ++r)
          for (int q = 0; q <= a.q_max(); ++q) CHECK(ap.pages[r].at(0, q).d.is_zero());
      }
    }
  }

  TEST_CASE("parallel pages equal sequential pages") {
    ComplexifiedAlgebra alg = complexify(w_family(1).spec);
    SampleResult s = sample_poisson(alg, 2, 4);
    DoubleComplex dc = DoubleComplex::build(alg, s.accepted.back());
    PagesResult one = compute_pages(dc, 3, 1), many = compute_pages(dc, 3, 3);
    for (std::size_t r = 0; r < one.pages.size(); ++r) {
      for (std::size_t i = 0; i < one.pages[r].entries.size(); ++i) {
        CHECK(one.pages[r].entries[i].dim == many.pages[r].entries[i].dim);
        CHECK(one.pages[r].entries[i].d == many.pages[r].entries[i].d);
      }
    }
  }

  TEST_CASE("not Poisson") {
    ComplexifiedAlgebra alg = complexify(iwasawa().spec);
    auto g = [&](std::size_t i) { return SparseElement::generator(Side::A, 3, i); };
    try {
      DoubleComplex::build(alg, candidate(alg, wedge(g(0), g(2))));
      FAIL("expected NotPoisson");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::NotPoisson);
    }
  }
}
