#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hpss/algebra.hpp"
#include "hpss/calculus.hpp"

namespace hpss {

struct ExpectedFlags {
  bool abelian_j = false;
  bool parallelizable = false;
  int nil_step = 0;
  int center_dim = 0;
  bool hypotheses_hold = false;
};

struct CatalogEntry {
  std::string name;
  int n = 0;
  int m = 0;
  RealLieAlgebraSpec spec;
  ExpectedFlags expected;
};

CatalogEntry kodaira();
CatalogEntry h_times_r(int n);
CatalogEntry h_times_h(int n, int m);
CatalogEntry w_family(int n);
CatalogEntry p_family(int n);
CatalogEntry iwasawa();
CatalogEntry torus(int n);

/// Names: kodaira, iwasawa, torus, h_r, h_h, w, p. Throws InvalidArgument for unknown names.
CatalogEntry catalog_entry(const std::string& name, int n = 1, int m = 1);
const std::vector<std::string>& catalog_names();

/// True when validate() reproduces every expected flag.
bool matches_expected(const CatalogEntry& entry, const ValidationReport& report);

/// W∧T for two-step abelian algebras with centre and complement, otherwise f_0∧f_1 (zero when n < 2).
SparseElement standard_lambda(const ComplexifiedAlgebra& alg);

struct SampleResult {
  std::vector<PoissonCandidate> accepted;  // distinct, in acceptance order
  std::vector<SparseElement> rejected;     // every random draw that failed
  std::size_t trials = 0;
  bool budget_exhausted = false;  // fewer than `count` new bivectors were accepted
  bool none_found = false;        // no random draw added a new bivector
};

/// Rejection sampler over (2,0)-bivectors with coefficients a+bi, a,b ∈ {−2..2}.
/// Λ = 0 and, when it applies, the standard W∧T are always listed first; then up to
/// `count` further distinct bivectors.
SampleResult sample_poisson(const ComplexifiedAlgebra& alg, std::size_t count, std::uint64_t seed,
                            std::size_t max_trials = 0);

}  // namespace hpss
