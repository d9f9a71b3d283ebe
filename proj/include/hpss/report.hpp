#pragma once

#include <string>
#include <vector>

#include "hpss/algebra.hpp"
#include "hpss/calculus.hpp"
#include "hpss/serialize.hpp"
#include "hpss/spectral.hpp"

namespace hpss {

struct ReportChecks {
  bool square_zero = false;
  bool chain_map = false;
  bool einfty_consistency = false;
};

struct PagesReport {
  std::string algebra;
  SparseElement lambda;
  int r_max = 0;
  PagesResult pages;  // r = 0..max(r_max, stable page)
  int degeneracy_page = 0;
  std::vector<std::size_t> total_cohomology;
  ReportChecks checks;
};

/// Builds the Poisson complex, its pages up to r_max and all self-checks. Throws NotPoisson.
PagesReport make_report(const ComplexifiedAlgebra& alg, const PoissonCandidate& lambda, int r_max, int jobs = 1);

Json validation_to_json(const std::string& name, const ValidationReport& report);
Json report_to_json(const PagesReport& report);
Json cohomology_to_json(const PagesReport& report);
Json degeneracy_to_json(const PagesReport& report);

/// One grid per page: rows q descending, columns p ascending. Accepts a report or an array of them.
std::string render_table(const Json& report);

}  // namespace hpss
