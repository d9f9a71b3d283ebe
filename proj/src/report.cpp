#include "hpss/report.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include "hpss/error.hpp"

namespace hpss {

PagesReport make_report(const ComplexifiedAlgebra& alg, const PoissonCandidate& lambda, int r_max, int jobs) {
  DoubleComplex dc = DoubleComplex::build(alg, lambda);
  PagesReport report{alg.name(), lambda.lambda, r_max, {}, 0, {}, {}};
  const int stable = stable_page(dc);
  report.pages = compute_pages(dc, std::max(r_max, stable), jobs);
  report.degeneracy_page = degeneracy_page(report.pages);
  report.total_cohomology = total_cohomology(dc);
  report.checks.square_zero = dc.square_zero() && report.pages.square_zero && report.pages.dims_consistent;
  report.checks.einfty_consistency =
      einfty_consistent(dc, report.pages.pages[static_cast<std::size_t>(stable)]);

  Calculus calc(alg);
  try {
    bool chain = chain_map_holds(calc, lambda);
    DoubleComplex b_dc = DoubleComplex::frolicher(alg);
    PagesResult b_pages = compute_pages(b_dc, 1, jobs);
    PageMap map = page_map(calc, lambda, b_dc, b_pages.pages[1], dc, report.pages.pages[1]);
    report.checks.chain_map = chain && map.commutes && map.identity_on_p0;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::ChainMapViolation) throw;
    report.checks.chain_map = false;
  }
  return report;
}

Json validation_to_json(const std::string& name, const ValidationReport& r) {
  Json j = Json::object();
  j["name"] = name;
  j["ok"] = r.ok();
  j["antisymmetric"] = r.antisymmetric;
  j["jacobi"] = r.jacobi;
  j["j_squared_minus_identity"] = r.j_squared_minus_identity;
  j["integrable"] = r.integrable;
  j["abelian_j"] = r.abelian_j;
  j["parallelizable"] = r.parallelizable;
  j["nilpotent"] = r.nilpotent;
  j["nil_step"] = r.nil_step;
  j["center_dim"] = r.center_dim;
  j["center_j_invariant"] = r.center_j_invariant;
  j["complex_presentation_consistent"] = r.complex_presentation_consistent;
  j["failures"] = r.failures;
  return j;
}

namespace {

Json header(const PagesReport& report) {
  Json j = Json::object();
  j["algebra"] = report.algebra;
  j["lambda"] = element_to_json(report.lambda);
  return j;
}

}  // namespace

Json report_to_json(const PagesReport& report) {
  Json j = header(report);
  Json pages = Json::array();
  for (const SpectralPage& page : report.pages.pages) {
    if (page.r > report.r_max) break;
    Json entries = Json::array();
    Json nonzero = Json::array();
    for (const PageEntry& e : page.entries) {
      entries.push_back(Json{{"p", e.p}, {"q", e.q}, {"dim", e.dim}});
      std::size_t rk = rank(e.d);
      if (rk > 0) nonzero.push_back(Json{{"p", e.p}, {"q", e.q}, {"rank", rk}});
    }
    pages.push_back(Json{{"r", page.r}, {"entries", std::move(entries)}, {"d_nonzero", std::move(nonzero)}});
  }
  j["pages"] = std::move(pages);
  j["degeneracy_page"] = report.degeneracy_page;
  j["total_cohomology"] = report.total_cohomology;
  j["checks"] = Json{{"square_zero", report.checks.square_zero},
                     {"chain_map", report.checks.chain_map},
                     {"einfty_consistency", report.checks.einfty_consistency}};
  return j;
}

Json cohomology_to_json(const PagesReport& report) {
  Json j = header(report);
  j["total_cohomology"] = report.total_cohomology;
  j["checks"] = Json{{"einfty_consistency", report.checks.einfty_consistency}};
  return j;
}

Json degeneracy_to_json(const PagesReport& report) {
  Json j = header(report);
  j["degeneracy_page"] = report.degeneracy_page;
  return j;
}

std::string render_table(const Json& report) {
  if (report.is_array()) {
    std::string out;
    for (const Json& r : report) out += render_table(r);
    return out;
  }
  std::ostringstream os;
  os << "algebra " << report.value("algebra", std::string("?")) << "\n";
  if (!report.contains("pages")) {
    if (report.contains("total_cohomology")) os << "total cohomology " << report["total_cohomology"].dump() << "\n";
    if (report.contains("degeneracy_page")) os << "degeneracy page " << report["degeneracy_page"].dump() << "\n";
    return os.str();
  }
  for (const Json& page : report.at("pages")) {
    int p_max = 0, q_max = 0;
    for (const Json& e : page.at("entries")) {
      p_max = std::max(p_max, e.at("p").get<int>());
      q_max = std::max(q_max, e.at("q").get<int>());
    }
    std::vector<std::vector<std::size_t>> grid(static_cast<std::size_t>(p_max + 1),
                                               std::vector<std::size_t>(static_cast<std::size_t>(q_max + 1), 0));
    for (const Json& e : page.at("entries")) {
      grid[e.at("p").get<std::size_t>()][e.at("q").get<std::size_t>()] = e.at("dim").get<std::size_t>();
    }
    os << "E_" << page.at("r").get<int>() << "\n";
    for (int q = q_max; q >= 0; --q) {
      os << "q=" << std::setw(2) << std::left << q << "|";
      for (int p = 0; p <= p_max; ++p) os << std::setw(5) << std::right << grid[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)];
      os << "\n";
    }
    os << "    +";
    for (int p = 0; p <= p_max; ++p) os << "-----";
    os << "\n     ";
    for (int p = 0; p <= p_max; ++p) os << std::setw(5) << std::right << ("p=" + std::to_string(p));
    os << "\n";
  }
  if (report.contains("degeneracy_page")) os << "degeneracy page " << report["degeneracy_page"].dump() << "\n";
  if (report.contains("total_cohomology")) os << "total cohomology " << report["total_cohomology"].dump() << "\n";
  return os.str();
}

}  // namespace hpss
