#include "hpss/hpss.h"

#include <cstring>
#include <memory>
#include <optional>
#include <string>

#include "hpss/catalog.hpp"
#include "hpss/error.hpp"
#include "hpss/report.hpp"
#include "hpss/serialize.hpp"

struct hpss_algebra {
  hpss::RealLieAlgebraSpec spec;
  std::shared_ptr<const hpss::ComplexifiedAlgebra> alg;  // empty when the spec is invalid
  std::string invalid_reason;
};

struct hpss_lambda {
  std::shared_ptr<const hpss::ComplexifiedAlgebra> alg;
  hpss::PoissonCandidate candidate;
};

struct hpss_sample {
  std::shared_ptr<const hpss::ComplexifiedAlgebra> alg;
  std::vector<hpss::PoissonCandidate> accepted;
};

namespace {

thread_local std::string last_error;

hpss_status fail(hpss_status status, const std::string& message) {
  last_error = message;
  return status;
}

hpss_status status_of(const hpss::Error& e) {
  switch (e.code()) {
    case hpss::ErrorCode::SchemaError: return HPSS_ERR_SCHEMA;
    case hpss::ErrorCode::ValidationFailure:
    case hpss::ErrorCode::BadJ:
    case hpss::ErrorCode::JacobiFailure:
    case hpss::ErrorCode::NonIntegrable: return HPSS_ERR_VALIDATION;
    case hpss::ErrorCode::NotPoisson: return HPSS_ERR_NOT_POISSON;
    case hpss::ErrorCode::NoneFound: return HPSS_ERR_NOT_FOUND;
    case hpss::ErrorCode::InvalidArgument:
    case hpss::ErrorCode::DegreeMismatch:
    case hpss::ErrorCode::SideMismatch:
    case hpss::ErrorCode::UnsupportedPair:
    case hpss::ErrorCode::NotACycle:
    case hpss::ErrorCode::NotE2Class: return HPSS_ERR_ARGUMENT;
    case hpss::ErrorCode::SquareZeroViolation:
    case hpss::ErrorCode::ChainMapViolation: return HPSS_ERR_INTERNAL;
  }
  return HPSS_ERR_INTERNAL;
}

template <class F>
hpss_status guarded(F&& body) {
  try {
    return body();
  } catch (const hpss::Error& e) {
    return fail(status_of(e), e.what());
  } catch (const std::exception& e) {
    return fail(HPSS_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(HPSS_ERR_INTERNAL, "unknown error");
  }
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

hpss_algebra* make_algebra(hpss::RealLieAlgebraSpec spec) {
  auto* handle = new hpss_algebra{std::move(spec), nullptr, {}};
  try {
    handle->alg = std::make_shared<const hpss::ComplexifiedAlgebra>(hpss::complexify(handle->spec));
  } catch (const hpss::Error& e) {
    handle->invalid_reason = e.what();
  }
  return handle;
}

hpss_status require_valid(const hpss_algebra* alg) {
  if (!alg) return fail(HPSS_ERR_ARGUMENT, "null algebra handle");
  if (!alg->alg) return fail(HPSS_ERR_VALIDATION, alg->invalid_reason);
  return HPSS_OK;
}

hpss_lambda* make_lambda(const std::shared_ptr<const hpss::ComplexifiedAlgebra>& alg, const hpss::SparseElement& x) {
  hpss::Calculus calc(*alg);
  return new hpss_lambda{alg, calc.check_holomorphic_poisson(x)};
}

hpss_status report_for(const hpss_algebra* alg, const hpss_lambda* lambda, int r_max, int jobs,
                       std::optional<hpss::PagesReport>& out) {
  if (hpss_status s = require_valid(alg); s != HPSS_OK) return s;
  if (!lambda) return fail(HPSS_ERR_ARGUMENT, "null lambda handle");
  if (lambda->alg != alg->alg) return fail(HPSS_ERR_ARGUMENT, "lambda belongs to a different algebra");
  if (r_max < 0) r_max = 2 * static_cast<int>(alg->alg->n()) + 1;
  out = hpss::make_report(*alg->alg, lambda->candidate, r_max, jobs < 1 ? 1 : jobs);
  return HPSS_OK;
}

}  // namespace

extern "C" {

const char* hpss_version(void) { return "1.0.0"; }

const char* hpss_last_error(void) { return last_error.c_str(); }

void hpss_string_free(char* s) { std::free(s); }

hpss_status hpss_catalog_emit(const char* name, int n, int m, char** out_json) {
  return guarded([&] {
    if (!name || !out_json) return fail(HPSS_ERR_ARGUMENT, "null argument");
    hpss::CatalogEntry entry = hpss::catalog_entry(name, n, m);
    *out_json = copy_string(hpss::emit_spec(entry.spec));
    return HPSS_OK;
  });
}

hpss_status hpss_algebra_from_json(const char* json, hpss_algebra** out) {
  return guarded([&] {
    if (!json || !out) return fail(HPSS_ERR_ARGUMENT, "null argument");
    *out = make_algebra(hpss::parse_spec(json));
    return HPSS_OK;
  });
}

hpss_status hpss_algebra_from_catalog(const char* name, int n, int m, hpss_algebra** out) {
  return guarded([&] {
    if (!name || !out) return fail(HPSS_ERR_ARGUMENT, "null argument");
    hpss::CatalogEntry entry = hpss::catalog_entry(name, n, m);
    *out = make_algebra(entry.spec);
    return HPSS_OK;
  });
}

void hpss_algebra_free(hpss_algebra* alg) { delete alg; }

hpss_status hpss_algebra_check(const hpss_algebra* alg, char** out_json, int* ok) {
  return guarded([&] {
    if (!alg || !out_json) return fail(HPSS_ERR_ARGUMENT, "null argument");
    hpss::ValidationReport report = hpss::validate(alg->spec);
    *out_json = copy_string(hpss::validation_to_json(alg->spec.name, report).dump(2) + "\n");
    if (ok) *ok = report.ok() ? 1 : 0;
    return HPSS_OK;
  });
}

hpss_status hpss_algebra_complex_dim(const hpss_algebra* alg, int* n) {
  return guarded([&] {
    if (!n) return fail(HPSS_ERR_ARGUMENT, "null argument");
    if (hpss_status s = require_valid(alg); s != HPSS_OK) return s;
    *n = static_cast<int>(alg->alg->n());
    return HPSS_OK;
  });
}

hpss_status hpss_lambda_standard(const hpss_algebra* alg, hpss_lambda** out) {
  return guarded([&] {
    if (!out) return fail(HPSS_ERR_ARGUMENT, "null argument");
    if (hpss_status s = require_valid(alg); s != HPSS_OK) return s;
    *out = make_lambda(alg->alg, hpss::standard_lambda(*alg->alg));
    return HPSS_OK;
  });
}

hpss_status hpss_lambda_zero(const hpss_algebra* alg, hpss_lambda** out) {
  return guarded([&] {
    if (!out) return fail(HPSS_ERR_ARGUMENT, "null argument");
    if (hpss_status s = require_valid(alg); s != HPSS_OK) return s;
    *out = make_lambda(alg->alg, hpss::SparseElement(hpss::Side::A, alg->alg->n(), 2, 0));
    return HPSS_OK;
  });
}

hpss_status hpss_lambda_from_json(const hpss_algebra* alg, const char* json, hpss_lambda** out) {
  return guarded([&] {
    if (!json || !out) return fail(HPSS_ERR_ARGUMENT, "null argument");
    if (hpss_status s = require_valid(alg); s != HPSS_OK) return s;
    hpss::Json doc;
    try {
      doc = hpss::Json::parse(json);
    } catch (const nlohmann::json::parse_error& e) {
      return fail(HPSS_ERR_SCHEMA, std::string("invalid JSON: ") + e.what());
    }
    *out = make_lambda(alg->alg, hpss::element_from_json(doc, hpss::Side::A, alg->alg->n(), 2, 0));
    return HPSS_OK;
  });
}

hpss_status hpss_lambda_to_json(const hpss_lambda* lambda, char** out_json) {
  return guarded([&] {
    if (!lambda || !out_json) return fail(HPSS_ERR_ARGUMENT, "null argument");
    *out_json = copy_string(hpss::element_to_json(lambda->candidate.lambda).dump());
    return HPSS_OK;
  });
}

hpss_status hpss_lambda_flags(const hpss_lambda* lambda, int* holomorphic, int* poisson) {
  if (!lambda) return fail(HPSS_ERR_ARGUMENT, "null lambda handle");
  if (holomorphic) *holomorphic = lambda->candidate.is_holomorphic ? 1 : 0;
  if (poisson) *poisson = lambda->candidate.is_poisson ? 1 : 0;
  return HPSS_OK;
}

void hpss_lambda_free(hpss_lambda* lambda) { delete lambda; }

hpss_status hpss_sample_poisson(const hpss_algebra* alg, size_t count, uint64_t seed, hpss_sample** out) {
  return guarded([&] {
    if (!out) return fail(HPSS_ERR_ARGUMENT, "null argument");
    if (count < 1) return fail(HPSS_ERR_ARGUMENT, "count must be at least 1");
    if (hpss_status s = require_valid(alg); s != HPSS_OK) return s;
    hpss::SampleResult result = hpss::sample_poisson(*alg->alg, count, seed);
    *out = new hpss_sample{alg->alg, std::move(result.accepted)};
    if (result.none_found) return fail(HPSS_ERR_NOT_FOUND, "NoneFound: no random bivector passed the Poisson test");
    return HPSS_OK;
  });
}

size_t hpss_sample_size(const hpss_sample* sample) { return sample ? sample->accepted.size() : 0; }

hpss_status hpss_sample_get(const hpss_sample* sample, size_t index, hpss_lambda** out) {
  return guarded([&] {
    if (!sample || !out) return fail(HPSS_ERR_ARGUMENT, "null argument");
    if (index >= sample->accepted.size()) return fail(HPSS_ERR_ARGUMENT, "sample index out of range");
    *out = new hpss_lambda{sample->alg, sample->accepted[index]};
    return HPSS_OK;
  });
}

void hpss_sample_free(hpss_sample* sample) { delete sample; }

hpss_status hpss_pages_report(const hpss_algebra* alg, const hpss_lambda* lambda, int r_max, int jobs,
                              char** out_json) {
  return guarded([&] {
    if (!out_json) return fail(HPSS_ERR_ARGUMENT, "null argument");
    std::optional<hpss::PagesReport> report;
    if (hpss_status s = report_for(alg, lambda, r_max, jobs, report); s != HPSS_OK) return s;
    *out_json = copy_string(hpss::report_to_json(*report).dump(2) + "\n");
    const hpss::ReportChecks& c = report->checks;
    if (!c.einfty_consistency || !c.square_zero || !c.chain_map) {
      return fail(HPSS_ERR_INTERNAL, "engine self-check failed");
    }
    return HPSS_OK;
  });
}

hpss_status hpss_cohomology_report(const hpss_algebra* alg, const hpss_lambda* lambda, int jobs, char** out_json) {
  return guarded([&] {
    if (!out_json) return fail(HPSS_ERR_ARGUMENT, "null argument");
    std::optional<hpss::PagesReport> report;
    if (hpss_status s = report_for(alg, lambda, -1, jobs, report); s != HPSS_OK) return s;
    *out_json = copy_string(hpss::cohomology_to_json(*report).dump(2) + "\n");
    if (!report->checks.einfty_consistency) return fail(HPSS_ERR_INTERNAL, "E-infinity inconsistent");
    return HPSS_OK;
  });
}

hpss_status hpss_degeneracy_report(const hpss_algebra* alg, const hpss_lambda* lambda, int jobs, char** out_json) {
  return guarded([&] {
    if (!out_json) return fail(HPSS_ERR_ARGUMENT, "null argument");
    std::optional<hpss::PagesReport> report;
    if (hpss_status s = report_for(alg, lambda, -1, jobs, report); s != HPSS_OK) return s;
    *out_json = copy_string(hpss::degeneracy_to_json(*report).dump(2) + "\n");
    if (!report->checks.einfty_consistency) return fail(HPSS_ERR_INTERNAL, "E-infinity inconsistent");
    return HPSS_OK;
  });
}

hpss_status hpss_degeneracy_page(const hpss_algebra* alg, const hpss_lambda* lambda, int jobs, int* page) {
  return guarded([&] {
    if (!page) return fail(HPSS_ERR_ARGUMENT, "null argument");
    if (hpss_status s = require_valid(alg); s != HPSS_OK) return s;
    if (!lambda || lambda->alg != alg->alg) return fail(HPSS_ERR_ARGUMENT, "lambda does not match the algebra");
    hpss::DoubleComplex dc = hpss::DoubleComplex::build(*alg->alg, lambda->candidate);
    *page = hpss::degeneracy_page(dc, jobs < 1 ? 1 : jobs);
    return HPSS_OK;
  });
}

hpss_status hpss_render_table(const char* report_json, char** out_text) {
  return guarded([&] {
    if (!report_json || !out_text) return fail(HPSS_ERR_ARGUMENT, "null argument");
    hpss::Json doc;
    try {
      doc = hpss::Json::parse(report_json);
    } catch (const nlohmann::json::parse_error& e) {
      return fail(HPSS_ERR_SCHEMA, std::string("invalid JSON: ") + e.what());
    }
    *out_text = copy_string(hpss::render_table(doc));
    return HPSS_OK;
  });
}

}  // extern "C"
