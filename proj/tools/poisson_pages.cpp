#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include "hpss/hpss.h"

namespace {

using Json = nlohmann::ordered_json;

int exit_code(hpss_status s) {
  switch (s) {
    case HPSS_OK: return 0;
    case HPSS_ERR_ARGUMENT: return 1;
    case HPSS_ERR_VALIDATION: return 2;
    case HPSS_ERR_SCHEMA: return 3;
    case HPSS_ERR_NOT_POISSON: return 5;
    case HPSS_ERR_NOT_FOUND: return 0;
    case HPSS_ERR_INTERNAL: break;
  }
  return 4;
}

struct Failure {
  hpss_status status;
};

void check(hpss_status s) {
  if (s != HPSS_OK) {
    std::cerr << "poisson_pages: " << hpss_last_error() << "\n";
    throw Failure{s};
  }
}

std::string take(char* s) {
  std::string out(s ? s : "");
  hpss_string_free(s);
  return out;
}

std::string read_all(std::istream& in) {
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

std::string read_file(const std::string& path) {
  if (path == "-") return read_all(std::cin);
  std::ifstream in(path);
  if (!in) {
    std::cerr << "poisson_pages: cannot open " << path << "\n";
    throw Failure{HPSS_ERR_ARGUMENT};
  }
  return read_all(in);
}

struct AlgebraDeleter {
  void operator()(hpss_algebra* a) const { hpss_algebra_free(a); }
};
struct LambdaDeleter {
  void operator()(hpss_lambda* l) const { hpss_lambda_free(l); }
};
struct SampleDeleter {
  void operator()(hpss_sample* s) const { hpss_sample_free(s); }
};
using AlgebraPtr = std::unique_ptr<hpss_algebra, AlgebraDeleter>;
using LambdaPtr = std::unique_ptr<hpss_lambda, LambdaDeleter>;
using SamplePtr = std::unique_ptr<hpss_sample, SampleDeleter>;

struct Options {
  std::string catalog;
  std::string spec;
  int n = 1;
  int m = 1;
  std::string lambda = "standard";
  std::optional<std::uint64_t> seed;
  std::size_t count = 20;
  int r_max = -1;
  std::string out;
  std::string format = "json";
  int jobs = 1;
};

AlgebraPtr load_algebra(const Options& o) {
  hpss_algebra* raw = nullptr;
  if (!o.catalog.empty()) {
    check(hpss_algebra_from_catalog(o.catalog.c_str(), o.n, o.m, &raw));
  } else {
    std::string text = read_file(o.spec.empty() ? "-" : o.spec);
    check(hpss_algebra_from_json(text.c_str(), &raw));
  }
  return AlgebraPtr(raw);
}

std::uint64_t seed_of(const Options& o) {
  if (o.seed) return *o.seed;
  if (const char* env = std::getenv("POISSON_PAGES_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      std::cerr << "poisson_pages: POISSON_PAGES_SEED is not an integer\n";
      throw Failure{HPSS_ERR_ARGUMENT};
    }
  }
  return 0;
}

std::vector<LambdaPtr> load_lambdas(const Options& o, const hpss_algebra* alg) {
  std::vector<LambdaPtr> out;
  hpss_lambda* raw = nullptr;
  if (o.lambda == "standard") {
    check(hpss_lambda_standard(alg, &raw));
    out.emplace_back(raw);
  } else if (o.lambda == "zero") {
    check(hpss_lambda_zero(alg, &raw));
    out.emplace_back(raw);
  } else if (o.lambda == "sample") {
    hpss_sample* s = nullptr;
    hpss_status st = hpss_sample_poisson(alg, o.count, seed_of(o), &s);
    SamplePtr sample(s);
    if (st == HPSS_ERR_NOT_FOUND) {
      std::cerr << "poisson_pages: " << hpss_last_error() << "\n";
    } else {
      check(st);
    }
    for (std::size_t i = 0; i < hpss_sample_size(sample.get()); ++i) {
      check(hpss_sample_get(sample.get(), i, &raw));
      out.emplace_back(raw);
    }
  } else {
    std::string text = read_file(o.lambda);
    check(hpss_lambda_from_json(alg, text.c_str(), &raw));
    out.emplace_back(raw);
  }
  return out;
}

void write_output(const Options& o, const std::string& json_text) {
  std::string text = json_text;
  if (o.format == "table") {
    char* table = nullptr;
    check(hpss_render_table(json_text.c_str(), &table));
    text = take(table);
  }
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.out);
  if (!f) {
    std::cerr << "poisson_pages: cannot write " << o.out << "\n";
    throw Failure{HPSS_ERR_ARGUMENT};
  }
  f << text;
}

int run_check(const Options& o) {
  AlgebraPtr alg = load_algebra(o);
  char* json = nullptr;
  int ok = 0;
  check(hpss_algebra_check(alg.get(), &json, &ok));
  std::string text = take(json);
  Options plain = o;
  plain.format = "json";
  write_output(plain, text);
  return ok ? 0 : 2;
}

enum class Kind { Pages, Cohomology, Degeneracy };

int run_report(const Options& o, Kind kind) {
  AlgebraPtr alg = load_algebra(o);
  int n = 0;
  check(hpss_algebra_complex_dim(alg.get(), &n));
  std::vector<LambdaPtr> lambdas = load_lambdas(o, alg.get());

  hpss_status worst = HPSS_OK;
  std::vector<std::string> reports;
  for (const LambdaPtr& lam : lambdas) {
    char* json = nullptr;
    hpss_status st = HPSS_OK;
    switch (kind) {
      case Kind::Pages: st = hpss_pages_report(alg.get(), lam.get(), o.r_max < 0 ? 2 * n + 1 : o.r_max, o.jobs, &json); break;
      case Kind::Cohomology: st = hpss_cohomology_report(alg.get(), lam.get(), o.jobs, &json); break;
      case Kind::Degeneracy: st = hpss_degeneracy_report(alg.get(), lam.get(), o.jobs, &json); break;
    }
    if (st != HPSS_OK && !json) check(st);
    if (st != HPSS_OK) {
      std::cerr << "poisson_pages: " << hpss_last_error() << "\n";
      worst = st;
    }
    reports.push_back(take(json));
  }

  if (o.lambda == "sample") {
    Json arr = Json::array();
    for (const std::string& r : reports) arr.push_back(Json::parse(r));
    write_output(o, arr.dump(2) + "\n");
  } else {
    write_output(o, reports.front());
  }
  return exit_code(worst);
}

int run_emit(const std::string& name, const Options& o) {
  char* json = nullptr;
  check(hpss_catalog_emit(name.c_str(), o.n, o.m, &json));
  Options plain = o;
  plain.format = "json";
  write_output(plain, take(json));
  return 0;
}

void add_algebra_flags(CLI::App* cmd, Options& o) {
  auto* cat = cmd->add_option("--catalog", o.catalog, "Catalog algebra name");
  auto* spec = cmd->add_option("--spec", o.spec, "Algebra spec JSON file ('-' for stdin, the default)");
  cat->excludes(spec);
  cmd->add_option("--n", o.n, "First family parameter")->check(CLI::PositiveNumber);
  cmd->add_option("--m", o.m, "Second family parameter")->check(CLI::PositiveNumber);
  cmd->add_option("--out", o.out, "Write output to this file");
  cmd->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "table"}));
}

void add_lambda_flags(CLI::App* cmd, Options& o) {
  cmd->add_option("--lambda", o.lambda, "standard, zero, sample or a bivector JSON file");
  cmd->add_option("--seed", o.seed, "Sampler seed (falls back to POISSON_PAGES_SEED)");
  cmd->add_option("--count", o.count, "Number of sampled bivectors")->check(CLI::PositiveNumber);
  cmd->add_option("--jobs", o.jobs, "Worker threads per page")->check(CLI::PositiveNumber);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Holomorphic Poisson spectral sequences of nilmanifolds"};
  app.require_subcommand(1);
  Options o;
  std::string emit_name;

  CLI::App* catalog = app.add_subcommand("catalog", "Catalog algebras");
  catalog->require_subcommand(1);
  CLI::App* emit = catalog->add_subcommand("emit", "Write a catalog algebra spec");
  emit->add_option("name", emit_name, "kodaira, iwasawa, torus, h_r, h_h, w or p")->required();
  emit->add_option("--n", o.n, "First family parameter")->check(CLI::PositiveNumber);
  emit->add_option("--m", o.m, "Second family parameter")->check(CLI::PositiveNumber);
  emit->add_option("--out", o.out, "Write output to this file");

  CLI::App* check_cmd = app.add_subcommand("check", "Validate an algebra");
  add_algebra_flags(check_cmd, o);

  CLI::App* pages = app.add_subcommand("pages", "Compute spectral sequence pages");
  add_algebra_flags(pages, o);
  add_lambda_flags(pages, o);
  pages->add_option("--r-max", o.r_max, "Last page to report (default 2n+1)")->check(CLI::NonNegativeNumber);

  CLI::App* cohomology = app.add_subcommand("cohomology", "Total Poisson cohomology");
  add_algebra_flags(cohomology, o);
  add_lambda_flags(cohomology, o);

  CLI::App* degeneracy = app.add_subcommand("degeneracy", "Degeneracy page");
  add_algebra_flags(degeneracy, o);
  add_lambda_flags(degeneracy, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (emit->parsed()) return run_emit(emit_name, o);
    if (check_cmd->parsed()) return run_check(o);
    if (pages->parsed()) return run_report(o, Kind::Pages);
    if (cohomology->parsed()) return run_report(o, Kind::Cohomology);
    if (degeneracy->parsed()) return run_report(o, Kind::Degeneracy);
  } catch (const Failure& f) {
    return exit_code(f.status) == 0 ? 4 : exit_code(f.status);
  } catch (const std::exception& e) {
    std::cerr << "poisson_pages: " << e.what() << "\n";
    return 4;
  }
  return 1;
}
