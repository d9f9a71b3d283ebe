#include "hpss/catalog.hpp"

#include <random>

#include "hpss/error.hpp"

namespace hpss {

namespace {

class SpecBuilder {
 public:
  SpecBuilder(std::string name, std::vector<std::string> basis) {
    spec_.name = std::move(name);
    spec_.dim = basis.size();
    spec_.basis = std::move(basis);
    spec_.J.assign(spec_.dim * spec_.dim, mpq_class(0));
  }

  std::size_t index(const std::string& label) const {
    for (std::size_t i = 0; i < spec_.basis.size(); ++i)
      if (spec_.basis[i] == label) return i;
    throw Error(ErrorCode::InvalidArgument, "unknown basis label " + label);
  }

  /// [a, b] = c * target
  SpecBuilder& bracket(const std::string& a, const std::string& b, const mpq_class& c, const std::string& target) {
    spec_.brackets.push_back({index(a), index(b), {{index(target), Scalar(c)}}});
    return *this;
  }

  /// J(a) = sign * b, together with J(b) = −sign * a.
  SpecBuilder& j_pair(const std::string& a, const std::string& b, int sign = 1) {
    const std::size_t ia = index(a), ib = index(b), d = spec_.dim;
    spec_.J[ib * d + ia] = sign;
    spec_.J[ia * d + ib] = -sign;
    return *this;
  }

  RealLieAlgebraSpec build() const { return spec_; }

 private:
  RealLieAlgebraSpec spec_;
};

ExpectedFlags two_step_abelian() { return {true, false, 2, 2, true}; }

std::string indexed(const std::string& stem, int k) { return stem + std::to_string(k); }

void require_positive(int n, const char* what) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, std::string(what) + " must be at least 1");
}

}  // namespace

CatalogEntry kodaira() {
  SpecBuilder b("kodaira", {"X", "Y", "Z1", "Z2"});
  b.bracket("X", "Y", 1, "Z1").j_pair("X", "Y").j_pair("Z1", "Z2");
  return {"kodaira", 0, 0, b.build(), two_step_abelian()};
}

CatalogEntry h_times_r(int n) {
  require_positive(n, "n");
  std::vector<std::string> basis;
  for (int k = 1; k <= n; ++k) {
    basis.push_back(indexed("X", k));
    basis.push_back(indexed("Y", k));
  }
  basis.insert(basis.end(), {"Z1", "Z2"});
  SpecBuilder b("h_r(" + std::to_string(n) + ")", basis);
  for (int k = 1; k <= n; ++k) b.bracket(indexed("X", k), indexed("Y", k), 1, "Z1").j_pair(indexed("X", k), indexed("Y", k));
  b.j_pair("Z1", "Z2");
  return {"h_r", n, 0, b.build(), two_step_abelian()};
}

CatalogEntry h_times_h(int n, int m) {
  require_positive(n, "n");
  require_positive(m, "m");
  std::vector<std::string> basis;
  for (int k = 1; k <= n; ++k) {
    basis.push_back(indexed("X", k));
    basis.push_back(indexed("Y", k));
  }
  for (int l = 1; l <= m; ++l) {
    basis.push_back(indexed("U", l));
    basis.push_back(indexed("V", l));
  }
  basis.insert(basis.end(), {"Z1", "Z2"});
  SpecBuilder b("h_h(" + std::to_string(n) + "," + std::to_string(m) + ")", basis);
  for (int k = 1; k <= n; ++k) b.bracket(indexed("X", k), indexed("Y", k), 1, "Z1").j_pair(indexed("X", k), indexed("Y", k));
  for (int l = 1; l <= m; ++l) b.bracket(indexed("U", l), indexed("V", l), 1, "Z2").j_pair(indexed("U", l), indexed("V", l));
  b.j_pair("Z1", "Z2");
  return {"h_h", n, m, b.build(), two_step_abelian()};
}

namespace {

SpecBuilder four_n_plus_two(const std::string& name, int n) {
  std::vector<std::string> basis{"Z1", "Z2"};
  for (int i = 1; i <= 4 * n; ++i) basis.push_back(indexed("X", i));
  SpecBuilder b(name, basis);
  for (int k = 0; k < n; ++k) {
    b.j_pair(indexed("X", 4 * k + 1), indexed("X", 4 * k + 2));
    b.j_pair(indexed("X", 4 * k + 3), indexed("X", 4 * k + 4), -1);
  }
  b.j_pair("Z1", "Z2", -1);
  return b;
}

}  // namespace

CatalogEntry w_family(int n) {
  require_positive(n, "n");
  SpecBuilder b = four_n_plus_two("w(" + std::to_string(n) + ")", n);
  const mpq_class half(1, 2);
  for (int k = 0; k < n; ++k) {
    auto x = [k](int i) { return indexed("X", 4 * k + i); };
    b.bracket(x(1), x(3), -half, "Z1");
    b.bracket(x(1), x(4), -half, "Z2");
    b.bracket(x(2), x(3), -half, "Z2");
    b.bracket(x(2), x(4), half, "Z1");
  }
  return {"w", n, 0, b.build(), two_step_abelian()};
}

CatalogEntry p_family(int n) {
  require_positive(n, "n");
  SpecBuilder b = four_n_plus_two("p(" + std::to_string(n) + ")", n);
  const mpq_class half(1, 2);
  for (int k = 0; k < n; ++k) {
    auto x = [k](int i) { return indexed("X", 4 * k + i); };
    b.bracket(x(1), x(2), -half, "Z1");
    b.bracket(x(1), x(4), -half, "Z2");
    b.bracket(x(2), x(3), -half, "Z2");
  }
  return {"p", n, 0, b.build(), two_step_abelian()};
}

CatalogEntry iwasawa() {
  SpecBuilder b("iwasawa", {"X1", "Y1", "X2", "Y2", "X3", "Y3"});
  b.bracket("X1", "X3", 1, "X2").bracket("X1", "Y3", 1, "Y2").bracket("Y1", "X3", 1, "Y2").bracket("Y1", "Y3", -1, "X2");
  b.j_pair("X1", "Y1").j_pair("X2", "Y2").j_pair("X3", "Y3");
  RealLieAlgebraSpec spec = b.build();
  ComplexPresentation cp;
  cp.n = 3;
  cp.labels = {"W1", "W2", "W3"};
  cp.brackets.push_back({0, 2, {{1, Scalar(1)}}});
  spec.complex_presentation = cp;
  return {"iwasawa", 0, 0, spec, {false, true, 2, 2, false}};
}

CatalogEntry torus(int n) {
  require_positive(n, "n");
  std::vector<std::string> basis;
  for (int k = 1; k <= n; ++k) {
    basis.push_back(indexed("X", k));
    basis.push_back(indexed("Y", k));
  }
  SpecBuilder b("torus(" + std::to_string(n) + ")", basis);
  for (int k = 1; k <= n; ++k) b.j_pair(indexed("X", k), indexed("Y", k));
  return {"torus", n, 0, b.build(), {true, true, 1, 2 * n, false}};
}

const std::vector<std::string>& catalog_names() {
  static const std::vector<std::string> names{"kodaira", "iwasawa", "torus", "h_r", "h_h", "w", "p"};
  return names;
}

CatalogEntry catalog_entry(const std::string& name, int n, int m) {
  if (name == "kodaira") return kodaira();
  if (name == "iwasawa") return iwasawa();
  if (name == "torus") return torus(n);
  if (name == "h_r") return h_times_r(n);
  if (name == "h_h") return h_times_h(n, m);
  if (name == "w") return w_family(n);
  if (name == "p") return p_family(n);
  throw Error(ErrorCode::InvalidArgument, "unknown catalog entry '" + name + "'");
}

bool matches_expected(const CatalogEntry& entry, const ValidationReport& report) {
  const ExpectedFlags& e = entry.expected;
  return report.ok() && report.abelian_j == e.abelian_j && report.parallelizable == e.parallelizable &&
         report.nil_step == e.nil_step && report.center_dim == e.center_dim;
}

SparseElement standard_lambda(const ComplexifiedAlgebra& alg) {
  const std::size_t n = alg.n();
  std::vector<std::size_t> center = alg.center_indices();
  std::vector<std::size_t> complement = alg.complement_indices();
  if (alg.is_abelian_j() && alg.nil_step() == 2 && !center.empty() && !complement.empty()) {
    return wedge(SparseElement::generator(Side::A, n, center.front()),
                 SparseElement::generator(Side::A, n, complement.front()));
  }
  if (n >= 2) return wedge(SparseElement::generator(Side::A, n, 0), SparseElement::generator(Side::A, n, 1));
  return SparseElement(Side::A, n, 2, 0);
}

SampleResult sample_poisson(const ComplexifiedAlgebra& alg, std::size_t count, std::uint64_t seed,
                            std::size_t max_trials) {
  if (count < 1) throw Error(ErrorCode::InvalidArgument, "count must be at least 1");
  if (max_trials == 0) max_trials = 100 * count + 1000;
  const std::size_t n = alg.n();
  Calculus calc(alg);
  SampleResult out;
  auto already = [&out](const SparseElement& x) {
    for (const PoissonCandidate& c : out.accepted)
      if (c.lambda == x) return true;
    return false;
  };

  out.accepted.push_back(calc.check_holomorphic_poisson(SparseElement(Side::A, n, 2, 0)));
  if (alg.is_abelian_j() && alg.nil_step() == 2 && !alg.center_indices().empty() &&
      !alg.complement_indices().empty()) {
    PoissonCandidate standard = calc.check_holomorphic_poisson(standard_lambda(alg));
    if (standard.is_holomorphic && standard.is_poisson) out.accepted.push_back(standard);
  }

  std::mt19937_64 rng(seed);
  auto draw = [&rng]() { return static_cast<long>(rng() % 5) - 2; };
  std::vector<Monomial> basis = enumerate_basis(n, 2, 0);
  std::size_t random_accepted = 0;
  while (random_accepted < count && out.trials < max_trials) {
    ++out.trials;
    SparseElement lambda(Side::A, n, 2, 0);
    for (Monomial m : basis) {
      long re = draw();
      long im = draw();
      lambda.add(m, Scalar(mpq_class(re), mpq_class(im)));
    }
    PoissonCandidate c = calc.check_holomorphic_poisson(lambda);
    if (!(c.is_holomorphic && c.is_poisson)) {
      out.rejected.push_back(lambda);
      continue;
    }
    if (already(c.lambda)) continue;
    ++random_accepted;
    out.accepted.push_back(c);
  }
  out.budget_exhausted = random_accepted < count;
  out.none_found = random_accepted == 0;
  return out;
}

}  // namespace hpss
