#include "hpss/algebra.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "hpss/error.hpp"

namespace hpss {

// ---------------------------------------------------------------------------
// StructureConstants

StructureConstants::StructureConstants(std::size_t dim) : dim_(dim), table_(dim * dim, Vector(dim)) {}

Vector StructureConstants::basis_vector(std::size_t i) const {
  Vector v(dim_);
  v[i] = 1;
  return v;
}

Vector StructureConstants::bracket(const Vector& x, const Vector& y) const {
  Vector out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (y[j].is_zero()) continue;
      const Vector& c = (*this)(i, j);
      Scalar xy = x[i] * y[j];
      for (std::size_t k = 0; k < dim_; ++k) {
        if (!c[k].is_zero()) out[k].add_mul(xy, c[k]);
      }
    }
  }
  return out;
}

bool StructureConstants::is_antisymmetric() const {
  for (std::size_t i = 0; i < dim_; ++i) {
    if (!is_zero((*this)(i, i))) return false;
    for (std::size_t j = i + 1; j < dim_; ++j) {
      if (!is_zero((*this)(i, j) + (*this)(j, i))) return false;
    }
  }
  return true;
}

bool StructureConstants::jacobi_holds(std::string* witness) const {
  for (std::size_t a = 0; a < dim_; ++a) {
    for (std::size_t b = a + 1; b < dim_; ++b) {
      for (std::size_t c = b + 1; c < dim_; ++c) {
        Vector ea = basis_vector(a), eb = basis_vector(b), ec = basis_vector(c);
        Vector sum = bracket(ea, (*this)(b, c)) + bracket(eb, (*this)(c, a)) + bracket(ec, (*this)(a, b));
        if (!is_zero(sum)) {
          if (witness) {
            std::ostringstream os;
            os << "Jacobi fails on basis triple (" << a << ", " << b << ", " << c << ")";
            *witness = os.str();
          }
          return false;
        }
      }
    }
  }
  return true;
}

Subspace StructureConstants::derived() const {
  Subspace out(dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = i + 1; j < dim_; ++j) out.insert((*this)(i, j));
  return out;
}

std::optional<int> StructureConstants::nilpotency_step() const {
  Subspace current(dim_);
  for (std::size_t i = 0; i < dim_; ++i) current.insert(basis_vector(i));
  int step = 0;
  while (current.dim() > 0) {
    Subspace next(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
      Vector ei = basis_vector(i);
      for (const Vector& v : current.basis()) next.insert(bracket(ei, v));
    }
    if (next.dim() == current.dim()) return std::nullopt;
    current = std::move(next);
    ++step;
  }
  return step;
}

Subspace StructureConstants::center() const {
  // x central iff sum_i x_i c(i, j)[k] = 0 for every j, k.
  Matrix m(dim_ * dim_, dim_);
  for (std::size_t j = 0; j < dim_; ++j)
    for (std::size_t k = 0; k < dim_; ++k)
      for (std::size_t i = 0; i < dim_; ++i) m(j * dim_ + k, i) = (*this)(i, j)[k];
  return Subspace(dim_, kernel(m));
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  const std::size_t n = a.ambient();
  std::vector<Vector> cols;
  for (const Vector& v : a.basis()) cols.push_back(v);
  for (const Vector& v : b.basis()) cols.push_back(scaled(v, -1));
  Subspace out(n);
  if (cols.empty()) return out;
  for (const Vector& coeffs : kernel(Matrix::from_columns(n, cols))) {
    Vector v(n);
    for (std::size_t i = 0; i < a.dim(); ++i) {
      if (!coeffs[i].is_zero()) v = v + scaled(a.basis()[i], coeffs[i]);
    }
    out.insert(v);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Building structure constants from presentations

namespace {

void store_bracket(StructureConstants& sc, std::vector<bool>& defined, std::size_t i, std::size_t j,
                   const Vector& value) {
  const std::size_t d = sc.dim();
  if (defined[i * d + j]) {
    if (sc(i, j) != value) {
      std::ostringstream os;
      os << "conflicting brackets given for pair (" << i << ", " << j << ")";
      throw Error(ErrorCode::ValidationFailure, os.str());
    }
    return;
  }
  defined[i * d + j] = true;
  sc(i, j) = value;
}

Vector terms_to_vector(std::size_t dim, const std::vector<BracketTerm>& terms) {
  Vector v(dim);
  for (const BracketTerm& t : terms) {
    if (t.k >= dim) throw Error(ErrorCode::SchemaError, "bracket term index out of range");
    v[t.k] += t.coeff;
  }
  return v;
}

struct RealBuild {
  StructureConstants sc;
  bool antisymmetric = true;
  std::vector<std::string> failures;
};

RealBuild real_constants(const RealLieAlgebraSpec& spec) {
  RealBuild out{StructureConstants(spec.dim), true, {}};
  std::vector<bool> defined(spec.dim * spec.dim, false);
  for (const BracketEntry& e : spec.brackets) {
    if (e.i >= spec.dim || e.j >= spec.dim) throw Error(ErrorCode::SchemaError, "bracket index out of range");
    Vector v = terms_to_vector(spec.dim, e.terms);
    for (const Scalar& s : v) {
      if (!s.is_real()) throw Error(ErrorCode::SchemaError, "real presentation has a non-real structure constant");
    }
    if (e.i == e.j) {
      if (!is_zero(v)) {
        out.antisymmetric = false;
        out.failures.push_back("bracket of a basis vector with itself is nonzero");
      }
      continue;
    }
    const std::size_t idx = e.i * spec.dim + e.j;
    const std::size_t rev = e.j * spec.dim + e.i;
    if (defined[idx] && out.sc(e.i, e.j) != v) {
      out.antisymmetric = false;
      out.failures.push_back("pair listed twice with different values");
      continue;
    }
    if (defined[rev] && !is_zero(out.sc(e.j, e.i) + v)) {
      out.antisymmetric = false;
      out.failures.push_back("brackets [e_i,e_j] and [e_j,e_i] are not negatives");
      continue;
    }
    defined[idx] = defined[rev] = true;
    out.sc(e.i, e.j) = v;
    out.sc(e.j, e.i) = scaled(v, -1);
  }
  return out;
}

Matrix j_matrix(const RealLieAlgebraSpec& spec) {
  Matrix j(spec.dim, spec.dim);
  for (std::size_t r = 0; r < spec.dim; ++r)
    for (std::size_t c = 0; c < spec.dim; ++c) j(r, c) = Scalar(spec.J[r * spec.dim + c]);
  return j;
}

StructureConstants complex_constants(const ComplexPresentation& cp) {
  const std::size_t n = cp.n;
  const std::size_t d = 2 * n;
  StructureConstants sc(d);
  std::vector<bool> defined(d * d, false);
  auto conj_idx = [n](std::size_t a) { return a < n ? a + n : a - n; };
  for (const BracketEntry& e : cp.brackets) {
    if (e.i >= d || e.j >= d) throw Error(ErrorCode::SchemaError, "complex bracket index out of range");
    Vector v = terms_to_vector(d, e.terms);
    if (e.i == e.j) {
      if (!is_zero(v)) throw Error(ErrorCode::ValidationFailure, "bracket of a basis vector with itself is nonzero");
      continue;
    }
    Vector cv(d);
    for (std::size_t k = 0; k < d; ++k) cv[conj_idx(k)] = v[k].conj();
    store_bracket(sc, defined, e.i, e.j, v);
    store_bracket(sc, defined, e.j, e.i, scaled(v, -1));
    store_bracket(sc, defined, conj_idx(e.i), conj_idx(e.j), cv);
    store_bracket(sc, defined, conj_idx(e.j), conj_idx(e.i), scaled(cv, -1));
  }
  return sc;
}

std::size_t leading_index(const Vector& v) {
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) return i;
  return v.size();
}

bool holds_for_all_pairs(const StructureConstants& sc,
                         const std::function<Vector(const Vector&, const Vector&)>& residual) {
  for (std::size_t a = 0; a < sc.dim(); ++a)
    for (std::size_t b = 0; b < sc.dim(); ++b)
      if (!is_zero(residual(sc.basis_vector(a), sc.basis_vector(b)))) return false;
  return true;
}

ComplexifiedAlgebra from_complex_presentation(const std::string& name, const ComplexPresentation& cp) {
  StructureConstants sc = complex_constants(cp);
  std::vector<bool> in_center(cp.n, false);
  Subspace center = sc.center();
  for (std::size_t k = 0; k < cp.n; ++k) in_center[k] = center.contains(sc.basis_vector(k));
  std::vector<std::string> labels = cp.labels;
  if (labels.size() != cp.n) {
    labels.clear();
    for (std::size_t k = 0; k < cp.n; ++k) labels.push_back("W" + std::to_string(k + 1));
  }
  return ComplexifiedAlgebra(name, labels, std::move(sc), std::move(in_center));
}

ComplexifiedAlgebra from_real_presentation(const RealLieAlgebraSpec& spec, const StructureConstants& real) {
  const std::size_t d = spec.dim;
  const std::size_t n = d / 2;
  Matrix j = j_matrix(spec);
  auto apply_j = [&j](const Vector& v) { return j.apply(v); };

  // The centre part is the largest J-invariant subspace of the centre.
  Subspace center = real.center();
  Subspace j_center(d);
  for (const Vector& v : center.basis()) j_center.insert(apply_j(v));
  Subspace c_part = intersect(center, j_center);

  struct Chosen {
    Vector x;
    bool central;
  };
  std::vector<Chosen> chosen;
  Subspace span(d);
  for (const Vector& v : c_part.basis()) {
    if (span.contains(v)) continue;
    span.insert(v);
    span.insert(apply_j(v));
    chosen.push_back({v, true});
  }
  for (std::size_t i = 0; i < d; ++i) {
    Vector e = real.basis_vector(i);
    if (span.contains(e)) continue;
    span.insert(e);
    span.insert(apply_j(e));
    chosen.push_back({e, false});
  }
  if (chosen.size() != n) throw Error(ErrorCode::BadJ, "could not build a J-adapted basis");
  std::stable_sort(chosen.begin(), chosen.end(), [](const Chosen& a, const Chosen& b) {
    std::size_t la = leading_index(a.x), lb = leading_index(b.x);
    if (la != lb) return la < lb;
    return a.central && !b.central;
  });

  // Columns: T_k = (X_k - i J X_k)/2, then conjugates.
  Matrix p(d, d);
  const Scalar half = Scalar::from_fraction(1, 2);
  const Scalar minus_i_half = Scalar(0, mpq_class(-1, 2));
  for (std::size_t k = 0; k < n; ++k) {
    Vector jx = apply_j(chosen[k].x);
    for (std::size_t r = 0; r < d; ++r) {
      Scalar t = chosen[k].x[r] * half + jx[r] * minus_i_half;
      p(r, k) = t;
      p(r, k + n) = t.conj();
    }
  }
  std::optional<Matrix> q = inverse(p);
  if (!q) throw Error(ErrorCode::BadJ, "J-adapted complex basis is singular");

  StructureConstants sc(d);
  for (std::size_t a = 0; a < d; ++a) {
    for (std::size_t b = 0; b < d; ++b) {
      Vector value = q->apply(real.bracket(p.column(a), p.column(b)));
      sc(a, b) = std::move(value);
    }
  }

  std::vector<std::string> labels;
  std::vector<bool> in_center;
  std::size_t t_count = 0, w_count = 0;
  for (const Chosen& c : chosen) {
    in_center.push_back(c.central);
    labels.push_back(c.central ? "W" + std::to_string(++w_count) : "T" + std::to_string(++t_count));
  }
  return ComplexifiedAlgebra(spec.name, std::move(labels), std::move(sc), std::move(in_center));
}

}  // namespace

// ---------------------------------------------------------------------------
// ComplexifiedAlgebra

ComplexifiedAlgebra::ComplexifiedAlgebra(std::string name, std::vector<std::string> holo_labels,
                                         StructureConstants constants, std::vector<bool> holo_in_center)
    : name_(std::move(name)),
      n_(constants.dim() / 2),
      holo_labels_(std::move(holo_labels)),
      constants_(std::move(constants)),
      holo_in_center_(std::move(holo_in_center)) {
  abelian_j_ = true;
  parallelizable_ = true;
  integrable_ = true;
  for (std::size_t a = 0; a < n_; ++a) {
    for (std::size_t b = 0; b < n_; ++b) {
      const Vector& hh = constants_(a, b);
      if (!is_zero(hh)) abelian_j_ = false;
      if (!is_zero(anti_part(hh))) integrable_ = false;
      if (!is_zero(constants_(a, b + n_))) parallelizable_ = false;
    }
  }
  if (!integrable_) parallelizable_ = false;
  nil_step_ = constants_.nilpotency_step();
  center_dim_ = static_cast<int>(constants_.center().dim());
  int central = static_cast<int>(std::count(holo_in_center_.begin(), holo_in_center_.end(), true));
  split_aligned_ = 2 * central == center_dim_;
}

Vector ComplexifiedAlgebra::conj(const Vector& v) const {
  Vector out(v.size());
  for (std::size_t a = 0; a < v.size(); ++a) out[conj_index(a)] = v[a].conj();
  return out;
}

Vector ComplexifiedAlgebra::holo_part(const Vector& v) const {
  Vector out(v);
  for (std::size_t a = n_; a < 2 * n_; ++a) out[a] = 0;
  return out;
}

Vector ComplexifiedAlgebra::anti_part(const Vector& v) const {
  Vector out(v);
  for (std::size_t a = 0; a < n_; ++a) out[a] = 0;
  return out;
}

std::vector<std::size_t> ComplexifiedAlgebra::center_indices() const {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < n_; ++k)
    if (holo_in_center_[k]) out.push_back(k);
  return out;
}

std::vector<std::size_t> ComplexifiedAlgebra::complement_indices() const {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < n_; ++k)
    if (!holo_in_center_[k]) out.push_back(k);
  return out;
}

bool ComplexifiedAlgebra::degeneration_hypotheses() const {
  return nil_step_ == 2 && abelian_j_ && center_dim_ == 2 && split_aligned_;
}

Vector bracket(const ComplexifiedAlgebra& alg, const Vector& a, const Vector& b) {
  if (a.size() != alg.dim() || b.size() != alg.dim()) {
    throw Error(ErrorCode::DegreeMismatch, "bracket expects degree-one elements of g_C");
  }
  return alg.bracket(a, b);
}

// ---------------------------------------------------------------------------
// validate / complexify

ValidationReport validate(const RealLieAlgebraSpec& spec) {
  ValidationReport report;
  if (!spec.has_real_presentation()) {
    if (!spec.complex_presentation) {
      report.j_squared_minus_identity = false;
      report.failures.push_back("neither J nor a complex presentation is given");
      return report;
    }
    StructureConstants sc(0);
    try {
      sc = complex_constants(*spec.complex_presentation);
    } catch (const Error& e) {
      report.antisymmetric = false;
      report.failures.push_back(e.what());
      return report;
    }
    ComplexifiedAlgebra alg = from_complex_presentation(spec.name, *spec.complex_presentation);
    std::string witness;
    report.jacobi = sc.jacobi_holds(&witness);
    if (!report.jacobi) report.failures.push_back(witness);
    report.integrable = alg.is_integrable();
    if (!report.integrable) report.failures.push_back("[g^{1,0}, g^{1,0}] is not contained in g^{1,0}");
    report.abelian_j = alg.is_abelian_j();
    report.parallelizable = alg.is_parallelizable();
    report.nilpotent = alg.nil_step().has_value();
    report.nil_step = alg.nil_step().value_or(0);
    report.center_dim = alg.center_dim();
    report.center_j_invariant = alg.split_aligned();
    return report;
  }

  if (spec.J.size() != spec.dim * spec.dim) throw Error(ErrorCode::SchemaError, "J must have dim*dim entries");
  RealBuild build = real_constants(spec);
  const StructureConstants& sc = build.sc;
  report.antisymmetric = build.antisymmetric;
  for (const std::string& f : build.failures) report.failures.push_back(f);

  std::string witness;
  report.jacobi = sc.jacobi_holds(&witness);
  if (!report.jacobi) report.failures.push_back(witness);

  Matrix j = j_matrix(spec);
  Matrix jj = j * j;
  report.j_squared_minus_identity = (jj + Matrix::identity(spec.dim)).is_zero() && spec.dim % 2 == 0;
  if (!report.j_squared_minus_identity) report.failures.push_back("J*J is not minus the identity");

  if (report.j_squared_minus_identity) {
    auto br = [&sc](const Vector& x, const Vector& y) { return sc.bracket(x, y); };
    auto jv = [&j](const Vector& x) { return j.apply(x); };
    report.integrable = holds_for_all_pairs(sc, [&](const Vector& x, const Vector& y) {
      return br(jv(x), jv(y)) - jv(br(jv(x), y)) - jv(br(x, jv(y))) - br(x, y);
    });
    if (!report.integrable) report.failures.push_back("Nijenhuis tensor of J is nonzero");
    report.abelian_j = holds_for_all_pairs(sc, [&](const Vector& x, const Vector& y) {
      return br(jv(x), jv(y)) - br(x, y);
    });
    report.parallelizable = holds_for_all_pairs(sc, [&](const Vector& x, const Vector& y) {
      return br(x, jv(y)) - jv(br(x, y));
    });
  } else {
    report.integrable = false;
  }

  std::optional<int> step = sc.nilpotency_step();
  report.nilpotent = step.has_value();
  report.nil_step = step.value_or(0);
  Subspace center = sc.center();
  report.center_dim = static_cast<int>(center.dim());
  if (report.j_squared_minus_identity) {
    report.center_j_invariant = std::all_of(center.basis().begin(), center.basis().end(),
                                            [&](const Vector& v) { return center.contains(j.apply(v)); });
  }

  if (spec.complex_presentation && report.ok()) {
    try {
      ComplexifiedAlgebra from_real = from_real_presentation(spec, sc);
      ComplexifiedAlgebra from_cp = from_complex_presentation(spec.name, *spec.complex_presentation);
      report.complex_presentation_consistent = from_real.constants() == from_cp.constants();
    } catch (const Error& e) {
      report.complex_presentation_consistent = false;
    }
    if (!report.complex_presentation_consistent) {
      report.failures.push_back("complex presentation disagrees with the complexified real presentation");
    }
  }
  return report;
}

ComplexifiedAlgebra complexify(const RealLieAlgebraSpec& spec) {
  ValidationReport report = validate(spec);
  auto first_failure = [&report]() { return report.failures.empty() ? std::string() : report.failures.front(); };
  if (!report.antisymmetric) throw Error(ErrorCode::ValidationFailure, first_failure());
  if (!report.j_squared_minus_identity) throw Error(ErrorCode::BadJ, first_failure());
  if (!report.jacobi) throw Error(ErrorCode::JacobiFailure, first_failure());
  if (!report.integrable) throw Error(ErrorCode::NonIntegrable, first_failure());
  if (!report.complex_presentation_consistent) throw Error(ErrorCode::ValidationFailure, first_failure());
  if (spec.complex_presentation) return from_complex_presentation(spec.name, *spec.complex_presentation);
  return from_real_presentation(spec, real_constants(spec).sc);
}

}  // namespace hpss
