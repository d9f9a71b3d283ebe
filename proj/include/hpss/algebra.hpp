#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hpss/gaussian_rational.hpp"
#include "hpss/linalg.hpp"

namespace hpss {

struct BracketTerm {
  std::size_t k = 0;
  Scalar coeff;
};

/// [e_i, e_j] = sum over terms of coeff * e_k.
struct BracketEntry {
  std::size_t i = 0;
  std::size_t j = 0;
  std::vector<BracketTerm> terms;
};

/// Brackets given directly on the complex basis: indices 0..n-1 are the holomorphic
/// vectors, n..2n-1 their conjugates. Missing conjugate and antisymmetric entries are implied.
struct ComplexPresentation {
  std::size_t n = 0;
  std::vector<std::string> labels;
  std::vector<BracketEntry> brackets;
};

struct RealLieAlgebraSpec {
  std::string name;
  std::size_t dim = 0;
  std::vector<std::string> basis;
  std::vector<BracketEntry> brackets;
  /// Row-major; J(e_j) = sum_i J[i*dim + j] e_i. Empty when only a complex presentation is given.
  std::vector<mpq_class> J;
  std::optional<ComplexPresentation> complex_presentation;

  bool has_real_presentation() const { return !J.empty(); }
};

/// Dense table of structure constants over Q(i); table(i, j) is the coordinate vector of [e_i, e_j].
class StructureConstants {
 public:
  explicit StructureConstants(std::size_t dim = 0);

  std::size_t dim() const { return dim_; }
  const Vector& operator()(std::size_t i, std::size_t j) const { return table_[i * dim_ + j]; }
  Vector& operator()(std::size_t i, std::size_t j) { return table_[i * dim_ + j]; }

  Vector bracket(const Vector& x, const Vector& y) const;
  Vector basis_vector(std::size_t i) const;

  bool is_antisymmetric() const;
  bool jacobi_holds(std::string* witness = nullptr) const;
  /// Length of the lower central series; std::nullopt when not nilpotent. Abelian algebras have step 1.
  std::optional<int> nilpotency_step() const;
  Subspace center() const;
  /// Subspace spanned by all brackets [g, g].
  Subspace derived() const;

  friend bool operator==(const StructureConstants& a, const StructureConstants& b) {
    return a.dim_ == b.dim_ && a.table_ == b.table_;
  }

 private:
  std::size_t dim_;
  std::vector<Vector> table_;
};

struct ValidationReport {
  bool antisymmetric = true;
  bool jacobi = true;
  bool j_squared_minus_identity = true;
  bool integrable = true;
  bool abelian_j = false;
  bool parallelizable = false;
  bool nilpotent = false;
  int nil_step = 0;
  int center_dim = 0;  ///< real dimension
  bool center_j_invariant = false;
  bool complex_presentation_consistent = true;
  std::vector<std::string> failures;

  bool ok() const {
    return antisymmetric && jacobi && j_squared_minus_identity && integrable && complex_presentation_consistent;
  }
};

ValidationReport validate(const RealLieAlgebraSpec& spec);

/// Complex Lie algebra g_C = g^{1,0} + g^{0,1} in the basis (T_1..T_n, conj T_1..conj T_n).
class ComplexifiedAlgebra {
 public:
  ComplexifiedAlgebra(std::string name, std::vector<std::string> holo_labels, StructureConstants constants,
                      std::vector<bool> holo_in_center);

  const std::string& name() const { return name_; }
  std::size_t n() const { return n_; }
  std::size_t dim() const { return 2 * n_; }
  const std::vector<std::string>& holo_labels() const { return holo_labels_; }
  const StructureConstants& constants() const { return constants_; }

  /// Index of conj(f_a) in the complex basis.
  std::size_t conj_index(std::size_t a) const { return a < n_ ? a + n_ : a - n_; }
  Vector conj(const Vector& v) const;
  Vector holo_part(const Vector& v) const;
  Vector anti_part(const Vector& v) const;
  Vector bracket(const Vector& x, const Vector& y) const { return constants_.bracket(x, y); }
  Vector basis_vector(std::size_t a) const { return constants_.basis_vector(a); }

  bool is_abelian_j() const { return abelian_j_; }
  bool is_parallelizable() const { return parallelizable_; }
  bool is_integrable() const { return integrable_; }
  std::optional<int> nil_step() const { return nil_step_; }
  int center_dim() const { return center_dim_; }

  /// Whether T_k lies in the centre part c^{1,0}; false marks the complement t^{1,0}.
  const std::vector<bool>& holo_in_center() const { return holo_in_center_; }
  /// True when c^{1,0} + c^{0,1} is the whole centre and is spanned by basis vectors.
  bool split_aligned() const { return split_aligned_; }
  std::vector<std::size_t> center_indices() const;
  std::vector<std::size_t> complement_indices() const;

  /// Two-step, abelian J, real two-dimensional centre.
  bool degeneration_hypotheses() const;

 private:
  std::string name_;
  std::size_t n_;
  std::vector<std::string> holo_labels_;
  StructureConstants constants_;
  std::vector<bool> holo_in_center_;
  bool abelian_j_ = false;
  bool parallelizable_ = false;
  bool integrable_ = false;
  std::optional<int> nil_step_;
  int center_dim_ = 0;
  bool split_aligned_ = false;
};

/// Throws Error(BadJ | JacobiFailure | NonIntegrable | ValidationFailure) when the spec is unusable.
ComplexifiedAlgebra complexify(const RealLieAlgebraSpec& spec);

/// Lie bracket of degree-one elements of g_C, given as 2n-coordinate vectors.
Vector bracket(const ComplexifiedAlgebra& alg, const Vector& a, const Vector& b);

Subspace intersect(const Subspace& a, const Subspace& b);

}  // namespace hpss
