#pragma once

#include <array>
#include <vector>

#include "hpss/algebra.hpp"
#include "hpss/exterior.hpp"

namespace hpss {

struct PoissonCandidate {
  SparseElement lambda;
  bool is_holomorphic = false;
  bool is_poisson = false;
};

/// Generator images of the Chevalley–Eilenberg differential and its bidegree pieces.
/// dθ^c = −Σ_{a<b} c_{ab}^c θ^a∧θ^b on the dual basis θ of (f_0..f_{2n-1}).
class Calculus {
 public:
  explicit Calculus(const ComplexifiedAlgebra& alg);

  const ComplexifiedAlgebra& algebra() const { return *alg_; }
  std::size_t n() const { return alg_->n(); }

  SparseElement dbar(const SparseElement& x) const;
  SparseElement del(const SparseElement& x) const;
  SparseElement schouten(const SparseElement& a, const SparseElement& b) const;
  /// [Λ, x]. Throws NotPoisson unless the candidate is holomorphic Poisson or raw is set.
  SparseElement ad_lambda(const PoissonCandidate& lambda, const SparseElement& x, bool raw = false) const;
  PoissonCandidate check_holomorphic_poisson(const SparseElement& lambda) const;
  SparseElement phi(const SparseElement& lambda, const SparseElement& x) const;

  /// Component of dθ^c of bidegree (2-k, k) on the B side.
  const SparseElement& d_generator(std::size_t c, int k) const { return d_parts_[c][static_cast<std::size_t>(k)]; }

 private:
  // Images of the degree-one generators under an odd derivation raising degree by one.
  SparseElement apply_derivation(const SparseElement& x, const std::vector<SparseElement>& images, int dp,
                                 int dq) const;
  SparseElement bracket_generators(std::size_t g, std::size_t h) const;

  const ComplexifiedAlgebra* alg_;
  std::vector<std::array<SparseElement, 3>> d_parts_;
  std::vector<SparseElement> dbar_a_;  // A side
  std::vector<SparseElement> dbar_b_;  // B side
  std::vector<SparseElement> del_b_;
  std::vector<std::vector<SparseElement>> gen_brackets_;
};

SparseElement dbar(const ComplexifiedAlgebra& alg, const SparseElement& x);
SparseElement del(const ComplexifiedAlgebra& alg, const SparseElement& x);
SparseElement schouten(const ComplexifiedAlgebra& alg, const SparseElement& a, const SparseElement& b);
SparseElement ad_lambda(const ComplexifiedAlgebra& alg, const PoissonCandidate& lambda, const SparseElement& x,
                        bool raw = false);
PoissonCandidate check_holomorphic_poisson(const ComplexifiedAlgebra& alg, const SparseElement& lambda);
SparseElement phi(const ComplexifiedAlgebra& alg, const SparseElement& lambda, const SparseElement& x);

}  // namespace hpss
