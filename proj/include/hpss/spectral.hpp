#pragma once

#include <optional>
#include <vector>

#include "hpss/algebra.hpp"
#include "hpss/calculus.hpp"
#include "hpss/exterior.hpp"
#include "hpss/linalg.hpp"

namespace hpss {

/// Bounded bigraded complex with vertical (p,q)→(p,q+1) and horizontal (p,q)→(p+1,q) maps.
class DoubleComplex {
 public:
  /// Poisson complex (A^{p,q}, ∂̄, ad_Λ). Throws NotPoisson, SquareZeroViolation.
  static DoubleComplex build(const ComplexifiedAlgebra& alg, const PoissonCandidate& lambda);
  /// Dolbeault complex (B^{p,q}, ∂̄, ∂).
  static DoubleComplex frolicher(const ComplexifiedAlgebra& alg);
  /// Raw complex on 0..p_max × 0..q_max. dims is indexed [p][q]; maps are indexed [p][q]
  /// with rows = dimension of the target block (zero rows when the target is off the grid).
  /// Throws InvalidArgument on shape errors and SquareZeroViolation when D² ≠ 0.
  static DoubleComplex from_matrices(std::vector<std::vector<std::size_t>> dims,
                                     std::vector<std::vector<Matrix>> vertical,
                                     std::vector<std::vector<Matrix>> horizontal);

  std::optional<Side> side() const { return side_; }
  std::size_t n() const { return n_; }
  int p_max() const { return p_max_; }
  int q_max() const { return q_max_; }
  bool in_grid(int p, int q) const { return p >= 0 && q >= 0 && p <= p_max_ && q <= q_max_; }

  std::size_t block_dim(int p, int q) const { return in_grid(p, q) ? dims_[idx(p, q)] : 0; }
  /// Monomial basis of the block; empty for raw complexes.
  const std::vector<Monomial>& block_basis(int p, int q) const { return bases_[idx(p, q)]; }
  const Matrix& vertical(int p, int q) const { return vertical_[idx(p, q)]; }
  const Matrix& horizontal(int p, int q) const { return horizontal_[idx(p, q)]; }

  /// Square-zero identities of the two differentials, checked blockwise.
  bool square_zero() const;
  bool horizontal_is_zero() const;

  int max_total_degree() const { return p_max_ + q_max_; }
  std::size_t total_dim(int k) const;
  /// Offset of block (p, k−p) inside K^k, blocks ordered by increasing p.
  std::size_t offset(int p, int k) const;
  /// D = vertical + horizontal : K^k → K^{k+1}.
  const Matrix& total_differential(int k) const { return total_[static_cast<std::size_t>(k)]; }

  Vector embed(int p, int q, const Vector& block) const;
  Vector component(int p, int q, const Vector& total) const;
  SparseElement to_element(int p, int q, const Vector& block) const;
  Vector from_element(const SparseElement& x) const;

 private:
  DoubleComplex() = default;
  std::size_t idx(int p, int q) const { return static_cast<std::size_t>(p * (q_max_ + 1) + q); }
  void assemble_total();

  std::optional<Side> side_;
  std::size_t n_ = 0;
  int p_max_ = 0;
  int q_max_ = 0;
  std::vector<std::size_t> dims_;
  std::vector<std::vector<Monomial>> bases_;
  std::vector<Matrix> vertical_;
  std::vector<Matrix> horizontal_;
  std::vector<Matrix> total_;
};

struct PageEntry {
  int p = 0;
  int q = 0;
  std::size_t dim = 0;
  /// Cycles in F^p K^{p+q} whose classes form a basis of E_r^{p,q}.
  std::vector<Vector> representatives;
  /// Z_{r-1}^{p+1} + B_{r-1}^p inside K^{p+q}.
  Subspace denominator;
  /// d_r in the representative bases; rows index the target entry (p+r, q−r+1).
  Matrix d;
};

struct SpectralPage {
  int r = 0;
  int p_max = 0;
  int q_max = 0;
  std::vector<PageEntry> entries;  // indexed p*(q_max+1)+q

  const PageEntry& at(int p, int q) const { return entries[static_cast<std::size_t>(p * (q_max + 1) + q)]; }
  bool d_is_zero() const;
};

struct PagesResult {
  std::vector<SpectralPage> pages;  // r = 0..r_max
  bool square_zero = true;          // d_r ∘ d_r = 0 on every page
  bool dims_consistent = true;      // dim E_{r+1} = dim ker d_r − dim im d_r
};

/// Pages E_0..E_{r_max}. jobs > 1 computes entries of one page concurrently.
PagesResult compute_pages(const DoubleComplex& dc, int r_max, int jobs = 1);
std::vector<SpectralPage> pages(const DoubleComplex& dc, int r_max, int jobs = 1);

/// Page index beyond which every d_r leaves the grid.
int stable_page(const DoubleComplex& dc);
/// Smallest r ≥ 1 with d_s = 0 for all s ≥ r.
int degeneracy_page(const DoubleComplex& dc, int jobs = 1);
int degeneracy_page(const PagesResult& result);
std::vector<std::size_t> total_cohomology(const DoubleComplex& dc);
/// Σ_{p+q=k} dim E∞^{p,q} = dim H^k for every k, plus Euler characteristics.
bool einfty_consistent(const DoubleComplex& dc, const SpectralPage& einfty);

/// Zig-zag: solve ∂̄w = −ad v and return ad w ∈ block (p+2, q−1); v lives in block (p,q).
/// Throws NotACycle, NotE2Class.
Vector d2_by_chasing(const DoubleComplex& dc, int p, int q, const Vector& v);
SparseElement d2_by_chasing(const DoubleComplex& dc, int p, int q, const SparseElement& cycle);
/// d2_by_chasing on every E_2 representative agrees with the page matrix modulo the target denominator.
bool d2_chasing_agrees(const DoubleComplex& dc, const SpectralPage& e2);
/// True when every E_2 representative is sent to zero by the chase (as a class).
bool d2_chasing_vanishes(const DoubleComplex& dc, const SpectralPage& e2);

/// ∂̄φ = φ∂̄ and ad_Λ φ = φ∂ on every B-side basis monomial.
bool chain_map_holds(const Calculus& calc, const PoissonCandidate& lambda);

struct PageMap {
  std::vector<Matrix> maps;  // indexed p*(n+1)+q, columns index the B-side E_1 basis
  bool identity_on_p0 = true;
  std::vector<Matrix> residuals;  // d_1^A M_{p,q} − M_{p+1,q} d_1^B
  bool commutes = true;
};

/// φ induced on E_1. Throws ChainMapViolation when φ does not send cycles to cycles.
PageMap page_map(const Calculus& calc, const PoissonCandidate& lambda, const DoubleComplex& b_dc,
                 const SpectralPage& b_e1, const DoubleComplex& a_dc, const SpectralPage& a_e1);

}  // namespace hpss
