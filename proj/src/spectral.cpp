#include "hpss/spectral.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <mutex>
#include <thread>
#include <tuple>

#include "hpss/error.hpp"

namespace hpss {

namespace {

Matrix multiply_or_empty(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw Error(ErrorCode::InvalidArgument, "shape mismatch in block product");
  return a * b;
}

void run_parallel(std::size_t count, int jobs, const std::function<void(std::size_t)>& task) {
  if (jobs <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) task(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> workers;
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(jobs));
  for (int w = 0; w < jobs; ++w) {
    workers.emplace_back([&, w] {
      try {
        for (std::size_t i = next++; i < count; i = next++) task(i);
      } catch (...) {
        errors[static_cast<std::size_t>(w)] = std::current_exception();
      }
    });
  }
  for (std::thread& t : workers) t.join();
  for (const std::exception_ptr& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace

// ---------------------------------------------------------------------------
// DoubleComplex

DoubleComplex DoubleComplex::build(const ComplexifiedAlgebra& alg, const PoissonCandidate& lambda) {
  if (!lambda.is_holomorphic || !lambda.is_poisson) {
    throw Error(ErrorCode::NotPoisson, "Λ is not a holomorphic Poisson bivector");
  }
  Calculus calc(alg);
  DoubleComplex dc;
  dc.side_ = Side::A;
  dc.n_ = alg.n();
  dc.p_max_ = dc.q_max_ = static_cast<int>(alg.n());
  const std::size_t blocks = (alg.n() + 1) * (alg.n() + 1);
  dc.dims_.resize(blocks);
  dc.bases_.resize(blocks);
  for (int p = 0; p <= dc.p_max_; ++p)
    for (int q = 0; q <= dc.q_max_; ++q) {
      dc.bases_[dc.idx(p, q)] = enumerate_basis(alg.n(), p, q);
      dc.dims_[dc.idx(p, q)] = dc.bases_[dc.idx(p, q)].size();
    }
  dc.vertical_.resize(blocks);
  dc.horizontal_.resize(blocks);
  for (int p = 0; p <= dc.p_max_; ++p) {
    for (int q = 0; q <= dc.q_max_; ++q) {
      const auto& basis = dc.block_basis(p, q);
      Matrix v(dc.block_dim(p, q + 1), basis.size());
      Matrix h(dc.block_dim(p + 1, q), basis.size());
      for (std::size_t c = 0; c < basis.size(); ++c) {
        SparseElement x = SparseElement::monomial(Side::A, alg.n(), basis[c]);
        if (q < dc.q_max_) v.set_column(c, calc.dbar(x).to_vector(dc.block_basis(p, q + 1)));
        if (p < dc.p_max_) h.set_column(c, calc.ad_lambda(lambda, x).to_vector(dc.block_basis(p + 1, q)));
      }
      dc.vertical_[dc.idx(p, q)] = std::move(v);
      dc.horizontal_[dc.idx(p, q)] = std::move(h);
    }
  }
  if (!dc.square_zero()) throw Error(ErrorCode::SquareZeroViolation, "∂̄ + ad_Λ does not square to zero");
  dc.assemble_total();
  return dc;
}

DoubleComplex DoubleComplex::frolicher(const ComplexifiedAlgebra& alg) {
  Calculus calc(alg);
  DoubleComplex dc;
  dc.side_ = Side::B;
  dc.n_ = alg.n();
  dc.p_max_ = dc.q_max_ = static_cast<int>(alg.n());
  const std::size_t blocks = (alg.n() + 1) * (alg.n() + 1);
  dc.dims_.resize(blocks);
  dc.bases_.resize(blocks);
  for (int p = 0; p <= dc.p_max_; ++p)
    for (int q = 0; q <= dc.q_max_; ++q) {
      dc.bases_[dc.idx(p, q)] = enumerate_basis(alg.n(), p, q);
      dc.dims_[dc.idx(p, q)] = dc.bases_[dc.idx(p, q)].size();
    }
  dc.vertical_.resize(blocks);
  dc.horizontal_.resize(blocks);
  for (int p = 0; p <= dc.p_max_; ++p) {
    for (int q = 0; q <= dc.q_max_; ++q) {
      const auto& basis = dc.block_basis(p, q);
      Matrix v(dc.block_dim(p, q + 1), basis.size());
      Matrix h(dc.block_dim(p + 1, q), basis.size());
      for (std::size_t c = 0; c < basis.size(); ++c) {
        SparseElement x = SparseElement::monomial(Side::B, alg.n(), basis[c]);
        if (q < dc.q_max_) v.set_column(c, calc.dbar(x).to_vector(dc.block_basis(p, q + 1)));
        if (p < dc.p_max_) h.set_column(c, calc.del(x).to_vector(dc.block_basis(p + 1, q)));
      }
      dc.vertical_[dc.idx(p, q)] = std::move(v);
      dc.horizontal_[dc.idx(p, q)] = std::move(h);
    }
  }
  if (!dc.square_zero()) throw Error(ErrorCode::SquareZeroViolation, "∂̄ + ∂ does not square to zero");
  dc.assemble_total();
  return dc;
}

DoubleComplex DoubleComplex::from_matrices(std::vector<std::vector<std::size_t>> dims,
                                           std::vector<std::vector<Matrix>> vertical,
                                           std::vector<std::vector<Matrix>> horizontal) {
  if (dims.empty() || dims.front().empty()) throw Error(ErrorCode::InvalidArgument, "empty grid");
  DoubleComplex dc;
  dc.p_max_ = static_cast<int>(dims.size()) - 1;
  dc.q_max_ = static_cast<int>(dims.front().size()) - 1;
  const std::size_t blocks = dims.size() * dims.front().size();
  dc.dims_.resize(blocks);
  dc.bases_.resize(blocks);
  dc.vertical_.resize(blocks);
  dc.horizontal_.resize(blocks);
  if (vertical.size() != dims.size() || horizontal.size() != dims.size()) {
    throw Error(ErrorCode::InvalidArgument, "map grids do not match the dimension grid");
  }
  for (int p = 0; p <= dc.p_max_; ++p) {
    if (dims[static_cast<std::size_t>(p)].size() != dims.front().size()) {
      throw Error(ErrorCode::InvalidArgument, "ragged dimension grid");
    }
    for (int q = 0; q <= dc.q_max_; ++q) dc.dims_[dc.idx(p, q)] = dims[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)];
  }
  for (int p = 0; p <= dc.p_max_; ++p) {
    for (int q = 0; q <= dc.q_max_; ++q) {
      const Matrix& v = vertical[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)];
      const Matrix& h = horizontal[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)];
      if (v.cols() != dc.block_dim(p, q) || v.rows() != dc.block_dim(p, q + 1) || h.cols() != dc.block_dim(p, q) ||
          h.rows() != dc.block_dim(p + 1, q)) {
        throw Error(ErrorCode::InvalidArgument, "block map has the wrong shape");
      }
      dc.vertical_[dc.idx(p, q)] = v;
      dc.horizontal_[dc.idx(p, q)] = h;
    }
  }
  if (!dc.square_zero()) throw Error(ErrorCode::SquareZeroViolation, "total differential does not square to zero");
  dc.assemble_total();
  return dc;
}

bool DoubleComplex::square_zero() const {
  for (int p = 0; p <= p_max_; ++p) {
    for (int q = 0; q <= q_max_; ++q) {
      if (q + 1 <= q_max_ && !multiply_or_empty(vertical(p, q + 1), vertical(p, q)).is_zero()) return false;
      if (p + 1 <= p_max_ && !multiply_or_empty(horizontal(p + 1, q), horizontal(p, q)).is_zero()) return false;
      if (p + 1 <= p_max_ && q + 1 <= q_max_) {
        Matrix anti = multiply_or_empty(vertical(p + 1, q), horizontal(p, q)) +
                      multiply_or_empty(horizontal(p, q + 1), vertical(p, q));
        if (!anti.is_zero()) return false;
      }
    }
  }
  return true;
}

bool DoubleComplex::horizontal_is_zero() const {
  return std::all_of(horizontal_.begin(), horizontal_.end(), [](const Matrix& m) { return m.is_zero(); });
}

std::size_t DoubleComplex::total_dim(int k) const {
  std::size_t total = 0;
  for (int p = 0; p <= p_max_; ++p) total += block_dim(p, k - p);
  return total;
}

std::size_t DoubleComplex::offset(int p, int k) const {
  std::size_t total = 0;
  for (int pp = 0; pp < std::min(p, p_max_ + 1); ++pp) total += block_dim(pp, k - pp);
  return total;
}

void DoubleComplex::assemble_total() {
  total_.clear();
  for (int k = 0; k <= max_total_degree(); ++k) {
    Matrix d(total_dim(k + 1), total_dim(k));
    for (int p = 0; p <= p_max_; ++p) {
      const int q = k - p;
      if (!in_grid(p, q)) continue;
      const std::size_t col0 = offset(p, k);
      if (q + 1 <= q_max_) {
        const Matrix& v = vertical(p, q);
        const std::size_t row0 = offset(p, k + 1);
        for (std::size_t r = 0; r < v.rows(); ++r)
          for (std::size_t c = 0; c < v.cols(); ++c) d(row0 + r, col0 + c) += v(r, c);
      }
      if (p + 1 <= p_max_) {
        const Matrix& h = horizontal(p, q);
        const std::size_t row0 = offset(p + 1, k + 1);
        for (std::size_t r = 0; r < h.rows(); ++r)
          for (std::size_t c = 0; c < h.cols(); ++c) d(row0 + r, col0 + c) += h(r, c);
      }
    }
    total_.push_back(std::move(d));
  }
}

Vector DoubleComplex::embed(int p, int q, const Vector& block) const {
  const int k = p + q;
  Vector out(total_dim(k));
  const std::size_t off = offset(p, k);
  for (std::size_t i = 0; i < block.size(); ++i) out[off + i] = block[i];
  return out;
}

Vector DoubleComplex::component(int p, int q, const Vector& total) const {
  const std::size_t off = offset(p, p + q);
  Vector out(block_dim(p, q));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = total[off + i];
  return out;
}

SparseElement DoubleComplex::to_element(int p, int q, const Vector& block) const {
  if (!side_) throw Error(ErrorCode::InvalidArgument, "raw complexes have no monomial basis");
  return SparseElement::from_vector(*side_, n_, p, q, block_basis(p, q), block);
}

Vector DoubleComplex::from_element(const SparseElement& x) const {
  if (!side_ || x.side() != *side_) throw Error(ErrorCode::SideMismatch, "element does not belong to this complex");
  if (x.is_zero()) return Vector(block_dim(x.p(), x.q()));
  return x.to_vector(block_basis(x.p(), x.q()));
}

// ---------------------------------------------------------------------------
// Pages

namespace {

/// Z(ps, pt, k) = {x ∈ F^{ps} K^k : Dx ∈ F^{pt} K^{k+1}}, memoized across pages.
class CycleCache {
 public:
  explicit CycleCache(const DoubleComplex& dc) : dc_(dc) {}

  const Subspace& get(int ps, int pt, int k) {
    ps = std::max(ps, 0);
    pt = std::clamp(pt, ps, dc_.p_max() + 1);
    if (k < 0 || k > dc_.max_total_degree() || ps > dc_.p_max()) {
      ps = dc_.p_max() + 1;
      pt = ps;
    }
    const std::tuple<int, int, int> key(ps, pt, k);
    {
      std::lock_guard<std::mutex> lock(mutex_);
      auto it = cache_.find(key);
      if (it != cache_.end()) return it->second;
    }
    Subspace z = compute(ps, pt, k);
    std::lock_guard<std::mutex> lock(mutex_);
    return cache_.try_emplace(key, std::move(z)).first->second;
  }

 private:
  Subspace compute(int ps, int pt, int k) const {
    if (k < 0 || k > dc_.max_total_degree()) return Subspace(0);
    const std::size_t dim = dc_.total_dim(k);
    if (ps > dc_.p_max()) return Subspace(dim);
    const std::size_t c0 = dc_.offset(ps, k);
    // D preserves the filtration, so rows of blocks below ps vanish on F^{ps}.
    const std::size_t r0 = dc_.offset(ps, k + 1);
    const std::size_t r1 = dc_.offset(pt, k + 1);
    std::vector<Vector> gens;
    if (r1 <= r0) {
      for (std::size_t c = c0; c < dim; ++c) {
        Vector e(dim);
        e[c] = 1;
        gens.push_back(std::move(e));
      }
    } else {
      const Matrix& d = dc_.total_differential(k);
      Matrix sub(r1 - r0, dim - c0);
      for (std::size_t r = r0; r < r1; ++r)
        for (std::size_t c = c0; c < dim; ++c) sub(r - r0, c - c0) = d(r, c);
      for (const Vector& x : kernel(sub)) {
        Vector full(dim);
        for (std::size_t i = 0; i < x.size(); ++i) full[c0 + i] = x[i];
        gens.push_back(std::move(full));
      }
    }
    return Subspace(dim, gens);
  }

  const DoubleComplex& dc_;
  std::mutex mutex_;
  std::map<std::tuple<int, int, int>, Subspace> cache_;
};

PageEntry compute_entry(const DoubleComplex& dc, CycleCache& cache, int r, int p, int q) {
  const int k = p + q;
  PageEntry e;
  e.p = p;
  e.q = q;
  const Subspace& numerator = cache.get(p, p + r, k);
  e.denominator = cache.get(p + 1, p + r, k);
  if (k >= 1) {
    const Subspace& source = cache.get(p - r + 1, p, k - 1);
    const Matrix& d = dc.total_differential(k - 1);
    for (const Vector& x : source.basis()) e.denominator.insert(d.apply(x));
  }
  Subspace acc = e.denominator;
  for (const Vector& z : numerator.basis()) {
    if (acc.insert(z)) e.representatives.push_back(z);
  }
  e.dim = e.representatives.size();
  return e;
}

void compute_differential(const DoubleComplex& dc, SpectralPage& page, PageEntry& e) {
  const int tp = e.p + page.r;
  const int tq = e.q - page.r + 1;
  if (!dc.in_grid(tp, tq)) {
    e.d = Matrix(0, e.dim);
    return;
  }
  const PageEntry& t = page.at(tp, tq);
  e.d = Matrix(t.dim, e.dim);
  if (e.dim == 0 || t.dim == 0) return;
  std::vector<Vector> cols = t.representatives;
  for (const Vector& b : t.denominator.basis()) cols.push_back(b);
  const std::size_t target_dim = dc.total_dim(e.p + e.q + 1);
  Matrix basis = Matrix::from_columns(target_dim, cols);
  const Matrix& d = dc.total_differential(e.p + e.q);
  std::vector<Vector> images;
  for (const Vector& x : e.representatives) images.push_back(d.apply(x));
  std::optional<Matrix> coeffs = solve(basis, Matrix::from_columns(target_dim, images));
  if (!coeffs) throw Error(ErrorCode::SquareZeroViolation, "image of a page cycle is not a cycle of the target");
  for (std::size_t j = 0; j < t.dim; ++j)
    for (std::size_t i = 0; i < e.dim; ++i) e.d(j, i) = (*coeffs)(j, i);
}

SpectralPage compute_page(const DoubleComplex& dc, CycleCache& cache, int r, int jobs) {
  SpectralPage page;
  page.r = r;
  page.p_max = dc.p_max();
  page.q_max = dc.q_max();
  const std::size_t count = static_cast<std::size_t>((dc.p_max() + 1) * (dc.q_max() + 1));
  page.entries.resize(count);
  auto coords = [&](std::size_t i) {
    return std::pair<int, int>(static_cast<int>(i) / (dc.q_max() + 1), static_cast<int>(i) % (dc.q_max() + 1));
  };
  run_parallel(count, jobs, [&](std::size_t i) {
    auto [p, q] = coords(i);
    page.entries[i] = compute_entry(dc, cache, r, p, q);
  });
  run_parallel(count, jobs, [&](std::size_t i) { compute_differential(dc, page, page.entries[i]); });
  return page;
}

}  // namespace

bool SpectralPage::d_is_zero() const {
  return std::all_of(entries.begin(), entries.end(), [](const PageEntry& e) { return e.d.is_zero(); });
}

PagesResult compute_pages(const DoubleComplex& dc, int r_max, int jobs) {
  PagesResult result;
  CycleCache cache(dc);
  for (int r = 0; r <= r_max; ++r) result.pages.push_back(compute_page(dc, cache, r, jobs));
  for (const SpectralPage& page : result.pages) {
    const int r = page.r;
    for (const PageEntry& e : page.entries) {
      const int tp = e.p + r, tq = e.q - r + 1;
      if (dc.in_grid(tp, tq) && dc.in_grid(tp + r, tq - r + 1)) {
        const PageEntry& t = page.at(tp, tq);
        if (!(t.d * e.d).is_zero()) result.square_zero = false;
      }
      if (r + 1 <= r_max) {
        std::size_t kernel_dim = e.dim - rank(e.d);
        std::size_t image_dim = 0;
        if (dc.in_grid(e.p - r, e.q + r - 1)) image_dim = rank(page.at(e.p - r, e.q + r - 1).d);
        if (result.pages[static_cast<std::size_t>(r + 1)].at(e.p, e.q).dim != kernel_dim - image_dim) {
          result.dims_consistent = false;
        }
      }
    }
  }
  return result;
}

std::vector<SpectralPage> pages(const DoubleComplex& dc, int r_max, int jobs) {
  return compute_pages(dc, r_max, jobs).pages;
}

int stable_page(const DoubleComplex& dc) { return std::min(dc.p_max(), dc.q_max() + 1) + 1; }

int degeneracy_page(const PagesResult& result) {
  int last = 0;
  for (const SpectralPage& page : result.pages) {
    if (page.r >= 1 && !page.d_is_zero()) last = page.r;
  }
  return last + 1;
}

int degeneracy_page(const DoubleComplex& dc, int jobs) {
  return degeneracy_page(compute_pages(dc, stable_page(dc), jobs));
}

std::vector<std::size_t> total_cohomology(const DoubleComplex& dc) {
  const int top = dc.max_total_degree();
  std::vector<std::size_t> ranks(static_cast<std::size_t>(top + 1));
  for (int k = 0; k <= top; ++k) ranks[static_cast<std::size_t>(k)] = rank(dc.total_differential(k));
  std::vector<std::size_t> out;
  for (int k = 0; k <= top; ++k) {
    std::size_t h = dc.total_dim(k) - ranks[static_cast<std::size_t>(k)];
    if (k > 0) h -= ranks[static_cast<std::size_t>(k - 1)];
    out.push_back(h);
  }
  return out;
}

bool einfty_consistent(const DoubleComplex& dc, const SpectralPage& einfty) {
  std::vector<std::size_t> h = total_cohomology(dc);
  long euler_h = 0, euler_k = 0;
  for (int k = 0; k <= dc.max_total_degree(); ++k) {
    std::size_t sum = 0;
    for (int p = 0; p <= dc.p_max(); ++p)
      if (dc.in_grid(p, k - p)) sum += einfty.at(p, k - p).dim;
    if (sum != h[static_cast<std::size_t>(k)]) return false;
    long sign = (k % 2 == 0) ? 1 : -1;
    euler_h += sign * static_cast<long>(h[static_cast<std::size_t>(k)]);
    euler_k += sign * static_cast<long>(dc.total_dim(k));
  }
  return euler_h == euler_k;
}

// ---------------------------------------------------------------------------
// d2 by chasing

Vector d2_by_chasing(const DoubleComplex& dc, int p, int q, const Vector& v) {
  if (!dc.in_grid(p, q) || v.size() != dc.block_dim(p, q)) {
    throw Error(ErrorCode::InvalidArgument, "cycle does not match the block");
  }
  if (q + 1 <= dc.q_max() && !is_zero(dc.vertical(p, q).apply(v))) {
    throw Error(ErrorCode::NotACycle, "element is not ∂̄-closed");
  }
  if (p + 1 > dc.p_max()) return Vector();
  Vector a = dc.horizontal(p, q).apply(v);
  if (q - 1 < 0) {
    if (!is_zero(a)) throw Error(ErrorCode::NotE2Class, "horizontal image is not vertically exact");
    return Vector();
  }
  std::optional<Vector> w = solve(dc.vertical(p + 1, q - 1), scaled(a, -1));
  if (!w) throw Error(ErrorCode::NotE2Class, "horizontal image is not vertically exact");
  if (p + 2 > dc.p_max()) return Vector();
  return dc.horizontal(p + 1, q - 1).apply(*w);
}

SparseElement d2_by_chasing(const DoubleComplex& dc, int p, int q, const SparseElement& cycle) {
  Vector v = cycle.is_zero() ? Vector(dc.block_dim(p, q)) : dc.from_element(cycle);
  Vector out = d2_by_chasing(dc, p, q, v);
  if (out.empty()) return SparseElement(*dc.side(), dc.n(), p + 2, q - 1 < 0 ? 0 : q - 1);
  return dc.to_element(p + 2, q - 1, out);
}

namespace {

bool chase_check(const DoubleComplex& dc, const SpectralPage& e2, bool against_matrix) {
  for (const PageEntry& e : e2.entries) {
    const int tp = e.p + 2, tq = e.q - 1;
    for (std::size_t i = 0; i < e.dim; ++i) {
      Vector v = dc.component(e.p, e.q, e.representatives[i]);
      Vector image = d2_by_chasing(dc, e.p, e.q, v);
      if (!dc.in_grid(tp, tq)) continue;
      const PageEntry& t = e2.at(tp, tq);
      Vector diff = dc.embed(tp, tq, image);
      if (against_matrix) {
        for (std::size_t j = 0; j < t.dim; ++j) diff = diff - scaled(t.representatives[j], e.d(j, i));
      }
      if (!t.denominator.contains(diff)) return false;
    }
  }
  return true;
}

}  // namespace

bool d2_chasing_agrees(const DoubleComplex& dc, const SpectralPage& e2) { return chase_check(dc, e2, true); }
bool d2_chasing_vanishes(const DoubleComplex& dc, const SpectralPage& e2) { return chase_check(dc, e2, false); }

// ---------------------------------------------------------------------------
// φ as a map of complexes

bool chain_map_holds(const Calculus& calc, const PoissonCandidate& lambda) {
  const std::size_t n = calc.n();
  for (int p = 0; p <= static_cast<int>(n); ++p) {
    for (int q = 0; q <= static_cast<int>(n); ++q) {
      for (Monomial m : enumerate_basis(n, p, q)) {
        SparseElement x = SparseElement::monomial(Side::B, n, m);
        SparseElement fx = calc.phi(lambda.lambda, x);
        if (calc.dbar(fx) != calc.phi(lambda.lambda, calc.dbar(x))) return false;
        if (calc.ad_lambda(lambda, fx) != calc.phi(lambda.lambda, calc.del(x))) return false;
      }
    }
  }
  return true;
}

PageMap page_map(const Calculus& calc, const PoissonCandidate& lambda, const DoubleComplex& b_dc,
                 const SpectralPage& b_e1, const DoubleComplex& a_dc, const SpectralPage& a_e1) {
  const int n = static_cast<int>(calc.n());
  PageMap out;
  out.maps.resize(static_cast<std::size_t>((n + 1) * (n + 1)));
  auto at = [n](int p, int q) { return static_cast<std::size_t>(p * (n + 1) + q); };
  for (int p = 0; p <= n; ++p) {
    for (int q = 0; q <= n; ++q) {
      const PageEntry& be = b_e1.at(p, q);
      const PageEntry& ae = a_e1.at(p, q);
      Matrix m(ae.dim, be.dim);
      std::vector<Vector> cols = ae.representatives;
      for (const Vector& b : ae.denominator.basis()) cols.push_back(b);
      const std::size_t dim = a_dc.total_dim(p + q);
      Matrix basis = Matrix::from_columns(dim, cols);
      std::vector<Vector> images;
      for (std::size_t i = 0; i < be.dim; ++i) {
        SparseElement x = b_dc.to_element(p, q, b_dc.component(p, q, be.representatives[i]));
        images.push_back(a_dc.embed(p, q, a_dc.from_element(calc.phi(lambda.lambda, x))));
      }
      if (be.dim > 0) {
        std::optional<Matrix> coeffs = solve(basis, Matrix::from_columns(dim, images));
        if (!coeffs) throw Error(ErrorCode::ChainMapViolation, "φ does not send a ∂̄-cycle to a ∂̄-cycle");
        for (std::size_t j = 0; j < ae.dim; ++j)
          for (std::size_t i = 0; i < be.dim; ++i) m(j, i) = (*coeffs)(j, i);
      }
      if (p == 0 && !(m.rows() == m.cols() && m == Matrix::identity(m.rows()))) out.identity_on_p0 = false;
      out.maps[at(p, q)] = std::move(m);
    }
  }
  for (int p = 0; p < n; ++p) {
    for (int q = 0; q <= n; ++q) {
      Matrix lhs = a_e1.at(p, q).d * out.maps[at(p, q)];
      Matrix rhs = out.maps[at(p + 1, q)] * b_e1.at(p, q).d;
      Matrix residual = lhs + Matrix(rhs.rows(), rhs.cols());
      for (std::size_t r = 0; r < rhs.rows(); ++r)
        for (std::size_t c = 0; c < rhs.cols(); ++c) residual(r, c) -= rhs(r, c);
      if (!residual.is_zero()) out.commutes = false;
      out.residuals.push_back(std::move(residual));
    }
  }
  return out;
}

}  // namespace hpss
