#include "hpss/calculus.hpp"

#include <bit>

#include "hpss/error.hpp"

namespace hpss {

namespace {

std::vector<std::size_t> generators_of(Monomial m) {
  std::vector<std::size_t> out;
  for (std::uint64_t b = m.bits; b; b &= b - 1) out.push_back(static_cast<std::size_t>(std::countr_zero(b)));
  return out;
}

}  // namespace

Calculus::Calculus(const ComplexifiedAlgebra& alg) : alg_(&alg) {
  if (!alg.is_integrable()) throw Error(ErrorCode::NonIntegrable, "complex structure is not integrable");
  const std::size_t n = alg.n();
  const std::size_t d = 2 * n;
  const StructureConstants& sc = alg.constants();

  for (std::size_t c = 0; c < d; ++c) {
    std::array<SparseElement, 3> parts{SparseElement(Side::B, n, 2, 0), SparseElement(Side::B, n, 1, 1),
                                       SparseElement(Side::B, n, 0, 2)};
    for (std::size_t a = 0; a < d; ++a) {
      for (std::size_t b = a + 1; b < d; ++b) {
        const Scalar& coeff = sc(a, b)[c];
        if (coeff.is_zero()) continue;
        Monomial m{(1ULL << a) | (1ULL << b)};
        parts[static_cast<std::size_t>(m.q(n))].add(m, -coeff);
      }
    }
    d_parts_.push_back(std::move(parts));
  }

  for (std::size_t a = 0; a < n; ++a) {
    // ∂̄T_a = Σ_k ω̄^k ∧ pr^{1,0}[T̄_k, T_a], stored as −c T_b∧ω̄^k.
    SparseElement img(Side::A, n, 1, 1);
    for (std::size_t k = 0; k < n; ++k) {
      const Vector& br = sc(n + k, a);
      for (std::size_t b = 0; b < n; ++b) {
        if (!br[b].is_zero()) img.add(Monomial{(1ULL << b) | (1ULL << (n + k))}, -br[b]);
      }
    }
    dbar_a_.push_back(std::move(img));
  }
  for (std::size_t j = 0; j < n; ++j) {
    SparseElement img(Side::A, n, 0, 2);
    for (const auto& [m, c] : d_parts_[n + j][2].terms()) img.add(m, c);
    dbar_a_.push_back(std::move(img));
  }

  for (std::size_t c = 0; c < d; ++c) {
    bool holo = c < n;
    dbar_b_.push_back(d_parts_[c][holo ? 1 : 2]);
    del_b_.push_back(d_parts_[c][holo ? 0 : 1]);
  }

  gen_brackets_.resize(d);
  for (std::size_t g = 0; g < d; ++g)
    for (std::size_t h = 0; h < d; ++h) gen_brackets_[g].push_back(bracket_generators(g, h));
}

SparseElement Calculus::bracket_generators(std::size_t g, std::size_t h) const {
  const std::size_t n = alg_->n();
  const StructureConstants& sc = alg_->constants();
  if (g < n && h < n) {
    SparseElement out(Side::A, n, 1, 0);
    const Vector& br = sc(g, h);
    for (std::size_t c = 0; c < n; ++c) out.add(Monomial{1ULL << c}, br[c]);
    return out;
  }
  if (g >= n && h >= n) return SparseElement(Side::A, n, 0, 1);
  const bool swap = g >= n;
  const std::size_t a = swap ? h : g;
  const std::size_t j = (swap ? g : h) - n;
  // [T_a, ω̄^j] = L_{T_a} ω̄^j = −Σ_k ω̄^j([T_a, T̄_k]) ω̄^k
  SparseElement out(Side::A, n, 0, 1);
  for (std::size_t k = 0; k < n; ++k) {
    const Scalar& c = sc(a, n + k)[n + j];
    if (!c.is_zero()) out.add(Monomial{1ULL << (n + k)}, swap ? c : -c);
  }
  return out;
}

SparseElement Calculus::apply_derivation(const SparseElement& x, const std::vector<SparseElement>& images, int dp,
                                         int dq) const {
  const std::size_t n = alg_->n();
  SparseElement out(x.side(), n, x.p() + dp, x.q() + dq);
  for (const auto& [m, c] : x.terms()) {
    std::vector<std::size_t> gens = generators_of(m);
    for (std::size_t i = 0; i < gens.size(); ++i) {
      const SparseElement& img = images[gens[i]];
      if (img.is_zero()) continue;
      // g_1..δ(g_i)..g_k = (−1)^{i−1} (rest) ∧ δ(g_i), since δ(g_i) has even degree
      Monomial rest{m.bits & ~(1ULL << gens[i])};
      Scalar base = (i % 2 == 0) ? c : -c;
      for (const auto& [mi, ci] : img.terms()) {
        int s = wedge_sign(rest, mi);
        if (s == 0) continue;
        out.add(Monomial{rest.bits | mi.bits}, s > 0 ? base * ci : -(base * ci));
      }
    }
  }
  return out;
}

SparseElement Calculus::dbar(const SparseElement& x) const {
  if (x.n() != alg_->n()) throw Error(ErrorCode::DegreeMismatch, "element does not match the algebra");
  return apply_derivation(x, x.side() == Side::A ? dbar_a_ : dbar_b_, 0, 1);
}

SparseElement Calculus::del(const SparseElement& x) const {
  if (x.side() != Side::B) throw Error(ErrorCode::SideMismatch, "del acts on B-side forms");
  if (x.n() != alg_->n()) throw Error(ErrorCode::DegreeMismatch, "element does not match the algebra");
  return apply_derivation(x, del_b_, 1, 0);
}

SparseElement Calculus::schouten(const SparseElement& a, const SparseElement& b) const {
  const std::size_t n = alg_->n();
  if (a.side() != Side::A || b.side() != Side::A) throw Error(ErrorCode::SideMismatch, "schouten acts on A-side");
  if (a.n() != n || b.n() != n) throw Error(ErrorCode::DegreeMismatch, "element does not match the algebra");
  if (a.q() != 0 && b.q() != 0) {
    throw Error(ErrorCode::UnsupportedPair, "schouten needs a pure polyvector on at least one side");
  }
  const int p = a.p() + b.p() - 1;
  SparseElement out(Side::A, n, p < 0 ? 0 : p, a.q() + b.q());
  if (p < 0) return out;
  for (const auto& [mu, cu] : a.terms()) {
    std::vector<std::size_t> us = generators_of(mu);
    for (const auto& [mv, cv] : b.terms()) {
      std::vector<std::size_t> vs = generators_of(mv);
      Scalar cuv = cu * cv;
      for (std::size_t i = 0; i < us.size(); ++i) {
        Monomial rest_u{mu.bits & ~(1ULL << us[i])};
        for (std::size_t j = 0; j < vs.size(); ++j) {
          const SparseElement& br = gen_brackets_[us[i]][vs[j]];
          if (br.is_zero()) continue;
          Monomial rest_v{mv.bits & ~(1ULL << vs[j])};
          int base = ((i + j) % 2 == 0) ? 1 : -1;
          int s_uv = wedge_sign(rest_u, rest_v);
          if (s_uv == 0) continue;
          for (const auto& [mb, cb] : br.terms()) {
            int s = wedge_sign(mb, rest_u);
            if (s == 0) continue;
            int s2 = wedge_sign(Monomial{mb.bits | rest_u.bits}, rest_v);
            if (s2 == 0) continue;
            Scalar c = cuv * cb;
            out.add(Monomial{mb.bits | rest_u.bits | rest_v.bits}, base * s * s2 > 0 ? c : -c);
          }
        }
      }
    }
  }
  return out;
}

SparseElement Calculus::ad_lambda(const PoissonCandidate& lambda, const SparseElement& x, bool raw) const {
  if (lambda.lambda.p() != 2 || lambda.lambda.q() != 0 || lambda.lambda.side() != Side::A) {
    if (!lambda.lambda.is_zero()) throw Error(ErrorCode::DegreeMismatch, "Λ must be an A-side (2,0) element");
  }
  if (!raw && !(lambda.is_holomorphic && lambda.is_poisson)) {
    throw Error(ErrorCode::NotPoisson, "Λ is not a holomorphic Poisson bivector");
  }
  if (lambda.lambda.is_zero()) {
    return SparseElement(Side::A, alg_->n(), x.p() + 1, x.q());
  }
  return schouten(lambda.lambda, x);
}

PoissonCandidate Calculus::check_holomorphic_poisson(const SparseElement& lambda) const {
  if (lambda.side() != Side::A || (!lambda.is_zero() && (lambda.p() != 2 || lambda.q() != 0))) {
    throw Error(ErrorCode::DegreeMismatch, "Λ must be an A-side (2,0) element");
  }
  PoissonCandidate out{lambda, false, false};
  if (lambda.is_zero()) {
    out.lambda = SparseElement(Side::A, alg_->n(), 2, 0);
    out.is_holomorphic = out.is_poisson = true;
    return out;
  }
  out.is_holomorphic = dbar(lambda).is_zero();
  out.is_poisson = schouten(lambda, lambda).is_zero();
  return out;
}

SparseElement Calculus::phi(const SparseElement& lambda, const SparseElement& x) const {
  const std::size_t n = alg_->n();
  if (x.side() != Side::B) throw Error(ErrorCode::SideMismatch, "phi acts on B-side forms");
  if (lambda.side() != Side::A || (!lambda.is_zero() && (lambda.p() != 2 || lambda.q() != 0))) {
    throw Error(ErrorCode::DegreeMismatch, "Λ must be an A-side (2,0) element");
  }
  SparseElement bivector = lambda.is_zero() ? SparseElement(Side::A, n, 2, 0) : lambda;
  std::vector<SparseElement> images;
  for (std::size_t a = 0; a < n; ++a) {
    images.push_back(-contract(bivector, SparseElement::generator(Side::B, n, a)));
  }
  for (std::size_t j = 0; j < n; ++j) images.push_back(SparseElement::generator(Side::A, n, n + j));

  SparseElement out(Side::A, n, x.p(), x.q());
  for (const auto& [m, c] : x.terms()) {
    SparseElement prod = SparseElement::scalar(Side::A, n, c);
    for (std::size_t g : generators_of(m)) {
      prod = wedge(prod, images[g]);
      if (prod.is_zero()) break;
    }
    out += prod;
  }
  return out;
}

SparseElement dbar(const ComplexifiedAlgebra& alg, const SparseElement& x) { return Calculus(alg).dbar(x); }
SparseElement del(const ComplexifiedAlgebra& alg, const SparseElement& x) { return Calculus(alg).del(x); }
SparseElement schouten(const ComplexifiedAlgebra& alg, const SparseElement& a, const SparseElement& b) {
  return Calculus(alg).schouten(a, b);
}
SparseElement ad_lambda(const ComplexifiedAlgebra& alg, const PoissonCandidate& lambda, const SparseElement& x,
                        bool raw) {
  return Calculus(alg).ad_lambda(lambda, x, raw);
}
PoissonCandidate check_holomorphic_poisson(const ComplexifiedAlgebra& alg, const SparseElement& lambda) {
  return Calculus(alg).check_holomorphic_poisson(lambda);
}
SparseElement phi(const ComplexifiedAlgebra& alg, const SparseElement& lambda, const SparseElement& x) {
  return Calculus(alg).phi(lambda, x);
}

}  // namespace hpss
