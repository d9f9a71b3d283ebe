#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "hpss/algebra.hpp"
#include "hpss/gaussian_rational.hpp"
#include "hpss/linalg.hpp"

namespace hpss {

/// A: polyvector-valued (0,q)-forms, generators T_0..T_{n-1} then ω̄^0..ω̄^{n-1}.
/// B: (p,q)-forms, generators ω^0..ω^{n-1} then ω̄^0..ω̄^{n-1}.
enum class Side { A, B };

const char* to_string(Side side);

/// Wedge of generators; bit g set means generator g is present. Bits 0..n-1 are the
/// degree-(1,0) factor, bits n..2n-1 the (0,1)-forms, and the factors are always written
/// in increasing generator order.
struct Monomial {
  std::uint64_t bits = 0;

  static Monomial from_indices(std::size_t n, const std::vector<std::size_t>& vec,
                               const std::vector<std::size_t>& form);
  std::vector<std::size_t> vec_indices(std::size_t n) const;
  std::vector<std::size_t> form_indices(std::size_t n) const;
  int p(std::size_t n) const;
  int q(std::size_t n) const;
  int degree() const;

  friend bool operator==(Monomial a, Monomial b) { return a.bits == b.bits; }
  friend bool operator!=(Monomial a, Monomial b) { return a.bits != b.bits; }
};

/// Lexicographic order on increasing generator lists.
struct MonomialLess {
  bool operator()(Monomial a, Monomial b) const;
};

/// Sign of a ∧ b expressed in the canonical order; 0 when a and b share a generator.
int wedge_sign(Monomial a, Monomial b);

class SparseElement {
 public:
  using Terms = std::map<Monomial, Scalar, MonomialLess>;

  SparseElement(Side side, std::size_t n, int p, int q);

  static SparseElement monomial(Side side, std::size_t n, Monomial m, const Scalar& c = 1);
  static SparseElement scalar(Side side, std::size_t n, const Scalar& c);
  /// Degree-one generator g (0 <= g < 2n).
  static SparseElement generator(Side side, std::size_t n, std::size_t g, const Scalar& c = 1);

  Side side() const { return side_; }
  std::size_t n() const { return n_; }
  int p() const { return p_; }
  int q() const { return q_; }
  int degree() const { return p_ + q_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Scalar coefficient(Monomial m) const;

  void add(Monomial m, const Scalar& c);
  SparseElement& operator+=(const SparseElement& other);
  SparseElement& operator-=(const SparseElement& other);
  SparseElement& operator*=(const Scalar& s);

  friend SparseElement operator+(SparseElement a, const SparseElement& b) { return a += b; }
  friend SparseElement operator-(SparseElement a, const SparseElement& b) { return a -= b; }
  friend SparseElement operator*(const Scalar& s, SparseElement a) { return a *= s; }
  friend SparseElement operator-(SparseElement a) { return a *= Scalar(-1); }
  friend bool operator==(const SparseElement& a, const SparseElement& b);
  friend bool operator!=(const SparseElement& a, const SparseElement& b) { return !(a == b); }

  /// Coordinates in enumerate_basis(n, p, q).
  Vector to_vector(const std::vector<Monomial>& basis) const;
  static SparseElement from_vector(Side side, std::size_t n, int p, int q, const std::vector<Monomial>& basis,
                                   const Vector& coords);

  std::string to_string(const std::vector<std::string>& holo_labels = {}) const;

 private:
  Side side_;
  std::size_t n_;
  int p_;
  int q_;
  Terms terms_;
};

SparseElement wedge(const SparseElement& a, const SparseElement& b);

/// Λω for an A-side (2,0) element and a B-side (1,0) form: γ(Λω) = Λ(ω, γ).
SparseElement contract(const SparseElement& bivector, const SparseElement& form);

std::vector<Monomial> enumerate_basis(std::size_t n, int p, int q);
std::vector<Monomial> enumerate_basis(const ComplexifiedAlgebra& alg, Side side, int p, int q);

/// x(α_1, ..., α_k) for x of total degree k. Each argument is the vector of its pairings
/// with the 2n generators; a monomial g_1∧...∧g_k evaluates to det[g_i(α_j)].
Scalar evaluate(const SparseElement& x, const std::vector<Vector>& args);

}  // namespace hpss
