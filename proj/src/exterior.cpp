#include "hpss/exterior.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "hpss/error.hpp"

namespace hpss {

const char* to_string(Side side) { return side == Side::A ? "A" : "B"; }

namespace {

std::uint64_t low_mask(std::size_t n) { return n >= 64 ? ~0ULL : ((1ULL << n) - 1); }

std::vector<std::size_t> bits_of(std::uint64_t bits) {
  std::vector<std::size_t> out;
  while (bits) {
    out.push_back(static_cast<std::size_t>(std::countr_zero(bits)));
    bits &= bits - 1;
  }
  return out;
}

void check_same_space(const SparseElement& a, const SparseElement& b) {
  if (a.side() != b.side()) throw Error(ErrorCode::SideMismatch, "elements live on different sides");
  if (a.n() != b.n()) throw Error(ErrorCode::SideMismatch, "elements live over different dimensions");
}

}  // namespace

// ---------------------------------------------------------------------------
// Monomial

Monomial Monomial::from_indices(std::size_t n, const std::vector<std::size_t>& vec,
                                const std::vector<std::size_t>& form) {
  Monomial m;
  for (std::size_t v : vec) {
    if (v >= n) throw Error(ErrorCode::InvalidArgument, "vector index out of range");
    if (m.bits & (1ULL << v)) throw Error(ErrorCode::InvalidArgument, "repeated index in monomial");
    m.bits |= 1ULL << v;
  }
  for (std::size_t f : form) {
    if (f >= n) throw Error(ErrorCode::InvalidArgument, "form index out of range");
    if (m.bits & (1ULL << (n + f))) throw Error(ErrorCode::InvalidArgument, "repeated index in monomial");
    m.bits |= 1ULL << (n + f);
  }
  return m;
}

std::vector<std::size_t> Monomial::vec_indices(std::size_t n) const { return bits_of(bits & low_mask(n)); }

std::vector<std::size_t> Monomial::form_indices(std::size_t n) const { return bits_of(bits >> n); }

int Monomial::p(std::size_t n) const { return std::popcount(bits & low_mask(n)); }
int Monomial::q(std::size_t n) const { return std::popcount(bits >> n); }
int Monomial::degree() const { return std::popcount(bits); }

bool MonomialLess::operator()(Monomial a, Monomial b) const {
  int da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  std::uint64_t diff = a.bits ^ b.bits;
  if (!diff) return false;
  return (a.bits & (diff & -diff)) != 0;
}

int wedge_sign(Monomial a, Monomial b) {
  if (a.bits & b.bits) return 0;
  int inversions = 0;
  for (std::uint64_t rest = b.bits; rest; rest &= rest - 1) {
    int j = std::countr_zero(rest);
    inversions += std::popcount(a.bits >> (j + 1));
  }
  return (inversions & 1) ? -1 : 1;
}

// ---------------------------------------------------------------------------
// SparseElement

SparseElement::SparseElement(Side side, std::size_t n, int p, int q) : side_(side), n_(n), p_(p), q_(q) {
  if (n > 32) throw Error(ErrorCode::InvalidArgument, "complex dimension above 32 is not supported");
}

SparseElement SparseElement::monomial(Side side, std::size_t n, Monomial m, const Scalar& c) {
  SparseElement e(side, n, m.p(n), m.q(n));
  e.add(m, c);
  return e;
}

SparseElement SparseElement::scalar(Side side, std::size_t n, const Scalar& c) {
  return monomial(side, n, Monomial{}, c);
}

SparseElement SparseElement::generator(Side side, std::size_t n, std::size_t g, const Scalar& c) {
  if (g >= 2 * n) throw Error(ErrorCode::InvalidArgument, "generator index out of range");
  return monomial(side, n, Monomial{1ULL << g}, c);
}

Scalar SparseElement::coefficient(Monomial m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Scalar(0) : it->second;
}

void SparseElement::add(Monomial m, const Scalar& c) {
  if (c.is_zero()) return;
  if (m.p(n_) != p_ || m.q(n_) != q_) throw Error(ErrorCode::DegreeMismatch, "monomial of the wrong bidegree");
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

SparseElement& SparseElement::operator+=(const SparseElement& other) {
  check_same_space(*this, other);
  if (other.is_zero()) return *this;
  if (other.p_ != p_ || other.q_ != q_) {
    if (!is_zero()) throw Error(ErrorCode::DegreeMismatch, "adding elements of different bidegrees");
    p_ = other.p_;
    q_ = other.q_;
  }
  for (const auto& [m, c] : other.terms_) add(m, c);
  return *this;
}

SparseElement& SparseElement::operator-=(const SparseElement& other) { return *this += Scalar(-1) * other; }

SparseElement& SparseElement::operator*=(const Scalar& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= s;
  return *this;
}

bool operator==(const SparseElement& a, const SparseElement& b) {
  if (a.side_ != b.side_ || a.n_ != b.n_) return false;
  if (a.is_zero() && b.is_zero()) return true;
  return a.p_ == b.p_ && a.q_ == b.q_ && a.terms_ == b.terms_;
}

Vector SparseElement::to_vector(const std::vector<Monomial>& basis) const {
  Vector v(basis.size());
  if (terms_.empty()) return v;
  std::size_t found = 0;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    auto it = terms_.find(basis[i]);
    if (it != terms_.end()) {
      v[i] = it->second;
      ++found;
    }
  }
  if (found != terms_.size()) throw Error(ErrorCode::DegreeMismatch, "element has terms outside the given basis");
  return v;
}

SparseElement SparseElement::from_vector(Side side, std::size_t n, int p, int q, const std::vector<Monomial>& basis,
                                         const Vector& coords) {
  SparseElement e(side, n, p, q);
  for (std::size_t i = 0; i < basis.size(); ++i) e.add(basis[i], coords[i]);
  return e;
}

std::string SparseElement::to_string(const std::vector<std::string>& holo_labels) const {
  if (terms_.empty()) return "0";
  auto label = [&](std::size_t k) {
    return k < holo_labels.size() ? holo_labels[k] : "e" + std::to_string(k + 1);
  };
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.to_string() << ")";
    for (std::size_t v : m.vec_indices(n_)) os << "*" << (side_ == Side::A ? label(v) : "d" + label(v));
    for (std::size_t f : m.form_indices(n_)) os << "*d" << label(f) << "bar";
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Operations

SparseElement wedge(const SparseElement& a, const SparseElement& b) {
  check_same_space(a, b);
  SparseElement out(a.side(), a.n(), a.p() + b.p(), a.q() + b.q());
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      int s = wedge_sign(ma, mb);
      if (s == 0) continue;
      Scalar c = ca * cb;
      if (s < 0) c = -c;
      out.add(Monomial{ma.bits | mb.bits}, c);
    }
  }
  return out;
}

SparseElement contract(const SparseElement& bivector, const SparseElement& form) {
  if (bivector.side() != Side::A || form.side() != Side::B) {
    throw Error(ErrorCode::SideMismatch, "contract takes an A-side bivector and a B-side form");
  }
  if (bivector.n() != form.n()) throw Error(ErrorCode::SideMismatch, "elements live over different dimensions");
  if (bivector.p() != 2 || bivector.q() != 0 || form.p() != 1 || form.q() != 0) {
    throw Error(ErrorCode::DegreeMismatch, "contract expects a (2,0) bivector and a (1,0) form");
  }
  const std::size_t n = bivector.n();
  SparseElement out(Side::A, n, 1, 0);
  for (const auto& [mb, cb] : bivector.terms()) {
    std::vector<std::size_t> xy = mb.vec_indices(n);
    for (const auto& [mf, cf] : form.terms()) {
      std::size_t a = mf.vec_indices(n).front();
      // (X∧Y)ω = ω(X) Y − ω(Y) X
      if (xy[0] == a) out.add(Monomial{1ULL << xy[1]}, cb * cf);
      if (xy[1] == a) out.add(Monomial{1ULL << xy[0]}, -(cb * cf));
    }
  }
  return out;
}

std::vector<Monomial> enumerate_basis(std::size_t n, int p, int q) {
  std::vector<Monomial> out;
  if (p < 0 || q < 0 || p > static_cast<int>(n) || q > static_cast<int>(n)) return out;
  const std::uint64_t full = low_mask(n);
  std::vector<std::uint64_t> vecs, forms;
  for (std::uint64_t m = 0; m <= full; ++m) {
    int c = std::popcount(m);
    if (c == p) vecs.push_back(m);
    if (c == q) forms.push_back(m);
  }
  for (std::uint64_t v : vecs)
    for (std::uint64_t f : forms) out.push_back(Monomial{v | (f << n)});
  std::sort(out.begin(), out.end(), MonomialLess{});
  return out;
}

std::vector<Monomial> enumerate_basis(const ComplexifiedAlgebra& alg, Side side, int p, int q) {
  (void)side;
  return enumerate_basis(alg.n(), p, q);
}

Scalar evaluate(const SparseElement& x, const std::vector<Vector>& args) {
  const std::size_t k = static_cast<std::size_t>(x.degree());
  if (args.size() != k) throw Error(ErrorCode::DegreeMismatch, "evaluate needs one argument per degree");
  for (const Vector& a : args) {
    if (a.size() != 2 * x.n()) throw Error(ErrorCode::DegreeMismatch, "argument has the wrong length");
  }
  Scalar total = 0;
  for (const auto& [m, c] : x.terms()) {
    std::vector<std::size_t> gens = bits_of(m.bits);
    Matrix pair(k, k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) pair(i, j) = args[j][gens[i]];
    total += c * determinant(pair);
  }
  return total;
}

}  // namespace hpss
