#include "hpss/gaussian_rational.hpp"

#include <ostream>

#include "hpss/error.hpp"

namespace hpss {

namespace {

mpq_class parse_rational(const std::string& text) {
  if (text.empty() || text == "+") return 1;
  if (text == "-") return -1;
  std::string body = text[0] == '+' ? text.substr(1) : text;
  mpq_class q;
  if (q.set_str(body, 10) != 0) {
    throw Error(ErrorCode::SchemaError, "malformed rational '" + text + "'");
  }
  if (q.get_den() == 0) throw Error(ErrorCode::SchemaError, "zero denominator in '" + text + "'");
  q.canonicalize();
  return q;
}

}  // namespace

GaussianRational::GaussianRational(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
  re_.canonicalize();
  im_.canonicalize();
}

GaussianRational GaussianRational::parse(const std::string& text) {
  if (text.empty()) throw Error(ErrorCode::SchemaError, "empty scalar");
  if (text.back() != 'i') return {parse_rational(text), 0};
  std::string body = text.substr(0, text.size() - 1);
  std::size_t split = std::string::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    if ((body[k] == '+' || body[k] == '-') && body[k - 1] != '/') {
      split = k;
      break;
    }
  }
  if (split == std::string::npos) return {0, parse_rational(body)};
  return {parse_rational(body.substr(0, split)), parse_rational(body.substr(split))};
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  if (sgn(im_) == 0 && sgn(o.im_) == 0) {
    re_ *= o.re_;
    return *this;
  }
  mpq_class re = re_ * o.re_ - im_ * o.im_;
  mpq_class im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

void GaussianRational::add_mul(const GaussianRational& a, const GaussianRational& b) {
  thread_local mpq_class t;
  const bool a_real = sgn(a.im_) == 0, b_real = sgn(b.im_) == 0;
  mpq_mul(t.get_mpq_t(), a.re_.get_mpq_t(), b.re_.get_mpq_t());
  re_ += t;
  if (a_real && b_real) return;
  if (!a_real && !b_real) {
    mpq_mul(t.get_mpq_t(), a.im_.get_mpq_t(), b.im_.get_mpq_t());
    re_ -= t;
  }
  if (!b_real) {
    mpq_mul(t.get_mpq_t(), a.re_.get_mpq_t(), b.im_.get_mpq_t());
    im_ += t;
  }
  if (!a_real) {
    mpq_mul(t.get_mpq_t(), a.im_.get_mpq_t(), b.re_.get_mpq_t());
    im_ += t;
  }
}

void GaussianRational::sub_mul(const GaussianRational& a, const GaussianRational& b) {
  thread_local mpq_class t;
  const bool a_real = sgn(a.im_) == 0, b_real = sgn(b.im_) == 0;
  mpq_mul(t.get_mpq_t(), a.re_.get_mpq_t(), b.re_.get_mpq_t());
  re_ -= t;
  if (a_real && b_real) return;
  if (!a_real && !b_real) {
    mpq_mul(t.get_mpq_t(), a.im_.get_mpq_t(), b.im_.get_mpq_t());
    re_ += t;
  }
  if (!b_real) {
    mpq_mul(t.get_mpq_t(), a.re_.get_mpq_t(), b.im_.get_mpq_t());
    im_ -= t;
  }
  if (!a_real) {
    mpq_mul(t.get_mpq_t(), a.im_.get_mpq_t(), b.re_.get_mpq_t());
    im_ -= t;
  }
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  if (o.is_zero()) throw Error(ErrorCode::InvalidArgument, "division by zero");
  if (sgn(o.im_) == 0) {
    re_ /= o.re_;
    im_ /= o.re_;
    return *this;
  }
  mpq_class n = o.norm();
  *this *= o.conj();
  re_ /= n;
  im_ /= n;
  return *this;
}

std::string GaussianRational::to_string() const {
  if (sgn(im_) == 0) return re_.get_str();
  std::string im_part;
  if (im_ == 1) {
    im_part = "i";
  } else if (im_ == -1) {
    im_part = "-i";
  } else {
    im_part = im_.get_str() + "i";
  }
  if (sgn(re_) == 0) return im_part;
  return re_.get_str() + (sgn(im_) > 0 ? "+" : "") + im_part;
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& z) { return os << z.to_string(); }

}  // namespace hpss
