#include "fockop/gaussian_rational.hpp"

#include <cctype>
#include <cmath>

#include "fockop/error.hpp"

namespace fockop {

GaussianRational GaussianRational::from_complex(Complex z) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
    throw Error(ErrorCode::NonFiniteEntry, "cannot convert a non-finite value to a rational");
  }
  return {mpq_class(z.real()), mpq_class(z.imag())};
}

mpq_class GaussianRational::parse_rational(std::string_view text) {
  std::string s(text);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  std::size_t start = 0;
  while (start < s.size() && std::isspace(static_cast<unsigned char>(s[start]))) ++start;
  s = s.substr(start);
  if (s.empty()) throw Error(ErrorCode::ParseError, "empty rational literal");

  const auto dot = s.find('.');
  if (dot != std::string::npos) {
    // decimal literal: digits before and after the point, optional sign
    bool negative = false;
    std::string body = s;
    if (body[0] == '-' || body[0] == '+') {
      negative = body[0] == '-';
      body = body.substr(1);
    }
    const auto p = body.find('.');
    const std::string whole = body.substr(0, p);
    const std::string frac = body.substr(p + 1);
    if (whole.empty() && frac.empty()) throw Error(ErrorCode::ParseError, "bad decimal '" + s + "'");
    for (char c : whole + frac)
      if (!std::isdigit(static_cast<unsigned char>(c))) throw Error(ErrorCode::ParseError, "bad decimal '" + s + "'");
    mpz_class numerator((whole.empty() ? std::string("0") : whole) + frac, 10);
    mpz_class denominator = 1;
    mpz_ui_pow_ui(denominator.get_mpz_t(), 10, frac.size());
    mpq_class q(numerator, denominator);
    q.canonicalize();
    return negative ? mpq_class(-q) : q;
  }

  mpq_class q;
  const std::string body = (s[0] == '+') ? s.substr(1) : s;
  if (q.set_str(body, 10) != 0) throw Error(ErrorCode::ParseError, "bad rational '" + s + "'");
  if (sgn(q.get_den()) == 0) throw Error(ErrorCode::ParseError, "zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
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
  mpq_class re = re_ * o.re_ - im_ * o.im_;
  mpq_class im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  const mpq_class d = o.norm_squared();
  if (sgn(d) == 0) throw Error(ErrorCode::Inconsistent, "division by zero Gaussian rational");
  *this *= o.conj();
  re_ /= d;
  im_ /= d;
  return *this;
}

std::string GaussianRational::to_string() const {
  if (sgn(im_) == 0) return re_.get_str();
  if (sgn(re_) == 0) return im_.get_str() + "i";
  return re_.get_str() + (sgn(im_) > 0 ? "+" : "") + im_.get_str() + "i";
}

ExactAffineSymbol::ExactAffineSymbol(std::size_t n, std::vector<GaussianRational> a_row_major,
                                     std::vector<GaussianRational> b)
    : n_(n), a_(std::move(a_row_major)), b_(std::move(b)) {
  if (n_ == 0 || a_.size() != n_ * n_ || b_.size() != n_) {
    throw Error(ErrorCode::ShapeMismatch, "exact symbol shape mismatch");
  }
}

ExactAffineSymbol ExactAffineSymbol::from_symbol(const AffineSymbol& symbol) {
  const std::size_t n = symbol.dimension();
  std::vector<GaussianRational> a;
  std::vector<GaussianRational> b;
  a.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      a.push_back(GaussianRational::from_complex(symbol.matrix()(static_cast<Eigen::Index>(i),
                                                                 static_cast<Eigen::Index>(j))));
  for (std::size_t i = 0; i < n; ++i)
    b.push_back(GaussianRational::from_complex(symbol.translation()(static_cast<Eigen::Index>(i))));
  return {n, std::move(a), std::move(b)};
}

AffineSymbol ExactAffineSymbol::to_symbol() const {
  const auto n = static_cast<Eigen::Index>(n_);
  ComplexMatrix a(n, n);
  ComplexVector b(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) a(i, j) = this->a(static_cast<std::size_t>(i), static_cast<std::size_t>(j)).to_complex();
    b(i) = b_[static_cast<std::size_t>(i)].to_complex();
  }
  return {a, b};
}

}  // namespace fockop
