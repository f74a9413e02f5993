#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "fockop/linalg.hpp"
#include "fockop/symbol.hpp"

namespace fockop {

/// p + q i with p, q exact rationals.
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(mpq_class re, mpq_class im = 0) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
  }
  GaussianRational(long re) : re_(re), im_(0) {}  // NOLINT(google-explicit-constructor)

  /// Exact binary value of a finite double pair.
  static GaussianRational from_complex(Complex z);
  /// Parses "p", "p/q" or a decimal literal such as "0.25" exactly.
  static mpq_class parse_rational(std::string_view text);

  const mpq_class& real() const noexcept { return re_; }
  const mpq_class& imag() const noexcept { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  GaussianRational conj() const { return {re_, -im_}; }
  mpq_class norm_squared() const { return re_ * re_ + im_ * im_; }
  Complex to_complex() const { return {re_.get_d(), im_.get_d()}; }

  GaussianRational& operator+=(const GaussianRational& o);
  GaussianRational& operator-=(const GaussianRational& o);
  GaussianRational& operator*=(const GaussianRational& o);
  GaussianRational& operator/=(const GaussianRational& o);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  friend GaussianRational operator-(const GaussianRational& a) { return {-a.re_, -a.im_}; }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  std::string to_string() const;

 private:
  mpq_class re_{0};
  mpq_class im_{0};
};

/// Exact counterpart of AffineSymbol with Gaussian-rational entries.
class ExactAffineSymbol {
 public:
  ExactAffineSymbol(std::size_t n, std::vector<GaussianRational> a_row_major,
                    std::vector<GaussianRational> b);

  static ExactAffineSymbol from_symbol(const AffineSymbol& symbol);

  std::size_t dimension() const noexcept { return n_; }
  const GaussianRational& a(std::size_t row, std::size_t col) const { return a_[row * n_ + col]; }
  const GaussianRational& b(std::size_t i) const { return b_[i]; }

  AffineSymbol to_symbol() const;

 private:
  std::size_t n_;
  std::vector<GaussianRational> a_;
  std::vector<GaussianRational> b_;
};

}  // namespace fockop
