#pragma once

#include <cstdint>
#include <ostream>
#include <string>

#include <gmpxx.h>

#include "mgx/error.hpp"

namespace mgx {

using BigInt = mpz_class;
using BigRational = mpq_class;

/// Element of Z[i] (or Q[i]) over the scalar type T.
template <class T>
struct Gaussian {
  T re{};
  T im{};

  Gaussian() = default;
  Gaussian(T real, T imag = T{}) : re(std::move(real)), im(std::move(imag)) {}

  [[nodiscard]] Gaussian conj() const { return {re, -im}; }
  [[nodiscard]] bool is_zero() const { return re == 0 && im == 0; }
  [[nodiscard]] bool is_real() const { return im == 0; }
  /// |z|^2
  [[nodiscard]] T norm() const { return re * re + im * im; }

  Gaussian operator-() const { return {-re, -im}; }
  Gaussian& operator+=(const Gaussian& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  Gaussian& operator-=(const Gaussian& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  friend Gaussian operator+(Gaussian a, const Gaussian& b) { return a += b; }
  friend Gaussian operator-(Gaussian a, const Gaussian& b) { return a -= b; }
  friend Gaussian operator*(const Gaussian& a, const Gaussian& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend bool operator==(const Gaussian& a, const Gaussian& b) { return a.re == b.re && a.im == b.im; }

  friend std::ostream& operator<<(std::ostream& os, const Gaussian& z) {
    if (z.im == 0) {
      return os << z.re;
    }
    if (z.re == 0) {
      return os << z.im << 'i';
    }
    os << z.re;
    if (z.im < 0) {
      return os << '-' << -z.im << 'i';
    }
    return os << '+' << z.im << 'i';
  }
};

using GaussianInt = Gaussian<BigInt>;
using GaussianRational = Gaussian<BigRational>;

/// 1/z over Q[i].
inline GaussianRational inverse(const GaussianRational& z) {
  const BigRational n = z.norm();
  if (n == 0) {
    throw InternalError("inverse of zero Gaussian rational");
  }
  return {z.re / n, -z.im / n};
}

/// 64-bit integer whose arithmetic throws Overflow instead of wrapping.
/// Used as a fast first attempt for exact kernels that fall back to BigInt.
struct Checked64 {
  struct Overflow {};

  std::int64_t v = 0;

  Checked64() = default;
  Checked64(std::int64_t value) : v(value) {}  // NOLINT(google-explicit-constructor)

  friend Checked64 operator+(Checked64 a, Checked64 b) {
    std::int64_t r;
    if (__builtin_add_overflow(a.v, b.v, &r)) {
      throw Overflow{};
    }
    return r;
  }
  friend Checked64 operator-(Checked64 a, Checked64 b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a.v, b.v, &r)) {
      throw Overflow{};
    }
    return r;
  }
  friend Checked64 operator*(Checked64 a, Checked64 b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a.v, b.v, &r)) {
      throw Overflow{};
    }
    return r;
  }
  Checked64 operator-() const { return Checked64(0) - *this; }
  Checked64& operator+=(Checked64 o) { return *this = *this + o; }
  Checked64& operator-=(Checked64 o) { return *this = *this - o; }
  friend bool operator==(Checked64 a, Checked64 b) { return a.v == b.v; }
  friend bool operator==(Checked64 a, int b) { return a.v == b; }
  friend bool operator<(Checked64 a, int b) { return a.v < b; }
};

inline int sign(const BigInt& x) { return sgn(x); }

}  // namespace mgx
