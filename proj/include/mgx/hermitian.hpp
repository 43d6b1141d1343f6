#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "mgx/graph.hpp"
#include "mgx/numeric.hpp"

namespace mgx {

/// Square matrix over Z[i] equal to its conjugate transpose.
class HermitianMatrix {
 public:
  HermitianMatrix() = default;
  /// Zero matrix of the given order.
  explicit HermitianMatrix(std::size_t order);
  /// Row-major entries; throws std::invalid_argument unless Hermitian.
  static HermitianMatrix from_rows(const std::vector<std::vector<GaussianInt>>& rows);

  [[nodiscard]] std::size_t order() const { return n_; }
  [[nodiscard]] const GaussianInt& operator()(std::size_t r, std::size_t c) const { return entries_[r * n_ + c]; }
  /// Sets (r,c) to z and (c,r) to conj(z). Diagonal entries must be real.
  void set(std::size_t r, std::size_t c, const GaussianInt& z);

  friend bool operator==(const HermitianMatrix&, const HermitianMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<GaussianInt> entries_;
};

/// det(lambda I - H) = sum_j a_j lambda^(n-j), stored as a_0..a_n.
class IntPolynomial {
 public:
  IntPolynomial() : coeffs_{BigInt(1)} {}
  explicit IntPolynomial(std::vector<BigInt> coeffs);

  [[nodiscard]] std::size_t degree() const { return coeffs_.size() - 1; }
  [[nodiscard]] const BigInt& operator[](std::size_t j) const { return coeffs_[j]; }
  [[nodiscard]] const std::vector<BigInt>& coefficients() const { return coeffs_; }
  [[nodiscard]] std::string to_string() const;

  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) { return a.coeffs_ == b.coeffs_; }

 private:
  std::vector<BigInt> coeffs_;
};

struct Inertia {
  std::size_t p_plus = 0;
  std::size_t n_minus = 0;
  std::size_t nullity = 0;

  [[nodiscard]] std::size_t rank() const { return p_plus + n_minus; }
  [[nodiscard]] std::size_t order() const { return p_plus + n_minus + nullity; }
  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const Inertia&, const Inertia&) = default;
};

enum class InertiaMethod { Descartes, Congruence };

/// H(G): 1 on undirected edges, i at (tail, head) and -i at (head, tail).
HermitianMatrix hermitian_adjacency(const MixedGraph& g);

/// Faddeev-LeVerrier with exact division. Every trace is checked to be real
/// and every division by the step index to be exact; a violation throws
/// InternalError. A checked 64-bit pass runs first and is redone in BigInt
/// arithmetic if it overflows.
IntPolynomial charpoly(const HermitianMatrix& h);
IntPolynomial charpoly(const MixedGraph& g);

namespace detail {
// Forces one arithmetic path; used to test the two against each other.
IntPolynomial charpoly_bigint(const HermitianMatrix& h);
IntPolynomial charpoly_checked64(const HermitianMatrix& h);
/// Graph kernel in checked 64-bit arithmetic. Writes a_0..a_n to `out`;
/// returns false on overflow.
bool charpoly_int64(const MixedGraph& g, std::vector<std::int64_t>& out);
}  // namespace detail

/// Descartes' rule applied to a real-rooted characteristic polynomial.
Inertia inertia_from_charpoly(const IntPolynomial& p);
Inertia inertia_from_charpoly(std::span<const std::int64_t> p);

/// Symmetric Gaussian elimination over Q[i] (Sylvester's law of inertia).
Inertia inertia_by_congruence(const HermitianMatrix& h);

Inertia inertia(const MixedGraph& g, InertiaMethod method = InertiaMethod::Descartes);

std::size_t rank(const HermitianMatrix& h);

}  // namespace mgx
