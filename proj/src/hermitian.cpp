#include "mgx/hermitian.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

#include "mgx/error.hpp"

namespace mgx {

HermitianMatrix::HermitianMatrix(std::size_t order) : n_(order), entries_(order * order) {}

HermitianMatrix HermitianMatrix::from_rows(const std::vector<std::vector<GaussianInt>>& rows) {
  HermitianMatrix h(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != rows.size()) {
      throw std::invalid_argument("matrix is not square");
    }
    for (std::size_t c = 0; c < rows.size(); ++c) {
      h.entries_[r * h.n_ + c] = rows[r][c];
    }
  }
  for (std::size_t r = 0; r < h.n_; ++r) {
    for (std::size_t c = r; c < h.n_; ++c) {
      if (!(h(r, c) == h(c, r).conj())) {
        throw std::invalid_argument("matrix is not Hermitian at (" + std::to_string(r) + "," + std::to_string(c) + ")");
      }
    }
  }
  return h;
}

void HermitianMatrix::set(std::size_t r, std::size_t c, const GaussianInt& z) {
  if (r >= n_ || c >= n_) {
    throw std::out_of_range("matrix index out of range");
  }
  if (r == c && z.im != 0) {
    throw std::invalid_argument("diagonal entry of a Hermitian matrix must be real");
  }
  entries_[r * n_ + c] = z;
  entries_[c * n_ + r] = z.conj();
}

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) {
    throw std::invalid_argument("polynomial needs at least the leading coefficient");
  }
}

std::string IntPolynomial::to_string() const {
  std::ostringstream out;
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    out << (j ? " " : "") << coeffs_[j];
  }
  return out.str();
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<BigInt> out(a.coeffs_.size() + b.coeffs_.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return IntPolynomial(std::move(out));
}

std::string Inertia::to_string() const {
  return "(" + std::to_string(p_plus) + "," + std::to_string(n_minus) + "," + std::to_string(nullity) + ")";
}

HermitianMatrix hermitian_adjacency(const MixedGraph& g) {
  HermitianMatrix h(g.vertex_count());
  for (const Edge& e : g.edges()) {
    if (e.is_arc()) {
      h.set(e.tail(), e.head(), GaussianInt(0, 1));
    } else {
      h.set(e.u, e.v, GaussianInt(1, 0));
    }
  }
  return h;
}

namespace {

template <class Int>
using SparseRows = std::vector<std::vector<std::pair<std::size_t, Gaussian<Int>>>>;

Checked64 exact_div(Checked64 x, std::size_t k) {
  const auto d = static_cast<std::int64_t>(k);
  if (x.v % d != 0) {
    throw InternalError("Faddeev-LeVerrier: trace not divisible by step index " + std::to_string(k));
  }
  return x.v / d;
}

BigInt exact_div(const BigInt& x, std::size_t k) {
  if (mpz_divisible_ui_p(x.get_mpz_t(), k) == 0) {
    throw InternalError("Faddeev-LeVerrier: trace not divisible by step index " + std::to_string(k));
  }
  BigInt q;
  mpz_divexact_ui(q.get_mpz_t(), x.get_mpz_t(), k);
  return q;
}

BigInt to_big(Checked64 x) { return BigInt(static_cast<long>(x.v)); }
const BigInt& to_big(const BigInt& x) { return x; }

// M_1 = I, a_k = -tr(A M_k) / k, M_{k+1} = A M_k + a_k I.
template <class Int>
IntPolynomial faddeev_leverrier(std::size_t n, const SparseRows<Int>& a) {
  using Z = Gaussian<Int>;
  std::vector<Z> m(n * n);
  std::vector<Z> am(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    m[i * n + i] = Z(Int(1));
  }
  std::vector<BigInt> coeffs{BigInt(1)};
  coeffs.reserve(n + 1);
  for (std::size_t k = 1; k <= n; ++k) {
    for (std::size_t r = 0; r < n; ++r) {
      Z* out = &am[r * n];
      for (std::size_t c = 0; c < n; ++c) {
        out[c] = Z();
      }
      for (const auto& [col, val] : a[r]) {
        const Z* in = &m[col * n];
        for (std::size_t c = 0; c < n; ++c) {
          if (!in[c].is_zero()) {
            out[c] += val * in[c];
          }
        }
      }
    }
    Z trace;
    for (std::size_t i = 0; i < n; ++i) {
      trace += am[i * n + i];
    }
    if (!(trace.im == 0)) {
      throw InternalError("Faddeev-LeVerrier: non-real trace at step " + std::to_string(k));
    }
    const Int ak = -exact_div(trace.re, k);
    coeffs.push_back(to_big(ak));
    if (k < n) {
      std::swap(m, am);
      for (std::size_t i = 0; i < n; ++i) {
        m[i * n + i].re += ak;
      }
    }
  }
  return IntPolynomial(std::move(coeffs));
}

template <class Int>
SparseRows<Int> sparse_rows(const HermitianMatrix& h) {
  SparseRows<Int> rows(h.order());
  for (std::size_t r = 0; r < h.order(); ++r) {
    for (std::size_t c = 0; c < h.order(); ++c) {
      const GaussianInt& z = h(r, c);
      if (z.is_zero()) {
        continue;
      }
      if constexpr (std::is_same_v<Int, BigInt>) {
        rows[r].emplace_back(c, z);
      } else {
        if (!z.re.fits_slong_p() || !z.im.fits_slong_p()) {
          throw Checked64::Overflow{};
        }
        rows[r].emplace_back(c, Gaussian<Int>(Int(z.re.get_si()), Int(z.im.get_si())));
      }
    }
  }
  return rows;
}

}  // namespace

namespace detail {

IntPolynomial charpoly_bigint(const HermitianMatrix& h) { return faddeev_leverrier(h.order(), sparse_rows<BigInt>(h)); }

IntPolynomial charpoly_checked64(const HermitianMatrix& h) {
  return faddeev_leverrier(h.order(), sparse_rows<Checked64>(h));
}

}  // namespace detail

IntPolynomial charpoly(const HermitianMatrix& h) {
  try {
    return detail::charpoly_checked64(h);
  } catch (const Checked64::Overflow&) {
    return detail::charpoly_bigint(h);
  }
}

namespace detail {

// Entries of H(G) are 1, i or -i, so the product H M_k needs only additions
// and swaps of real and imaginary parts.
bool charpoly_int64(const MixedGraph& g, std::vector<std::int64_t>& out) {
  const std::size_t n = g.vertex_count();
  thread_local std::vector<std::int64_t> m_re;
  thread_local std::vector<std::int64_t> m_im;
  thread_local std::vector<std::int64_t> a_re;
  thread_local std::vector<std::int64_t> a_im;
  m_re.assign(n * n, 0);
  m_im.assign(n * n, 0);
  a_re.resize(n * n);
  a_im.resize(n * n);
  out.assign(n + 1, 0);
  out[0] = 1;
  for (std::size_t i = 0; i < n; ++i) {
    m_re[i * n + i] = 1;
  }
  bool overflow = false;
  auto add = [&overflow](std::int64_t& acc, std::int64_t x) { overflow |= __builtin_add_overflow(acc, x, &acc); };
  for (std::size_t k = 1; k <= n; ++k) {
    for (VertexId r = 0; r < n; ++r) {
      std::int64_t* ore = &a_re[r * n];
      std::int64_t* oim = &a_im[r * n];
      std::fill(ore, ore + n, 0);
      std::fill(oim, oim + n, 0);
      for (const auto& inc : g.incident(r)) {
        const Edge& e = g.edge(inc.edge);
        const std::int64_t* ire = &m_re[inc.neighbor * n];
        const std::int64_t* iim = &m_im[inc.neighbor * n];
        if (!e.is_arc()) {
          for (std::size_t c = 0; c < n; ++c) {
            add(ore[c], ire[c]);
            add(oim[c], iim[c]);
          }
        } else if (e.tail() == r) {
          // i * (x + yi) = -y + xi
          for (std::size_t c = 0; c < n; ++c) {
            add(ore[c], -iim[c]);
            add(oim[c], ire[c]);
          }
        } else {
          // -i * (x + yi) = y - xi
          for (std::size_t c = 0; c < n; ++c) {
            add(ore[c], iim[c]);
            add(oim[c], -ire[c]);
          }
        }
      }
    }
    if (overflow) {
      return false;
    }
    std::int64_t tr_re = 0;
    std::int64_t tr_im = 0;
    for (std::size_t i = 0; i < n; ++i) {
      add(tr_re, a_re[i * n + i]);
      add(tr_im, a_im[i * n + i]);
    }
    if (overflow) {
      return false;
    }
    if (tr_im != 0) {
      throw InternalError("Faddeev-LeVerrier: non-real trace at step " + std::to_string(k));
    }
    const auto kk = static_cast<std::int64_t>(k);
    if (tr_re % kk != 0) {
      throw InternalError("Faddeev-LeVerrier: trace not divisible by step index " + std::to_string(k));
    }
    const std::int64_t ak = -(tr_re / kk);
    out[k] = ak;
    if (k < n) {
      std::swap(m_re, a_re);
      std::swap(m_im, a_im);
      for (std::size_t i = 0; i < n; ++i) {
        add(m_re[i * n + i], ak);
      }
      if (overflow) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace detail

IntPolynomial charpoly(const MixedGraph& g) {
  std::vector<std::int64_t> small;
  if (detail::charpoly_int64(g, small)) {
    std::vector<BigInt> coeffs;
    coeffs.reserve(small.size());
    for (std::int64_t x : small) {
      coeffs.emplace_back(static_cast<long>(x));
    }
    return IntPolynomial(std::move(coeffs));
  }
  return detail::charpoly_bigint(hermitian_adjacency(g));
}

namespace {

template <class Coeffs>
Inertia descartes(const Coeffs& p, std::size_t n) {
  std::size_t changes = 0;
  int last_sign = 0;
  std::size_t last_nonzero = 0;
  for (std::size_t j = 0; j <= n; ++j) {
    const int s = p[j] > 0 ? 1 : (p[j] < 0 ? -1 : 0);
    if (s == 0) {
      continue;
    }
    if (last_sign != 0 && s != last_sign) {
      ++changes;
    }
    last_sign = s;
    last_nonzero = j;
  }
  Inertia out;
  out.p_plus = changes;
  out.nullity = n - last_nonzero;
  out.n_minus = last_nonzero - changes;
  return out;
}

}  // namespace

Inertia inertia_from_charpoly(const IntPolynomial& p) { return descartes(p, p.degree()); }

Inertia inertia_from_charpoly(std::span<const std::int64_t> p) {
  if (p.empty()) {
    throw std::invalid_argument("polynomial needs at least the leading coefficient");
  }
  return descartes(p, p.size() - 1);
}

Inertia inertia_by_congruence(const HermitianMatrix& h) {
  const std::size_t n = h.order();
  std::vector<GaussianRational> w(n * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      w[r * n + c] = GaussianRational(BigRational(h(r, c).re), BigRational(h(r, c).im));
    }
  }
  auto at = [&](std::size_t r, std::size_t c) -> GaussianRational& { return w[r * n + c]; };
  std::vector<bool> active(n, true);
  Inertia out;
  std::size_t remaining = n;

  while (remaining > 0) {
    std::size_t pivot = n;
    for (std::size_t i = 0; i < n; ++i) {
      if (active[i] && !at(i, i).is_zero()) {
        pivot = i;
        break;
      }
    }
    if (pivot < n) {
      const GaussianRational& d = at(pivot, pivot);
      if (!d.is_real()) {
        throw InternalError("congruence: non-real diagonal entry");
      }
      const BigRational diag = d.re;
      if (diag > 0) {
        ++out.p_plus;
      } else {
        ++out.n_minus;
      }
      for (std::size_t r = 0; r < n; ++r) {
        if (!active[r] || r == pivot || at(r, pivot).is_zero()) {
          continue;
        }
        const GaussianRational factor(at(r, pivot).re / diag, at(r, pivot).im / diag);
        for (std::size_t c = 0; c < n; ++c) {
          if (active[c] && c != pivot && !at(pivot, c).is_zero()) {
            at(r, c) -= factor * at(pivot, c);
          }
        }
      }
      active[pivot] = false;
      --remaining;
      continue;
    }

    // Zero working diagonal: pivot on the 2x2 block [[0,h],[conj h,0]].
    std::size_t pi = n;
    std::size_t pj = n;
    for (std::size_t i = 0; i < n && pi == n; ++i) {
      if (!active[i]) {
        continue;
      }
      for (std::size_t j = i + 1; j < n; ++j) {
        if (active[j] && !at(i, j).is_zero()) {
          pi = i;
          pj = j;
          break;
        }
      }
    }
    if (pi == n) {
      break;  // the remaining block is zero
    }
    ++out.p_plus;
    ++out.n_minus;
    const GaussianRational hij = at(pi, pj);
    const GaussianRational inv_h = inverse(hij);
    const GaussianRational inv_hbar = inverse(hij.conj());
    for (std::size_t r = 0; r < n; ++r) {
      if (!active[r] || r == pi || r == pj) {
        continue;
      }
      const GaussianRational x = at(r, pi);
      const GaussianRational y = at(r, pj);
      if (x.is_zero() && y.is_zero()) {
        continue;
      }
      const GaussianRational xs = x * inv_hbar;
      const GaussianRational ys = y * inv_h;
      for (std::size_t c = 0; c < n; ++c) {
        if (!active[c] || c == pi || c == pj) {
          continue;
        }
        at(r, c) -= xs * at(pj, c) + ys * at(pi, c);
      }
    }
    active[pi] = false;
    active[pj] = false;
    remaining -= 2;
  }
  out.nullity = remaining;
  return out;
}

Inertia inertia(const MixedGraph& g, InertiaMethod method) {
  if (method == InertiaMethod::Congruence) {
    return inertia_by_congruence(hermitian_adjacency(g));
  }
  std::vector<std::int64_t> small;
  if (detail::charpoly_int64(g, small)) {
    return inertia_from_charpoly(std::span<const std::int64_t>(small));
  }
  return inertia_from_charpoly(charpoly(g));
}

std::size_t rank(const HermitianMatrix& h) { return inertia_from_charpoly(charpoly(h)).rank(); }

}  // namespace mgx
