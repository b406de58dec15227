#include "qbif/poly.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>

namespace qbif {

namespace {

using boost::multiprecision::pow;

Real pow_int(const Real& x, int k) {
  Real r = 1;
  Real b = x;
  int e = k;
  while (e > 0) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

}  // namespace

ComplexPoly::ComplexPoly(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) coeffs_.assign(1, Complex(0));
  while (coeffs_.size() > 1 && coeffs_.back() == Complex(0)) coeffs_.pop_back();
}

ComplexPoly ComplexPoly::constant(Complex c) {
  ComplexPoly p;
  p.coeffs_[0] = std::move(c);
  return p;
}

ComplexPoly ComplexPoly::identity() {
  ComplexPoly p;
  p.coeffs_ = {Complex(0), Complex(1)};
  return p;
}

Complex ComplexPoly::eval(const Complex& z) const {
  Complex acc = coeffs_.back();
  for (std::size_t i = coeffs_.size() - 1; i-- > 0;) {
    acc *= z;
    acc += coeffs_[i];
  }
  return acc;
}

std::pair<Complex, Complex> ComplexPoly::eval_with_derivative(const Complex& z) const {
  Complex v = coeffs_.back();
  Complex d(0);
  for (std::size_t i = coeffs_.size() - 1; i-- > 0;) {
    d *= z;
    d += v;
    v *= z;
    v += coeffs_[i];
  }
  return {v, d};
}

ComplexPoly ComplexPoly::derivative() const {
  if (coeffs_.size() == 1) return ComplexPoly();
  std::vector<Complex> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * Real(i);
  return ComplexPoly(std::move(d));
}

ComplexPoly& ComplexPoly::operator+=(const ComplexPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Complex(0));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  while (coeffs_.size() > 1 && coeffs_.back() == Complex(0)) coeffs_.pop_back();
  return *this;
}

ComplexPoly& ComplexPoly::operator-=(const ComplexPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Complex(0));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  while (coeffs_.size() > 1 && coeffs_.back() == Complex(0)) coeffs_.pop_back();
  return *this;
}

ComplexPoly operator*(const ComplexPoly& a, const ComplexPoly& b) {
  if (a.is_zero() || b.is_zero()) return ComplexPoly();
  std::vector<Complex> r(a.coeffs_.size() + b.coeffs_.size() - 1, Complex(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == Complex(0)) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) r[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return ComplexPoly(std::move(r));
}

ComplexPoly ComplexPoly::squared() const {
  if (is_zero()) return ComplexPoly();
  const std::size_t n = coeffs_.size();
  std::vector<Complex> r(2 * n - 1, Complex(0));
  for (std::size_t i = 0; i < n; ++i) {
    r[2 * i] += coeffs_[i] * coeffs_[i];
    for (std::size_t j = i + 1; j < n; ++j) {
      Complex t = coeffs_[i] * coeffs_[j];
      t += t;
      r[i + j] += t;
    }
  }
  return ComplexPoly(std::move(r));
}

Real ComplexPoly::max_coeff_abs() const {
  Real m = 0;
  for (const auto& c : coeffs_) {
    Real a = qbif::abs(c);
    if (a > m) m = a;
  }
  return m;
}

void ComplexPoly::trim(const Real& rel_tol) {
  Real thr = rel_tol * max_coeff_abs();
  while (coeffs_.size() > 1 && qbif::abs(coeffs_.back()) <= thr) coeffs_.pop_back();
}

void ComplexPoly::strip_exact_zeros() {
  while (coeffs_.size() > 1 && coeffs_.back() == Complex(0)) coeffs_.pop_back();
}

ComplexPoly compose_quadratics(std::span<const Complex> params, int degree_cap_log2) {
  if (params.empty()) throw InvalidArgument("compose_quadratics: parameter sequence is empty");
  if (static_cast<int>(params.size()) > degree_cap_log2)
    throw ResourceLimit("compose_quadratics: composition degree 2^" +
                        std::to_string(params.size()) + " exceeds cap 2^" +
                        std::to_string(degree_cap_log2));
  ComplexPoly g = ComplexPoly::identity();
  for (const Complex& c : params) {
    g = g.squared();
    g += ComplexPoly::constant(c);
  }
  return g;
}

Complex discriminant(const ComplexPoly& p) {
  const int n = p.degree();
  if (n < 2) throw InvalidArgument("discriminant: degree >= 2 required");
  const ComplexPoly q = p.derivative();
  const int m = q.degree();
  const int dim = n + m;

  // Sylvester matrix of (p, p'): m shifted rows of p, n shifted rows of p',
  // coefficients in descending order.
  std::vector<Complex> M(static_cast<std::size_t>(dim) * dim, Complex(0));
  auto at = [&](int r, int c) -> Complex& { return M[static_cast<std::size_t>(r) * dim + c]; };
  for (int r = 0; r < m; ++r)
    for (int j = 0; j <= n; ++j) at(r, r + j) = p[static_cast<std::size_t>(n - j)];
  for (int r = 0; r < n; ++r)
    for (int j = 0; j <= m; ++j) at(m + r, r + j) = q[static_cast<std::size_t>(m - j)];

  int swaps = 0;
  Complex det(1);
  for (int k = 0; k < dim; ++k) {
    int piv = k;
    Real best = norm(at(k, k));
    for (int i = k + 1; i < dim; ++i) {
      Real v = norm(at(i, k));
      if (v > best) {
        best = v;
        piv = i;
      }
    }
    if (best == 0) return Complex(0);  // exact singularity: multiple root
    if (piv != k) {
      for (int j = k; j < dim; ++j) std::swap(at(k, j), at(piv, j));
      ++swaps;
    }
    const Complex pivot = at(k, k);
    det *= pivot;
    for (int i = k + 1; i < dim; ++i) {
      if (at(i, k) == Complex(0)) continue;
      Complex f = at(i, k) / pivot;
      for (int j = k + 1; j < dim; ++j) at(i, j) -= f * at(k, j);
      at(i, k) = Complex(0);
    }
  }
  if (swaps & 1) det = -det;

  Complex disc = det / p.leading();
  if ((static_cast<long>(n) * (n - 1) / 2) % 2 != 0) disc = -disc;
  return disc;
}

ComplexPoly interpolate_from_circle(std::span<const std::pair<Complex, Complex>> samples,
                                    int degree_bound) {
  const int M = static_cast<int>(samples.size());
  if (degree_bound < 0) throw InvalidArgument("interpolate_from_circle: negative degree bound");
  if (M < degree_bound + 1)
    throw InvalidArgument("interpolate_from_circle: need at least degree_bound + 1 samples");

  const Real rs = abs(samples[0].first);
  if (!(rs > 0)) throw InvalidArgument("interpolate_from_circle: sample radius must be positive");

  // Structural check: sample j must sit at rs * e^{2 pi i j / M}.
  std::vector<Complex> omega(M);
  for (int j = 0; j < M; ++j) omega[j] = root_of_unity(j, M);
  const Real grid_tol = Real("1e-9") * rs;
  for (int j = 0; j < M; ++j) {
    if (abs(samples[j].first - omega[j] * rs) > grid_tol)
      throw InvalidArgument("interpolate_from_circle: samples not on the roots-of-unity grid");
  }

  // Inverse DFT: c_k = (1/M) sum_j v_j w^{-jk}.
  std::vector<Complex> scaled(M);
  const Real invM = Real(1) / M;
  for (int k = 0; k < M; ++k) {
    Complex acc(0);
    for (int j = 0; j < M; ++j) {
      const int t = static_cast<int>((static_cast<long>(j) * k) % M);
      acc += samples[j].second * conj(omega[t]);
    }
    scaled[k] = acc * invM;
  }

  // Trim in the scaled (sampling-circle) domain where magnitudes are
  // commensurable, then reject genuine coefficients above the bound.
  Real maxc = 0;
  for (const auto& c : scaled) {
    Real a = abs(c);
    if (a > maxc) maxc = a;
  }
  const Real thr = Real("1e-30") * maxc;
  int deg = M - 1;
  while (deg > 0 && abs(scaled[static_cast<std::size_t>(deg)]) <= thr) --deg;
  if (deg > degree_bound)
    throw InvalidArgument("interpolate_from_circle: samples are not consistent with the degree bound");

  std::vector<Complex> coeffs(static_cast<std::size_t>(deg) + 1);
  for (int k = 0; k <= deg; ++k) coeffs[static_cast<std::size_t>(k)] = scaled[static_cast<std::size_t>(k)] / pow_int(rs, k);
  return ComplexPoly(std::move(coeffs));
}

namespace {

// Double-precision Aberth pre-solve; returns empty on numeric trouble.
std::vector<std::complex<double>> aberth_double(const std::vector<Complex>& monic) {
  const int n = static_cast<int>(monic.size()) - 1;
  std::vector<std::complex<double>> a(monic.size());
  for (std::size_t i = 0; i < monic.size(); ++i) {
    a[i] = monic[i].to_double();
    if (!std::isfinite(a[i].real()) || !std::isfinite(a[i].imag())) return {};
  }
  double r0 = std::pow(std::abs(a[0]), 1.0 / n);
  if (!std::isfinite(r0) || r0 <= 0) r0 = 1.0;
  std::vector<std::complex<double>> z(n);
  for (int j = 0; j < n; ++j) {
    double th = 2 * M_PI * j / n + 0.4;
    z[j] = r0 * std::complex<double>(std::cos(th), std::sin(th));
  }
  for (int sweep = 0; sweep < 500; ++sweep) {
    double worst = 0;
    for (int j = 0; j < n; ++j) {
      std::complex<double> v = a[n], d = 0.0;
      for (int i = n; i-- > 0;) {
        d = d * z[j] + v;
        v = v * z[j] + a[i];
      }
      if (v == 0.0) continue;
      if (d == 0.0) {
        z[j] += 1e-6 * (1.0 + std::abs(z[j]));
        worst = 1;
        continue;
      }
      std::complex<double> nw = v / d;
      std::complex<double> s = 0.0;
      for (int i = 0; i < n; ++i) {
        if (i == j) continue;
        std::complex<double> diff = z[j] - z[i];
        if (diff == 0.0) {
          diff = 1e-12 * (1.0 + std::abs(z[j]));
          z[j] += diff;
        }
        s += 1.0 / diff;
      }
      std::complex<double> denom = 1.0 - nw * s;
      std::complex<double> w = (denom == 0.0) ? nw : nw / denom;
      z[j] -= w;
      if (!std::isfinite(z[j].real()) || !std::isfinite(z[j].imag())) return {};
      worst = std::max(worst, std::abs(w) / (1 + std::abs(z[j])));
    }
    if (worst < 1e-14) break;
  }
  return z;
}

}  // namespace

std::vector<Complex> poly_roots(const ComplexPoly& p, const RootOptions& opts) {
  if (p.degree() < 1) throw InvalidArgument("poly_roots: degree >= 1 required");

  // Factor out exact roots at the origin first.
  std::vector<Complex> coeffs = p.coeffs();
  std::size_t zero_roots = 0;
  while (zero_roots + 1 < coeffs.size() && coeffs[zero_roots] == Complex(0)) ++zero_roots;
  std::vector<Complex> a(coeffs.begin() + static_cast<long>(zero_roots), coeffs.end());
  std::vector<Complex> roots(zero_roots, Complex(0));

  const int n = static_cast<int>(a.size()) - 1;
  if (n >= 1) {
    const Complex lc = a.back();
    for (auto& c : a) c /= lc;
    ComplexPoly monic{std::vector<Complex>(a)};

    std::vector<Complex> z(n);
    bool warm = false;
    if (opts.warm_start && n >= 2) {
      auto zd = aberth_double(a);
      if (static_cast<int>(zd.size()) == n) {
        bool finite = true;
        for (auto& w : zd)
          if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) finite = false;
        if (finite) {
          for (int j = 0; j < n; ++j) z[static_cast<std::size_t>(j)] = Complex(zd[static_cast<std::size_t>(j)]);
          warm = true;
        }
      }
    }
    if (!warm) {
      Real r0 = pow(abs(a[0]), Real(1) / n);
      if (!(r0 > 0) || !is_finite(r0)) r0 = 1;
      const Real pi = real_pi();
      for (int j = 0; j < n; ++j) {
        Real th = 2 * pi * j / n + Real("0.4");
        z[static_cast<std::size_t>(j)] = unit_phase(th) * r0;
      }
    }

    if (n == 1) {
      z[0] = -a[0];
    } else {
      const Real tol = ldexp(Real(1), -static_cast<int>(PrecisionContext::active_bits()) + 8);
      std::vector<bool> done(static_cast<std::size_t>(n), false);
      for (int sweep = 0; sweep < opts.max_sweeps; ++sweep) {
        bool all_done = true;
        for (int j = 0; j < n; ++j) {
          if (done[static_cast<std::size_t>(j)]) continue;
          auto [v, d] = monic.eval_with_derivative(z[static_cast<std::size_t>(j)]);
          if (v == Complex(0)) {
            done[static_cast<std::size_t>(j)] = true;
            continue;
          }
          if (d == Complex(0)) {
            z[static_cast<std::size_t>(j)] += Complex(tol, tol) * (1 + abs(z[static_cast<std::size_t>(j)]));
            all_done = false;
            continue;
          }
          Complex nw = v / d;
          Complex s(0);
          for (int i = 0; i < n; ++i) {
            if (i == j) continue;
            Complex diff = z[static_cast<std::size_t>(j)] - z[static_cast<std::size_t>(i)];
            if (diff == Complex(0)) {
              Real jig = tol * (1 + abs(z[static_cast<std::size_t>(j)]));
              z[static_cast<std::size_t>(j)] += Complex(jig, jig);
              diff = z[static_cast<std::size_t>(j)] - z[static_cast<std::size_t>(i)];
            }
            s += Complex(1) / diff;
          }
          Complex denom = Complex(1) - nw * s;
          Complex w = (denom == Complex(0)) ? nw : nw / denom;
          z[static_cast<std::size_t>(j)] -= w;
          if (abs(w) <= tol * (1 + abs(z[static_cast<std::size_t>(j)]))) {
            done[static_cast<std::size_t>(j)] = true;
          } else {
            all_done = false;
          }
        }
        if (all_done) break;
      }

      // Newton polish, accepting a step only when the residual improves.
      for (int j = 0; j < n; ++j) {
        for (int step = 0; step < opts.polish_steps; ++step) {
          auto [v, d] = monic.eval_with_derivative(z[static_cast<std::size_t>(j)]);
          if (v == Complex(0) || d == Complex(0)) break;
          Complex cand = z[static_cast<std::size_t>(j)] - v / d;
          Complex v2 = monic.eval(cand);
          if (norm(v2) < norm(v)) {
            z[static_cast<std::size_t>(j)] = cand;
          } else {
            break;
          }
        }
      }
    }

    // Residual acceptance: |p(z)| <= 10^(-digits10/2) * sum_i |a_i||z|^i.
    const Real thr = pow(Real(10), -static_cast<int>(PrecisionContext::active_digits10() / 2));
    for (int j = 0; j < n; ++j) {
      Real az = abs(z[static_cast<std::size_t>(j)]);
      Real scale = 0;
      for (std::size_t i = a.size(); i-- > 0;) scale = scale * az + abs(a[i]);
      Complex v = monic.eval(z[static_cast<std::size_t>(j)]);
      if (!is_finite(v) || abs(v) > thr * scale) {
        std::vector<Complex> partial = roots;
        partial.insert(partial.end(), z.begin(), z.end());
        throw NumericFailure("poly_roots: residual check failed after sweep cap", std::move(partial));
      }
    }
    roots.insert(roots.end(), z.begin(), z.end());
  }

  std::sort(roots.begin(), roots.end(), [](const Complex& x, const Complex& y) {
    if (x.re() != y.re()) return x.re() < y.re();
    return x.im() < y.im();
  });
  return roots;
}

}  // namespace qbif
