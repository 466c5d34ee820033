#ifndef SPHCRYS_HARMONIC_HPP
#define SPHCRYS_HARMONIC_HPP

// Numerics on the compact dual torus: Satake points, unramified L-factors,
// the Plancherel density |F|^2 and its check against Parseval by an exact
// trapezoid rule.

#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <utility>
#include <vector>

#include "sphcrys/series.hpp"

namespace sphcrys {

using Complex = std::complex<double>;

/// Raised when an L-factor denominator vanishes.
struct PoleError : std::domain_error {
  using std::domain_error::domain_error;
};

/// chi with e^{basis_k}(chi) = exp(2 pi i angles_k).
struct SatakePoint {
  std::vector<double> angles;
  double q = 4.0;

  Complex character(const Coweight& c) const {
    if (c.rank() != angles.size()) throw std::invalid_argument("satake point: rank mismatch");
    double t = 0;
    for (std::size_t k = 0; k < angles.size(); ++k) t += static_cast<double>(c[k]) * angles[k];
    t -= std::floor(t);
    return std::polar(1.0, 2 * std::numbers::pi * t);
  }
  SatakePoint conjugate() const {
    SatakePoint p = *this;
    for (auto& a : p.angles) a = a == 0 ? 0 : 1 - a;
    return p;
  }
};

/// Compensated (Neumaier) accumulator; summation order is the caller's.
class NeumaierSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) comp_ += (sum_ - t) + x;
    else comp_ += (x - t) + sum_;
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0, comp_ = 0;
};

inline Complex evaluate_series(const GradedSeries& s, const SatakePoint& chi) {
  if (chi.angles.size() != s.datum.rank()) throw std::invalid_argument("evaluate_series: rank mismatch");
  NeumaierSum re, im;
  for (const auto& [k, v] : s.coeffs) {
    const Complex z = v.evaluate(chi.q) * chi.character(k);
    re.add(z.real());
    im.add(z.imag());
  }
  return {re.value(), im.value()};
}

namespace detail {

inline Complex checked_inverse(Complex den, double scale, const char* what) {
  if (std::abs(den) <= 1e-12 * std::max(1.0, scale)) throw PoleError(std::string(what) + ": pole");
  return 1.0 / den;
}

}  // namespace detail

/// prod over weights of (1 - q^{-s} e^{w}(chi))^{-1}.
inline Complex lfactor(const SatakePoint& chi, const std::vector<Coweight>& weights, double s) {
  Complex r = 1;
  const double qs = std::pow(chi.q, -s);
  for (const auto& w : weights) r *= detail::checked_inverse(1.0 - qs * chi.character(w), qs, "lfactor");
  return r;
}

/// |F(chi)|^2 for the closed form F = prod_{a>0}(1 - e^a) / prod_{b plus}(1 - q^{-c(b)} e^{wt b}).
inline double plancherel_integrand(const XCrystal& x, const SatakePoint& chi) {
  Complex f = 1;
  for (const auto& a : x.datum.root_datum.positive_coroots()) f *= 1.0 - chi.character(a);
  for (auto b : x.plus_elements()) {
    const double qc = std::pow(chi.q, -to_double(x.twist(b)));
    f *= detail::checked_inverse(1.0 - qc * chi.character(x.crystal.wt(b)), qc, "plancherel_integrand");
  }
  return std::norm(f);
}

/// Rigorous bound on | |F(chi)|^2 - |F_N(chi)|^2 | uniform in chi. The symmetric
/// part has positive coefficients, so the tail beyond grade M is bounded by
/// its total mass minus the partial sum; each numerator monomial shifts M.
inline double truncation_error_bound(const XCrystal& x, std::int64_t bound, double q) {
  const auto& d = x.datum;
  double mass = 1;
  for (auto b : x.plus_elements()) {
    const double t = std::pow(q, -to_double(x.twist(b)));
    if (t >= 1) return std::numeric_limits<double>::infinity();
    mass /= 1 - t;
  }
  const auto sym = sym_series(x, bound);
  auto tail = [&](const Rational& m) {
    if (m < 0) return mass;
    NeumaierSum partial;
    for (const auto& [k, v] : sym.coeffs)
      if (d.grade(k) <= m) partial.add(v.evaluate(q));
    return std::max(0.0, mass - partial.value());
  };
  const auto pos = d.root_datum.positive_coroots();
  if (pos.size() > 20) throw std::invalid_argument("truncation_error_bound: too many positive coroots");
  double delta = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pos.size()); ++mask) {
    auto w = Coweight::zero(d.rank());
    for (std::size_t i = 0; i < pos.size(); ++i)
      if (mask >> i & 1) w += pos[i];
    delta += tail(Rational(bound) - d.grade(w));
  }
  // |F| <= 2^{|pos|} * mass
  const double f_max = std::ldexp(mass, static_cast<int>(pos.size()));
  return delta * (2 * f_max + delta);
}

struct QuadratureResult {
  double quadrature = 0;
  double parseval = 0;
  std::int64_t grid = 0;
  std::int64_t bound = 0;
  double difference() const { return std::abs(quadrature - parseval); }
};

/// Smallest grid per axis for which the trapezoid rule is exact on |F_N|^2:
/// one more than the coordinate spread of the truncated support.
inline std::vector<std::int64_t> minimal_grid(const GradedSeries& s) {
  const auto r = s.datum.rank();
  std::vector<std::int64_t> lo(r, 0), hi(r, 0), out(r, 1);
  bool first = true;
  for (const auto& [k, v] : s.coeffs) {
    for (std::size_t i = 0; i < r; ++i) {
      lo[i] = first ? k[i] : std::min(lo[i], k[i]);
      hi[i] = first ? k[i] : std::max(hi[i], k[i]);
    }
    first = false;
  }
  for (std::size_t i = 0; i < r; ++i) out[i] = hi[i] - lo[i] + 1;
  return out;
}

/// (1/|W|) times the grid average of |F_N|^2, and (1/|W|) sum |c_lambda(q)|^2.
inline QuadratureResult quadrature_norm(const XCrystal& x, std::int64_t bound, std::int64_t grid, double q = 4.0) {
  const auto s = asymptotics_series(x, bound);
  const auto need = minimal_grid(s);
  for (std::size_t i = 0; i < need.size(); ++i)
    if (grid < need[i])
      throw std::invalid_argument("quadrature_norm: grid " + std::to_string(grid) + " too small on axis " +
                                  std::to_string(i) + " (need at least " + std::to_string(need[i]) + ")");
  const double w = static_cast<double>(x.datum.root_datum.weyl().order());
  QuadratureResult res;
  res.grid = grid;
  res.bound = bound;

  std::vector<std::pair<Coweight, double>> terms;
  NeumaierSum pars;
  for (const auto& [k, v] : s.coeffs) {
    const double c = v.evaluate(q);
    terms.emplace_back(k, c);
    pars.add(c * c);
  }
  res.parseval = pars.value() / w;

  // e^lambda at grid point j is the (sum lambda_k j_k mod grid)-th root of unity
  std::vector<Complex> roots(static_cast<std::size_t>(grid));
  for (std::int64_t j = 0; j < grid; ++j)
    roots[static_cast<std::size_t>(j)] = std::polar(1.0, 2 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(grid));
  const auto r = x.datum.rank();
  std::vector<std::int64_t> idx(r, 0);
  NeumaierSum quad;
  std::size_t points = 0;
  while (true) {
    NeumaierSum re, im;
    for (const auto& [k, c] : terms) {
      std::int64_t e = 0;
      for (std::size_t i = 0; i < r; ++i) e += k[i] * idx[i];
      e %= grid;
      if (e < 0) e += grid;
      const Complex z = c * roots[static_cast<std::size_t>(e)];
      re.add(z.real());
      im.add(z.imag());
    }
    quad.add(std::norm(Complex(re.value(), im.value())));
    ++points;
    std::size_t i = 0;
    while (i < r && idx[i] == grid - 1) idx[i++] = 0;
    if (i == r) break;
    ++idx[i];
  }
  res.quadrature = quad.value() / static_cast<double>(points) / w;
  return res;
}

}  // namespace sphcrys

#endif  // SPHCRYS_HARMONIC_HPP
