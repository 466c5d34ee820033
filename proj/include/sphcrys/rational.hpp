#ifndef SPHCRYS_RATIONAL_HPP
#define SPHCRYS_RATIONAL_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/rational.hpp>

// Under C++20's rewritten comparison candidates, boost's mixed
// (integer, rational) operator== templates call each other forever.
// Exact non-template overloads for int literals win overload resolution.
namespace boost {
inline bool operator==(const rational<std::int64_t>& a, std::int64_t b) {
  return a.denominator() == 1 && a.numerator() == b;
}
inline bool operator==(std::int64_t a, const rational<std::int64_t>& b) { return b == a; }
inline bool operator==(const rational<std::int64_t>& a, int b) {
  return a == static_cast<std::int64_t>(b);
}
inline bool operator==(int a, const rational<std::int64_t>& b) {
  return b == static_cast<std::int64_t>(a);
}
inline bool operator!=(const rational<std::int64_t>& a, std::int64_t b) { return !(a == b); }
inline bool operator!=(std::int64_t a, const rational<std::int64_t>& b) { return !(b == a); }
inline bool operator!=(const rational<std::int64_t>& a, int b) { return !(a == b); }
inline bool operator!=(int a, const rational<std::int64_t>& b) { return !(b == a); }
}  // namespace boost

namespace sphcrys {

using Rational = boost::rational<std::int64_t>;

inline std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

/// Parses "p", "-p" or "p/q".
inline Rational parse_rational(const std::string& s) {
  try {
    const auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(std::stoll(s));
    return Rational(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
  } catch (const std::exception&) {
    throw std::invalid_argument("not a rational number: '" + s + "'");
  }
}

inline bool is_integer(const Rational& r) { return r.denominator() == 1; }

inline double to_double(const Rational& r) {
  return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

namespace detail {

using RMatrix = std::vector<std::vector<Rational>>;

/// Solves A x = b for square A by exact Gaussian elimination; nullopt if singular.
inline std::optional<std::vector<Rational>> solve_exact(RMatrix a, std::vector<Rational> b) {
  const std::size_t n = a.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(a[piv], a[col]);
    std::swap(b[piv], b[col]);
    for (std::size_t row = 0; row < n; ++row) {
      if (row == col || a[row][col] == 0) continue;
      const Rational factor = a[row][col] / a[col][col];
      for (std::size_t k = col; k < n; ++k) a[row][k] -= factor * a[col][k];
      b[row] -= factor * b[col];
    }
  }
  std::vector<Rational> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
  return x;
}

/// Rank of a (rows x cols) rational matrix.
inline std::size_t rank_exact(RMatrix a) {
  std::size_t rank = 0;
  const std::size_t rows = a.size();
  const std::size_t cols = rows == 0 ? 0 : a[0].size();
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t piv = rank;
    while (piv < rows && a[piv][col] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[rank]);
    for (std::size_t row = rank + 1; row < rows; ++row) {
      if (a[row][col] == 0) continue;
      const Rational factor = a[row][col] / a[rank][col];
      for (std::size_t k = col; k < cols; ++k) a[row][k] -= factor * a[rank][k];
    }
    ++rank;
  }
  return rank;
}

inline Rational determinant_exact(RMatrix a) {
  const std::size_t n = a.size();
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != col) {
      std::swap(a[piv], a[col]);
      det = -det;
    }
    det *= a[col][col];
    for (std::size_t row = col + 1; row < n; ++row) {
      const Rational factor = a[row][col] / a[col][col];
      for (std::size_t k = col; k < n; ++k) a[row][k] -= factor * a[col][k];
    }
  }
  return det;
}

}  // namespace detail
}  // namespace sphcrys

#endif  // SPHCRYS_RATIONAL_HPP
