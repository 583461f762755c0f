#pragma once

// Exact arithmetic in cyclotomic fields Q(zeta_N), plus a complex-double
// stand-in used by the fast (inexact) evaluation mode.

#include <gmpxx.h>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace tortile {

/// Raised on division by zero and malformed scalar text.
class ScalarError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using Rational = mpq_class;

namespace detail {

inline std::uint64_t euler_phi(std::uint64_t n) {
  std::uint64_t result = n;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

using IntPoly = std::vector<long long>;  // low degree first

inline IntPoly compute_cyclotomic(unsigned n);

/// Cached N-th cyclotomic polynomial; monic, integer coefficients.
inline const IntPoly& cyclotomic_poly(unsigned n) {
  static std::mutex mu;
  static std::map<unsigned, std::unique_ptr<IntPoly>> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return *it->second;
  }
  auto poly = std::make_unique<IntPoly>(compute_cyclotomic(n));
  std::lock_guard<std::mutex> lock(mu);
  auto [it, inserted] = cache.emplace(n, std::move(poly));
  return *it->second;
}

inline IntPoly compute_cyclotomic(unsigned n) {
  // x^n - 1 divided by every Phi_d, d | n, d < n.
  IntPoly num(n + 1, 0);
  num[0] = -1;
  num[n] = 1;
  for (unsigned d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    const IntPoly& den = cyclotomic_poly(d);
    const std::size_t dd = den.size() - 1;
    IntPoly quot(num.size() - dd, 0);
    for (std::size_t k = num.size(); k-- > dd;) {
      long long c = num[k];
      quot[k - dd] = c;
      if (c == 0) continue;
      for (std::size_t j = 0; j <= dd; ++j) num[k - dd + j] -= c * den[j];
    }
    num = std::move(quot);
  }
  return num;
}

}  // namespace detail

inline unsigned lcm_conductor(unsigned a, unsigned b) { return std::lcm(a, b); }

/// An element of Q(zeta_N) in the power basis 1, z, ..., z^{phi(N)-1}.
class Cyclotomic {
 public:
  Cyclotomic() : n_(1), c_(1) {}
  Cyclotomic(long v) : n_(1), c_{Rational(v)} {}  // NOLINT: implicit on purpose
  Cyclotomic(int v) : Cyclotomic(static_cast<long>(v)) {}  // NOLINT
  explicit Cyclotomic(Rational q) : n_(1), c_{std::move(q)} { c_[0].canonicalize(); }
  Cyclotomic(unsigned conductor, std::vector<Rational> coeffs)
      : n_(conductor), c_(std::move(coeffs)) {
    if (n_ == 0) throw ScalarError("conductor must be positive");
    for (auto& q : c_) q.canonicalize();
    const auto deg = detail::euler_phi(n_);
    if (c_.size() > deg) {
      reduce_in_place();
    } else {
      c_.resize(deg);
    }
  }

  /// zeta_N^k; k is reduced modulo N.
  static Cyclotomic root_of_unity(long long k, unsigned n) {
    if (n == 0) throw ScalarError("root_of_unity: N must be positive");
    long long e = ((k % static_cast<long long>(n)) + n) % n;
    std::vector<Rational> coeffs(static_cast<std::size_t>(e) + 1);
    coeffs[static_cast<std::size_t>(e)] = 1;
    return Cyclotomic(n, std::move(coeffs));
  }

  unsigned conductor() const { return n_; }
  const std::vector<Rational>& coeffs() const { return c_; }

  bool is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const Rational& q) { return sgn(q) == 0; });
  }
  bool is_rational() const {
    for (std::size_t i = 1; i < c_.size(); ++i)
      if (sgn(c_[i]) != 0) return false;
    return true;
  }

  /// Same value expressed over Q(zeta_M); M must be a multiple of N.
  Cyclotomic promote(unsigned m) const {
    if (m == n_) return *this;
    if (m % n_ != 0) throw ScalarError("promote: target conductor must be a multiple");
    const unsigned step = m / n_;
    std::vector<Rational> out((c_.size() - 1) * step + 1);
    for (std::size_t j = 0; j < c_.size(); ++j) out[j * step] = c_[j];
    return Cyclotomic(m, std::move(out));
  }

  /// Smallest conductor whose field contains this value.
  Cyclotomic canonical() const {
    if (is_rational()) return Cyclotomic(c_[0]);
    for (unsigned d = 1; d < n_; ++d) {
      if (n_ % d != 0) continue;
      if (auto r = demote(d)) return *r;
    }
    return *this;
  }

  Cyclotomic conjugate() const {
    std::vector<Rational> out(n_);
    for (std::size_t j = 0; j < c_.size(); ++j) {
      if (sgn(c_[j]) == 0) continue;
      out[(n_ - j) % n_] += c_[j];
    }
    return Cyclotomic(n_, std::move(out));
  }

  Cyclotomic inverse() const {
    if (is_zero()) throw ScalarError("division by zero");
    if (n_ == 1) return Cyclotomic(Rational(1) / c_[0]);
    // Solve (x * y) = 1 for y via the multiplication matrix of x.
    const std::size_t d = c_.size();
    std::vector<std::vector<Rational>> a(d, std::vector<Rational>(d + 1));
    Cyclotomic basis_elem = Cyclotomic::root_of_unity(0, n_);
    const Cyclotomic z = Cyclotomic::root_of_unity(1, n_);
    for (std::size_t col = 0; col < d; ++col) {
      Cyclotomic prod = *this * basis_elem;
      for (std::size_t row = 0; row < d; ++row) a[row][col] = prod.c_[row];
      basis_elem = basis_elem * z;
    }
    a[0][d] = 1;
    auto sol = solve(std::move(a), d);
    if (!sol) throw ScalarError("inverse: singular multiplication matrix");
    return Cyclotomic(n_, std::move(*sol));
  }

  Cyclotomic pow(long long e) const {
    if (e < 0) return inverse().pow(-e);
    Cyclotomic result(1);
    Cyclotomic base = *this;
    while (e > 0) {
      if (e & 1) result = result * base;
      e >>= 1;
      if (e) base = base * base;
    }
    return result;
  }

  friend Cyclotomic operator+(const Cyclotomic& x, const Cyclotomic& y) {
    if (x.n_ == y.n_) {
      std::vector<Rational> out(x.c_.size());
      for (std::size_t i = 0; i < out.size(); ++i) out[i] = x.c_[i] + y.c_[i];
      Cyclotomic r;
      r.n_ = x.n_;
      r.c_ = std::move(out);
      return r;
    }
    const unsigned m = lcm_conductor(x.n_, y.n_);
    return x.promote(m) + y.promote(m);
  }
  friend Cyclotomic operator-(const Cyclotomic& x) {
    Cyclotomic r = x;
    for (auto& q : r.c_) q = -q;
    return r;
  }
  friend Cyclotomic operator-(const Cyclotomic& x, const Cyclotomic& y) { return x + (-y); }
  friend Cyclotomic operator*(const Cyclotomic& x, const Cyclotomic& y) {
    if (x.n_ == 1 && y.n_ == 1) return Cyclotomic(x.c_[0] * y.c_[0]);
    if (x.n_ == 1 || y.n_ == 1) {
      const Cyclotomic& scal = x.n_ == 1 ? x : y;
      const Cyclotomic& vec = x.n_ == 1 ? y : x;
      Cyclotomic r = vec;
      if (sgn(scal.c_[0]) == 0) return Cyclotomic(0);
      for (auto& q : r.c_) q *= scal.c_[0];
      return r;
    }
    if (x.n_ != y.n_) {
      const unsigned m = lcm_conductor(x.n_, y.n_);
      return x.promote(m) * y.promote(m);
    }
    std::vector<Rational> out(x.c_.size() + y.c_.size() - 1);
    for (std::size_t i = 0; i < x.c_.size(); ++i) {
      if (sgn(x.c_[i]) == 0) continue;
      for (std::size_t j = 0; j < y.c_.size(); ++j) {
        if (sgn(y.c_[j]) == 0) continue;
        out[i + j] += x.c_[i] * y.c_[j];
      }
    }
    return Cyclotomic(x.n_, std::move(out));
  }
  friend Cyclotomic operator/(const Cyclotomic& x, const Cyclotomic& y) { return x * y.inverse(); }

  Cyclotomic& operator+=(const Cyclotomic& y) { return *this = *this + y; }
  Cyclotomic& operator-=(const Cyclotomic& y) { return *this = *this - y; }
  Cyclotomic& operator*=(const Cyclotomic& y) { return *this = *this * y; }
  Cyclotomic& operator/=(const Cyclotomic& y) { return *this = *this / y; }

  friend bool operator==(const Cyclotomic& x, const Cyclotomic& y) {
    if (x.n_ == y.n_) return x.c_ == y.c_;
    const unsigned m = lcm_conductor(x.n_, y.n_);
    return x.promote(m).c_ == y.promote(m).c_;
  }
  friend bool operator!=(const Cyclotomic& x, const Cyclotomic& y) { return !(x == y); }

  std::complex<double> to_complex() const {
    std::complex<double> acc = 0;
    const double two_pi = 6.283185307179586476925286766559;
    for (std::size_t j = 0; j < c_.size(); ++j) {
      if (sgn(c_[j]) == 0) continue;
      acc += c_[j].get_d() * std::polar(1.0, two_pi * static_cast<double>(j) / n_);
    }
    return acc;
  }

  /// Canonical text: "q0 + q1*z(N)^1 + ...", minimal conductor, zero terms dropped.
  std::string to_string() const {
    const Cyclotomic c = canonical();
    std::ostringstream os;
    bool first = true;
    for (std::size_t j = 0; j < c.c_.size(); ++j) {
      if (sgn(c.c_[j]) == 0) continue;
      if (!first) os << " + ";
      first = false;
      os << c.c_[j].get_str();
      if (j > 0) os << "*z(" << c.n_ << ")^" << j;
    }
    if (first) return "0";
    return os.str();
  }

  static Cyclotomic parse(std::string_view text);

 private:
  void reduce_in_place() {
    const auto& phi = detail::cyclotomic_poly(n_);
    const std::size_t deg = phi.size() - 1;
    for (std::size_t k = c_.size(); k-- > deg;) {
      if (sgn(c_[k]) == 0) continue;
      const Rational lead = c_[k];
      for (std::size_t j = 0; j < deg; ++j) {
        if (phi[j] != 0) c_[k - deg + j] -= lead * static_cast<long>(phi[j]);
      }
      c_[k] = 0;
    }
    c_.resize(deg);
  }

  std::optional<Cyclotomic> demote(unsigned d) const {
    // Express this value in the image of Q(zeta_d); columns are promoted basis powers.
    const std::size_t rows = c_.size();
    const std::size_t cols = detail::euler_phi(d);
    std::vector<std::vector<Rational>> a(rows, std::vector<Rational>(cols + 1));
    for (std::size_t j = 0; j < cols; ++j) {
      Cyclotomic col = root_of_unity(static_cast<long long>(j), d).promote(n_);
      for (std::size_t r = 0; r < rows; ++r) a[r][j] = col.c_[r];
    }
    for (std::size_t r = 0; r < rows; ++r) a[r][cols] = c_[r];
    auto sol = solve(std::move(a), cols);
    if (!sol) return std::nullopt;
    return Cyclotomic(d, std::move(*sol));
  }

  // Gaussian elimination on an augmented system; nullopt when inconsistent.
  static std::optional<std::vector<Rational>> solve(std::vector<std::vector<Rational>> a,
                                                    std::size_t cols) {
    const std::size_t rows = a.size();
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
      std::size_t p = r;
      while (p < rows && sgn(a[p][c]) == 0) ++p;
      if (p == rows) continue;
      std::swap(a[p], a[r]);
      const Rational inv = Rational(1) / a[r][c];
      for (auto& v : a[r]) v *= inv;
      for (std::size_t i = 0; i < rows; ++i) {
        if (i == r || sgn(a[i][c]) == 0) continue;
        const Rational f = a[i][c];
        for (std::size_t k = c; k <= cols; ++k) a[i][k] -= f * a[r][k];
      }
      pivot_col.push_back(c);
      ++r;
    }
    for (std::size_t i = r; i < rows; ++i)
      if (sgn(a[i][cols]) != 0) return std::nullopt;
    std::vector<Rational> x(cols);
    for (std::size_t i = 0; i < pivot_col.size(); ++i) x[pivot_col[i]] = a[i][cols];
    return x;
  }

  unsigned n_;
  std::vector<Rational> c_;
};

inline Cyclotomic Cyclotomic::parse(std::string_view text) {
  auto fail = [&](const std::string& why) {
    throw ScalarError("cannot parse scalar '" + std::string(text) + "': " + why);
  };
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  auto parse_rational = [&](std::string_view s) {
    s = trim(s);
    if (s.empty()) fail("empty coefficient");
    std::string str(s);
    if (str[0] == '+') str.erase(0, 1);
    for (char ch : str)
      if (!(std::isdigit(static_cast<unsigned char>(ch)) || ch == '/' || ch == '-')) fail("bad rational");
    Rational q;
    if (q.set_str(str, 10) != 0) fail("bad rational");
    if (q.get_den() == 0) fail("zero denominator");
    q.canonicalize();
    return q;
  };

  Cyclotomic total(0);
  std::string_view rest = trim(text);
  if (rest.empty()) fail("empty");
  while (!rest.empty()) {
    auto plus = rest.find('+', 1);
    std::string_view term = trim(rest.substr(0, plus));
    rest = plus == std::string_view::npos ? std::string_view{} : rest.substr(plus + 1);
    if (term.empty()) fail("empty term");
    auto zpos = term.find("z(");
    if (zpos == std::string_view::npos) {
      total += Cyclotomic(parse_rational(term));
      continue;
    }
    Rational coeff = 1;
    std::string_view head = trim(term.substr(0, zpos));
    if (!head.empty()) {
      if (head == "-") {
        coeff = -1;
      } else {
        if (head.back() != '*') fail("expected '*' before z(N)");
        coeff = parse_rational(head.substr(0, head.size() - 1));
      }
    }
    std::string_view tail = term.substr(zpos + 2);
    auto close = tail.find(')');
    if (close == std::string_view::npos) fail("missing ')'");
    const std::string n_str(trim(tail.substr(0, close)));
    tail = trim(tail.substr(close + 1));
    long long exponent = 1;
    if (!tail.empty()) {
      if (tail.front() != '^') fail("expected '^'");
      const std::string e_str(trim(tail.substr(1)));
      try {
        std::size_t used = 0;
        exponent = std::stoll(e_str, &used);
        if (used != e_str.size()) fail("bad exponent");
      } catch (const std::logic_error&) {
        fail("bad exponent");
      }
    }
    unsigned long n = 0;
    try {
      std::size_t used = 0;
      n = std::stoul(n_str, &used);
      if (used != n_str.size()) fail("bad conductor");
    } catch (const std::logic_error&) {
      fail("bad conductor");
    }
    if (n == 0) fail("conductor must be positive");
    total += Cyclotomic(coeff) * root_of_unity(exponent, static_cast<unsigned>(n));
  }
  return total;
}

inline Cyclotomic root_of_unity(long long k, unsigned n) { return Cyclotomic::root_of_unity(k, n); }
inline Cyclotomic conjugate(const Cyclotomic& x) { return x.conjugate(); }

/// Complex double with tolerance-based equality (fast mode).
struct ComplexScalar {
  std::complex<double> v{};
  static constexpr double tolerance = 1e-9;

  ComplexScalar() = default;
  ComplexScalar(double re) : v(re, 0.0) {}  // NOLINT
  ComplexScalar(int re) : v(static_cast<double>(re), 0.0) {}  // NOLINT
  explicit ComplexScalar(std::complex<double> z) : v(z) {}

  friend ComplexScalar operator+(ComplexScalar a, ComplexScalar b) { return ComplexScalar(a.v + b.v); }
  friend ComplexScalar operator-(ComplexScalar a, ComplexScalar b) { return ComplexScalar(a.v - b.v); }
  friend ComplexScalar operator-(ComplexScalar a) { return ComplexScalar(-a.v); }
  friend ComplexScalar operator*(ComplexScalar a, ComplexScalar b) { return ComplexScalar(a.v * b.v); }
  friend ComplexScalar operator/(ComplexScalar a, ComplexScalar b) {
    if (b.is_zero()) throw ScalarError("division by zero");
    return ComplexScalar(a.v / b.v);
  }
  ComplexScalar& operator+=(ComplexScalar b) { v += b.v; return *this; }
  ComplexScalar& operator*=(ComplexScalar b) { v *= b.v; return *this; }
  friend bool operator==(ComplexScalar a, ComplexScalar b) { return std::abs(a.v - b.v) <= tolerance; }
  friend bool operator!=(ComplexScalar a, ComplexScalar b) { return !(a == b); }
  bool is_zero() const { return std::abs(v) <= tolerance; }
  ComplexScalar inverse() const { return ComplexScalar(1.0) / *this; }
  std::string to_string() const {
    std::ostringstream os;
    os.precision(12);
    os << v.real() << (v.imag() < 0 ? " - " : " + ") << std::abs(v.imag()) << "i";
    return os.str();
  }
};

/// Uniform access for code templated over the scalar mode.
template <class S>
struct ScalarTraits;

template <>
struct ScalarTraits<Cyclotomic> {
  static constexpr const char* name = "exact";
  static Cyclotomic from(const Cyclotomic& c) { return c; }
};

template <>
struct ScalarTraits<ComplexScalar> {
  static constexpr const char* name = "float";
  static ComplexScalar from(const Cyclotomic& c) { return ComplexScalar(c.to_complex()); }
};

}  // namespace tortile
