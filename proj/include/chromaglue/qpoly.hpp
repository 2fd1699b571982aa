// Exact arithmetic for integer-coefficient polynomials in q and reduced
// fractions thereof. Coefficients are arbitrary-precision (GMP): products
// like [n]_q! overflow 64 bits well before desk scale runs out.
#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace chromaglue {

using Int = mpz_class;
using Rational = mpq_class;

/// Raised when a documented invariant of the library is violated at runtime
/// (exit code 2 territory, as opposed to bad user input).
class invariant_error : public std::runtime_error {
 public:
  explicit invariant_error(const std::string& what) : std::runtime_error(what) {}
};

/// Integer-coefficient polynomial in q, coefficients ascending.
/// Invariant: trailing zeros trimmed; the zero polynomial has no coefficients.
class QPoly {
 public:
  QPoly() = default;
  QPoly(long c) { if (c != 0) coeffs_.push_back(Int(c)); }
  QPoly(const Int& c) { if (c != 0) coeffs_.push_back(c); }
  explicit QPoly(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  static QPoly monomial(const Int& c, int power);

  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }
  /// Degree of the zero polynomial is -1.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Int>& coeffs() const { return coeffs_; }
  Int coeff(int k) const {
    return (k >= 0 && k < static_cast<int>(coeffs_.size())) ? coeffs_[k] : Int(0);
  }
  const Int& leading() const;

  /// gcd of the coefficients, always nonnegative; 0 for the zero polynomial.
  Int content() const;
  /// p / content(p), with the leading coefficient's sign preserved.
  QPoly primitive_part() const;

  Int eval_int(const Int& x) const;
  Rational eval(const Rational& x) const;

  QPoly operator-() const;
  QPoly& operator+=(const QPoly& o);
  QPoly& operator-=(const QPoly& o);
  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
  friend QPoly operator*(const QPoly& a, const QPoly& b);
  QPoly& operator*=(const QPoly& o) { return *this = *this * o; }
  friend bool operator==(const QPoly& a, const QPoly& b) { return a.coeffs_ == b.coeffs_; }
  friend bool operator!=(const QPoly& a, const QPoly& b) { return !(a == b); }
  /// Lexicographic-by-coefficient order; only used as a container key.
  friend bool operator<(const QPoly& a, const QPoly& b) { return a.coeffs_ < b.coeffs_; }

  bool all_coeffs_nonnegative() const;

 private:
  void trim();
  std::vector<Int> coeffs_;
};

/// Exact division; throws invariant_error if the remainder is nonzero.
QPoly div_exact(const QPoly& a, const QPoly& b);
/// True (and sets quotient) iff b divides a exactly.
bool try_div_exact(const QPoly& a, const QPoly& b, QPoly* quotient);
/// Polynomial gcd over the integers via the primitive Euclidean scheme;
/// result is primitive with positive leading coefficient times the content gcd.
QPoly poly_gcd(const QPoly& a, const QPoly& b);

/// [k]_q = 1 + q + ... + q^{k-1}; [0]_q = 0.
QPoly q_integer(int k);
/// [k]_q! = [k]_q [k-1]_q ... [1]_q; [0]_q! = 1.
QPoly q_factorial(int k);

/// Reduced fraction of two QPoly.
/// Invariants: den nonzero with positive leading coefficient; num/den share no
/// polynomial factor of positive degree and no integer content.
class QRat {
 public:
  QRat() : num_(), den_(1) {}
  QRat(long c) : num_(c), den_(1) {}
  QRat(const Int& c) : num_(c), den_(1) {}
  QRat(const QPoly& p) : num_(p), den_(1) {}
  QRat(const QPoly& num, const QPoly& den);

  const QPoly& num() const { return num_; }
  const QPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_one(); }
  /// The fraction as a polynomial; throws invariant_error if den != 1.
  const QPoly& as_polynomial() const;

  /// Exact value at q = 1; throws if the denominator vanishes there.
  Rational eval_q1() const;

  QRat operator-() const;
  friend QRat operator+(const QRat& a, const QRat& b);
  friend QRat operator-(const QRat& a, const QRat& b) { return a + (-b); }
  friend QRat operator*(const QRat& a, const QRat& b);
  friend QRat operator/(const QRat& a, const QRat& b);
  QRat& operator+=(const QRat& o) { return *this = *this + o; }
  QRat& operator-=(const QRat& o) { return *this = *this - o; }
  QRat& operator*=(const QRat& o) { return *this = *this * o; }
  friend bool operator==(const QRat& a, const QRat& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const QRat& a, const QRat& b) { return !(a == b); }

 private:
  QPoly num_, den_;
};

/// Free-function spelling of the canonical fraction constructor.
inline QRat qrat_reduce(const QPoly& num, const QPoly& den) { return QRat(num, den); }

/// Display form scalar * q^qpower * prod [k]_q over brackets (k descending).
struct QBracketForm {
  Int scalar;
  int qpower = 0;
  std::vector<int> brackets;
};

/// Greedy trial division by [k]_q, k descending. Succeeds only when the
/// residual is a monomial. Display-only; never used in computation.
std::optional<QBracketForm> factor_as_qbrackets(const QPoly& p);

/// "1+2q+2q^2+q^3" with coefficients ascending; "0" for zero.
std::string to_string(const QPoly& p);
/// Bracket form when factor_as_qbrackets succeeds, raw coefficients otherwise.
std::string to_pretty_string(const QPoly& p);
/// Polynomial forms when den == 1, "num/den" otherwise.
std::string to_string(const QRat& r);
std::string to_pretty_string(const QRat& r);

}  // namespace chromaglue
