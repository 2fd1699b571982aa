#include "chromaglue/qpoly.hpp"

#include <algorithm>
#include <sstream>

namespace chromaglue {

void QPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

QPoly QPoly::monomial(const Int& c, int power) {
  if (c == 0) return QPoly();
  std::vector<Int> v(power + 1, Int(0));
  v[power] = c;
  return QPoly(std::move(v));
}

const Int& QPoly::leading() const {
  if (is_zero()) throw invariant_error("leading coefficient of zero polynomial");
  return coeffs_.back();
}

Int QPoly::content() const {
  Int g = 0;
  for (const Int& c : coeffs_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

QPoly QPoly::primitive_part() const {
  if (is_zero()) return QPoly();
  Int g = content();
  std::vector<Int> v(coeffs_);
  for (Int& c : v) c /= g;
  return QPoly(std::move(v));
}

Int QPoly::eval_int(const Int& x) const {
  Int acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Rational QPoly::eval(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

QPoly QPoly::operator-() const {
  std::vector<Int> v(coeffs_);
  for (Int& c : v) c = -c;
  return QPoly(std::move(v));
}

QPoly& QPoly::operator+=(const QPoly& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Int(0));
  for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Int(0));
  for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

QPoly operator*(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return QPoly();
  std::vector<Int> v(a.coeffs_.size() + b.coeffs_.size() - 1, Int(0));
  for (size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return QPoly(std::move(v));
}

bool QPoly::all_coeffs_nonnegative() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Int& c) { return c >= 0; });
}

bool try_div_exact(const QPoly& a, const QPoly& b, QPoly* quotient) {
  if (b.is_zero()) throw invariant_error("division by zero polynomial");
  if (a.is_zero()) {
    if (quotient) *quotient = QPoly();
    return true;
  }
  if (a.degree() < b.degree()) return false;
  std::vector<Int> rem(a.coeffs());
  std::vector<Int> quo(a.degree() - b.degree() + 1, Int(0));
  const auto& bc = b.coeffs();
  for (int k = static_cast<int>(quo.size()) - 1; k >= 0; --k) {
    Int& lead = rem[k + b.degree()];
    if (lead == 0) continue;
    Int q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), lead.get_mpz_t(), bc.back().get_mpz_t());
    if (r != 0) return false;
    quo[k] = q;
    for (int i = 0; i <= b.degree(); ++i) rem[k + i] -= q * bc[i];
  }
  for (const Int& c : rem)
    if (c != 0) return false;
  if (quotient) *quotient = QPoly(std::move(quo));
  return true;
}

QPoly div_exact(const QPoly& a, const QPoly& b) {
  QPoly q;
  if (!try_div_exact(a, b, &q)) throw invariant_error("inexact polynomial division");
  return q;
}

namespace {

// Pseudo-remainder of primitive a by primitive b, deg(a) >= deg(b) >= 0.
QPoly pseudo_rem(QPoly a, const QPoly& b) {
  while (!a.is_zero() && a.degree() >= b.degree()) {
    int shift = a.degree() - b.degree();
    // lead(b)*a - lead(a)*q^shift*b kills the top term exactly over Z.
    a = QPoly(b.leading()) * a - QPoly::monomial(a.leading(), shift) * b;
  }
  return a;
}

}  // namespace

QPoly poly_gcd(const QPoly& a, const QPoly& b) {
  if (a.is_zero() && b.is_zero()) return QPoly();
  if (a.is_zero()) return b.leading() > 0 ? b : -b;
  if (b.is_zero()) return a.leading() > 0 ? a : -a;
  Int cont;
  mpz_gcd(cont.get_mpz_t(), a.content().get_mpz_t(), b.content().get_mpz_t());
  QPoly u = a.primitive_part(), v = b.primitive_part();
  if (u.degree() < v.degree()) std::swap(u, v);
  while (!v.is_zero()) {
    QPoly r = pseudo_rem(u, v).primitive_part();
    u = v;
    v = r;
  }
  if (u.leading() < 0) u = -u;
  return QPoly(cont) * u;
}

QPoly q_integer(int k) {
  if (k < 0) throw std::invalid_argument("q_integer: negative k");
  return QPoly(std::vector<Int>(k, Int(1)));
}

QPoly q_factorial(int k) {
  if (k < 0) throw std::invalid_argument("q_factorial: negative k");
  QPoly p(1);
  for (int j = 2; j <= k; ++j) p *= q_integer(j);
  return p;
}

QRat::QRat(const QPoly& num, const QPoly& den) : num_(num), den_(den) {
  if (den_.is_zero()) throw invariant_error("QRat: zero denominator");
  if (num_.is_zero()) {
    den_ = QPoly(1);
    return;
  }
  QPoly g = poly_gcd(num_, den_);
  if (!g.is_one()) {
    num_ = div_exact(num_, g);
    den_ = div_exact(den_, g);
  }
  if (den_.leading() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

const QPoly& QRat::as_polynomial() const {
  if (!is_polynomial()) throw invariant_error("QRat is not a polynomial: " + to_string(*this));
  return num_;
}

Rational QRat::eval_q1() const {
  Int d = den_.eval_int(1);
  if (d == 0) throw invariant_error("QRat denominator vanishes at q=1");
  Rational r(num_.eval_int(1), d);
  r.canonicalize();
  return r;
}

QRat QRat::operator-() const {
  QRat r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

QRat operator+(const QRat& a, const QRat& b) {
  return QRat(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

QRat operator*(const QRat& a, const QRat& b) { return QRat(a.num_ * b.num_, a.den_ * b.den_); }

QRat operator/(const QRat& a, const QRat& b) {
  if (b.is_zero()) throw invariant_error("QRat division by zero");
  return QRat(a.num_ * b.den_, a.den_ * b.num_);
}

std::optional<QBracketForm> factor_as_qbrackets(const QPoly& p) {
  if (p.is_zero()) return std::nullopt;
  QBracketForm form;
  int low = 0;
  while (p.coeff(low) == 0) ++low;
  form.qpower = low;
  std::vector<Int> shifted(p.coeffs().begin() + low, p.coeffs().end());
  QPoly res((std::vector<Int>(shifted)));
  for (int k = res.degree() + 1; k >= 2; --k) {
    QPoly bracket = q_integer(k);
    QPoly quo;
    while (res.degree() + 1 >= k && try_div_exact(res, bracket, &quo)) {
      form.brackets.push_back(k);
      res = quo;
    }
  }
  if (res.degree() != 0) return std::nullopt;
  form.scalar = res.coeff(0);
  return form;
}

std::string to_string(const QPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int k = 0; k <= p.degree(); ++k) {
    Int c = p.coeff(k);
    if (c == 0) continue;
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? "-" : "+");
    }
    Int a = abs(c);
    if (a != 1 || k == 0) out << a.get_str();
    if (k >= 1) out << "q";
    if (k >= 2) out << "^" << k;
    first = false;
  }
  return out.str();
}

std::string to_pretty_string(const QPoly& p) {
  auto form = factor_as_qbrackets(p);
  if (!form) return to_string(p);
  std::ostringstream out;
  Int a = abs(form->scalar);
  if (form->scalar < 0) out << "-";
  if (a != 1 || (form->qpower == 0 && form->brackets.empty())) out << a.get_str();
  if (form->qpower >= 1) out << "q";
  if (form->qpower >= 2) out << "^" << form->qpower;
  for (int k : form->brackets) out << "[" << k << "]_q";
  return out.str();
}

std::string to_string(const QRat& r) {
  if (r.is_polynomial()) return to_string(r.num());
  return "(" + to_string(r.num()) + ")/(" + to_string(r.den()) + ")";
}

std::string to_pretty_string(const QRat& r) {
  if (r.is_polynomial()) return to_pretty_string(r.num());
  return "(" + to_pretty_string(r.num()) + ")/(" + to_pretty_string(r.den()) + ")";
}

}  // namespace chromaglue
