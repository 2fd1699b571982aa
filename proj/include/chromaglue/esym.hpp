// Symmetric functions in the elementary basis with QRat coefficients,
// plus the monomial-basis machinery the coloring oracle needs.
#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "chromaglue/qpoly.hpp"

namespace chromaglue {

/// Weakly decreasing sequence of positive integers. The empty partition is
/// the multiplicative identity e_{} = 1.
using Partition = std::vector<int>;

/// Sequence of positive integers. The weak variant (first part may be 0) is
/// only produced by the C_n closed form.
using Composition = std::vector<int>;

bool is_valid_partition(const Partition& p);
int partition_size(const Partition& p);
/// Sort a composition's positive parts into a partition (zero parts dropped).
Partition sort_to_partition(const Composition& alpha);
/// Remove one instance of `part`; throws invariant_error if absent.
Partition remove_one_part(Partition p, int part);
/// All partitions of n, ascending in the container order (lex on part vectors).
std::vector<Partition> partitions_of(int n);
/// All compositions of n (2^{n-1} of them), lexicographic.
std::vector<Composition> compositions_of(int n);
/// "32" when all parts are single digits, "{10,3}" otherwise, "" for empty.
std::string partition_name(const Partition& p);

/// Finite formal sum of partitions with QRat coefficients; zero coefficients
/// are never stored.
class ESym {
 public:
  ESym() = default;
  /// c * e_lambda
  ESym(const Partition& lambda, const QRat& c);
  static ESym one() { return ESym(Partition{}, QRat(1)); }

  bool is_zero() const { return terms_.empty(); }
  const std::map<Partition, QRat>& terms() const { return terms_; }
  QRat coeff(const Partition& lambda) const;

  void add_term(const Partition& lambda, const QRat& c);

  ESym operator-() const;
  friend ESym operator+(const ESym& a, const ESym& b);
  friend ESym operator-(const ESym& a, const ESym& b);
  friend ESym operator*(const ESym& a, const ESym& b);
  ESym& operator+=(const ESym& o) { return *this = *this + o; }
  ESym& operator-=(const ESym& o) { return *this = *this - o; }
  ESym& operator*=(const ESym& o) { return *this = *this * o; }
  friend ESym operator*(const QRat& c, const ESym& x);
  friend bool operator==(const ESym& a, const ESym& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const ESym& a, const ESym& b) { return !(a == b); }

  /// Every coefficient evaluated at q = 1 (QRat -> rational constant).
  ESym at_q1() const;

 private:
  std::map<Partition, QRat> terms_;
};

ESym esym_mul(const ESym& a, const ESym& b);
ESym esym_add(const ESym& a, const ESym& b);
ESym esym_scale(const QRat& c, const ESym& a);

enum class EPosMode { at_q1, coefficientwise };

struct EPosResult {
  bool positive = true;
  std::optional<std::pair<Partition, QRat>> witness;
};

/// at_q1: every coefficient >= 0 at q = 1. coefficientwise: every coefficient
/// is a polynomial with nonnegative coefficients (non-polynomial -> error).
EPosResult is_e_positive(const ESym& x, EPosMode mode);

/// Finite sum of monomial symmetric functions m_lambda with QPoly coefficients.
struct MonomialExpansion {
  std::map<Partition, QPoly> terms;

  bool operator==(const MonomialExpansion& o) const { return terms == o.terms; }
};

/// Exact expansion of e_lambda in nvars variables, aggregated by sorted
/// exponent vector. Coefficients are plain integers.
MonomialExpansion e_in_monomial(const Partition& lambda, int nvars);

/// Inverse basis change: solves the e -> m transition system for homogeneous
/// input of degree n (exact Gaussian elimination over Q per q-degree).
ESym monomial_to_e(const MonomialExpansion& m);

/// "q^2[2]_q[2]_qe32 + 2e31 + 16e4 - 6e33" style rendering; "0" when zero.
std::string to_string(const ESym& x);

}  // namespace chromaglue
