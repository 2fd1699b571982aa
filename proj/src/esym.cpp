#include "chromaglue/esym.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace chromaglue {

bool is_valid_partition(const Partition& p) {
  for (size_t i = 0; i < p.size(); ++i) {
    if (p[i] <= 0) return false;
    if (i > 0 && p[i] > p[i - 1]) return false;
  }
  return true;
}

int partition_size(const Partition& p) {
  int s = 0;
  for (int x : p) s += x;
  return s;
}

Partition sort_to_partition(const Composition& alpha) {
  Partition p;
  for (int x : alpha)
    if (x > 0) p.push_back(x);
  std::sort(p.begin(), p.end(), std::greater<int>());
  return p;
}

Partition remove_one_part(Partition p, int part) {
  auto it = std::find(p.begin(), p.end(), part);
  if (it == p.end())
    throw invariant_error("remove_one_part: no part " + std::to_string(part) + " in " +
                          partition_name(p));
  p.erase(it);
  return p;
}

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  Partition cur;
  std::function<void(int, int)> rec = [&](int left, int maxp) {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (int p = std::min(left, maxp); p >= 1; --p) {
      cur.push_back(p);
      rec(left - p, p);
      cur.pop_back();
    }
  };
  rec(n, n);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Composition> compositions_of(int n) {
  std::vector<Composition> out;
  Composition cur;
  std::function<void(int)> rec = [&](int left) {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (int p = 1; p <= left; ++p) {
      cur.push_back(p);
      rec(left - p);
      cur.pop_back();
    }
  };
  rec(n);
  return out;
}

std::string partition_name(const Partition& p) {
  if (p.empty()) return "";
  bool digits = std::all_of(p.begin(), p.end(), [](int x) { return x <= 9; });
  std::ostringstream out;
  if (digits) {
    for (int x : p) out << x;
  } else {
    out << "{";
    for (size_t i = 0; i < p.size(); ++i) out << (i ? "," : "") << p[i];
    out << "}";
  }
  return out.str();
}

ESym::ESym(const Partition& lambda, const QRat& c) { add_term(lambda, c); }

QRat ESym::coeff(const Partition& lambda) const {
  auto it = terms_.find(lambda);
  return it == terms_.end() ? QRat() : it->second;
}

void ESym::add_term(const Partition& lambda, const QRat& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(lambda, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

ESym ESym::operator-() const {
  ESym r;
  for (const auto& [p, c] : terms_) r.terms_.emplace(p, -c);
  return r;
}

ESym operator+(const ESym& a, const ESym& b) {
  ESym r = a;
  for (const auto& [p, c] : b.terms_) r.add_term(p, c);
  return r;
}

ESym operator-(const ESym& a, const ESym& b) { return a + (-b); }

ESym operator*(const ESym& a, const ESym& b) {
  ESym r;
  for (const auto& [pa, ca] : a.terms_) {
    for (const auto& [pb, cb] : b.terms_) {
      Partition p = pa;
      p.insert(p.end(), pb.begin(), pb.end());
      std::sort(p.begin(), p.end(), std::greater<int>());
      r.add_term(p, ca * cb);
    }
  }
  return r;
}

ESym operator*(const QRat& c, const ESym& x) {
  ESym r;
  if (c.is_zero()) return r;
  for (const auto& [p, v] : x.terms_) r.add_term(p, c * v);
  return r;
}

ESym ESym::at_q1() const {
  ESym r;
  for (const auto& [p, c] : terms_) {
    Rational v = c.eval_q1();
    r.add_term(p, QRat(QPoly(Int(v.get_num())), QPoly(Int(v.get_den()))));
  }
  return r;
}

ESym esym_mul(const ESym& a, const ESym& b) { return a * b; }
ESym esym_add(const ESym& a, const ESym& b) { return a + b; }
ESym esym_scale(const QRat& c, const ESym& a) { return c * a; }

EPosResult is_e_positive(const ESym& x, EPosMode mode) {
  for (const auto& [p, c] : x.terms()) {
    bool ok;
    if (mode == EPosMode::at_q1) {
      ok = c.eval_q1() >= 0;
    } else {
      ok = c.as_polynomial().all_coeffs_nonnegative();
    }
    if (!ok) return EPosResult{false, std::make_pair(p, c)};
  }
  return EPosResult{};
}

namespace {

Int binom(int n, int k) {
  Int b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return b;
}

// Value classes of a padded descending exponent vector: (value, count) pairs.
std::vector<std::pair<int, int>> value_classes(const std::vector<int>& v) {
  std::vector<std::pair<int, int>> cls;
  for (int x : v) {
    if (!cls.empty() && cls.back().first == x)
      ++cls.back().second;
    else
      cls.emplace_back(x, 1);
  }
  return cls;
}

}  // namespace

MonomialExpansion e_in_monomial(const Partition& lambda, int nvars) {
  if (!is_valid_partition(lambda)) throw std::invalid_argument("e_in_monomial: not a partition");
  // Coefficients of representative monomials x^mu, mu descending, padded to
  // nvars slots. Multiplying by e_k: coefficient of x^nu is the sum over
  // k-subsets S of slots of the coefficient of x^(nu - 1_S); subsets are
  // grouped by the value classes of nu they touch.
  std::map<std::vector<int>, Int> cur;
  cur[std::vector<int>(nvars, 0)] = 1;
  for (int k : lambda) {
    if (k > nvars) {
      cur.clear();
      break;
    }
    std::map<std::vector<int>, Int> next;
    for (const auto& [mu, c] : cur) {
      auto cls = value_classes(mu);
      // Choose j_i slots of class i to increment, sum j_i = k.
      std::vector<int> pick(cls.size(), 0);
      std::function<void(size_t, int)> rec = [&](size_t idx, int left) {
        if (idx == cls.size()) {
          if (left != 0) return;
          std::vector<int> nu = mu;
          Int mult = 1;
          size_t pos = 0;
          for (size_t i = 0; i < cls.size(); ++i) {
            for (int t = 0; t < pick[i]; ++t) nu[pos + t] += 1;
            pos += cls[i].second;
          }
          std::sort(nu.begin(), nu.end(), std::greater<int>());
          // Target-side multiplicity: which slots of each value class of nu
          // were the incremented ones.
          auto ncls = value_classes(nu);
          for (const auto& [v, cnt] : ncls) {
            if (v == 0) continue;
            int incremented = 0;
            for (size_t i = 0; i < cls.size(); ++i)
              if (cls[i].first == v - 1) incremented = pick[i];
            if (incremented) mult *= binom(cnt, incremented);
          }
          next[nu] += c * mult;
          return;
        }
        int cap = std::min(cls[idx].second, left);
        for (int j = 0; j <= cap; ++j) {
          pick[idx] = j;
          rec(idx + 1, left - j);
        }
        pick[idx] = 0;
      };
      rec(0, k);
    }
    cur = std::move(next);
  }
  MonomialExpansion out;
  for (const auto& [mu, c] : cur) {
    if (c == 0) continue;
    Partition p;
    for (int x : mu)
      if (x > 0) p.push_back(x);
    out.terms[p] = QPoly(c);
  }
  return out;
}

ESym monomial_to_e(const MonomialExpansion& m) {
  if (m.terms.empty()) return ESym();
  int n = -1;
  for (const auto& [p, c] : m.terms) {
    if (!is_valid_partition(p)) throw std::invalid_argument("monomial_to_e: bad partition");
    int s = partition_size(p);
    if (n == -1) n = s;
    if (s != n) throw invariant_error("monomial_to_e: input not homogeneous");
  }
  std::vector<Partition> plist = partitions_of(n);
  const int N = static_cast<int>(plist.size());
  std::map<Partition, int> index;
  for (int i = 0; i < N; ++i) index[plist[i]] = i;

  // A[mu][lam] = integer coefficient of m_mu in e_lam (nvars = n suffices).
  std::vector<std::vector<Rational>> A(N, std::vector<Rational>(N, Rational(0)));
  for (int j = 0; j < N; ++j) {
    MonomialExpansion em = e_in_monomial(plist[j], n);
    for (const auto& [mu, c] : em.terms) A[index.at(mu)][j] = Rational(c.coeff(0));
  }
  std::vector<QRat> rhs(N);
  for (const auto& [mu, c] : m.terms) rhs[index.at(mu)] = QRat(c);

  auto scalar = [](const Rational& f) {
    return QRat(QPoly(Int(f.get_num())), QPoly(Int(f.get_den())));
  };
  // Exact Gaussian elimination over Q; RHS entries live in QRat.
  std::vector<int> where(N, -1);
  int row = 0;
  for (int col = 0; col < N && row < N; ++col) {
    int piv = -1;
    for (int r = row; r < N; ++r)
      if (A[r][col] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(A[piv], A[row]);
    std::swap(rhs[piv], rhs[row]);
    Rational pv = A[row][col];
    for (int c2 = col; c2 < N; ++c2) A[row][c2] /= pv;
    rhs[row] = scalar(Rational(1) / pv) * rhs[row];
    for (int r = 0; r < N; ++r) {
      if (r == row || A[r][col] == 0) continue;
      Rational f = A[r][col];
      for (int c2 = col; c2 < N; ++c2) A[r][c2] -= f * A[row][c2];
      rhs[r] -= scalar(f) * rhs[row];
    }
    where[col] = row;
    ++row;
  }
  ESym out;
  for (int col = 0; col < N; ++col) {
    if (where[col] < 0) {
      // The e->m transition matrix is invertible; a missing pivot means the
      // input was not representable.
      throw invariant_error("monomial_to_e: inconsistent system");
    }
    out.add_term(plist[col], rhs[where[col]]);
  }
  return out;
}

std::string to_string(const ESym& x) {
  if (x.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [p, c] : x.terms()) {
    std::string cs = to_pretty_string(c);
    bool negative = cs.size() > 1 && cs[0] == '-';
    if (negative) cs = cs.substr(1);
    // Multi-term raw coefficients get parenthesized before juxtaposition.
    bool needs_paren =
        cs.find('+') != std::string::npos || cs.find('-') != std::string::npos || cs.find('/') != std::string::npos;
    if (needs_paren) cs = "(" + cs + ")";
    if (first) {
      if (negative) out << "-";
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    if (p.empty()) {
      out << cs;
    } else {
      if (cs != "1") out << cs;
      out << "e" << partition_name(p);
    }
  }
  return out.str();
}

}  // namespace chromaglue
