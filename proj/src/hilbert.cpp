#include "vvkit/hilbert.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace vvkit {

namespace {

using Coeffs = std::vector<BigInt>;

void trim(Coeffs& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

Coeffs times_one_minus_t_pow(Coeffs c, int k) {
  for (int r = 0; r < k; ++r) {
    c.push_back(0);
    for (std::size_t i = c.size() - 1; i > 0; --i) c[i] -= c[i - 1];
  }
  return c;
}

Coeffs add(Coeffs a, const Coeffs& b, int sign = 1) {
  if (a.size() < b.size()) a.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] += sign * b[i];
  return a;
}

BigInt binomial(long n, long k) {
  if (k < 0 || n < k) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

class SeriesRecursion {
 public:
  explicit SeriesRecursion(std::size_t arity) : arity_(arity) {}

  // Numerator over (1 - t)^arity.
  Coeffs numerator(const std::vector<Monomial>& gens) {
    if (++nodes_ > kMaxNodes) throw std::runtime_error("Hilbert series recursion exceeded 10^4 nodes");
    if (gens.empty()) return {1};
    auto key = key_of(gens);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    Coeffs result = base_case(gens);
    if (result.empty()) result = split(gens);
    memo_.emplace(std::move(key), result);
    return result;
  }

 private:
  static constexpr int kMaxNodes = 10000;

  static std::vector<int> key_of(const std::vector<Monomial>& gens) {
    std::vector<int> k;
    for (const auto& m : gens) {
      for (std::size_t i = 0; i < m.arity(); ++i) k.push_back(m[i]);
    }
    return k;
  }

  // Pairwise coprime generators: product of (1 - t^deg). Empty otherwise.
  static Coeffs base_case(const std::vector<Monomial>& gens) {
    for (std::size_t i = 0; i < gens.size(); ++i) {
      for (std::size_t j = i + 1; j < gens.size(); ++j) {
        if (!gens[i].coprime(gens[j])) return {};
      }
    }
    Coeffs c = {1};
    for (const auto& m : gens) {
      Coeffs next(c.size() + m.degree());
      for (std::size_t i = 0; i < c.size(); ++i) {
        next[i] += c[i];
        next[i + m.degree()] -= c[i];
      }
      c = std::move(next);
    }
    return c;
  }

  Coeffs split(const std::vector<Monomial>& gens) {
    // Pivot: the variable in most generators, to its least positive exponent.
    std::size_t best = 0;
    int best_count = -1;
    for (std::size_t v = 0; v < arity_; ++v) {
      int count = 0;
      for (const auto& m : gens) count += m[v] > 0 ? 1 : 0;
      if (count > best_count) best = v, best_count = count;
    }
    int e = 0;
    for (const auto& m : gens) {
      if (m[best] > 0 && (e == 0 || m[best] < e)) e = m[best];
    }
    Monomial pivot(arity_);
    pivot.set(best, e);

    std::vector<Monomial> with = gens;
    with.push_back(pivot);
    std::vector<Monomial> colon;
    for (const auto& m : gens) colon.push_back(m / gcd(m, pivot));
    const Coeffs a = numerator(MonomialIdeal(arity_, std::move(with)).generators());
    Coeffs b = numerator(MonomialIdeal(arity_, std::move(colon)).generators());
    b.insert(b.begin(), static_cast<std::size_t>(e), BigInt(0));
    return add(a, b);
  }

  std::size_t arity_;
  int nodes_ = 0;
  std::map<std::vector<int>, Coeffs> memo_;
};

std::string term(const BigInt& c, int i, bool first) {
  std::string s;
  BigInt mag = c;
  if (c < 0) {
    s = first ? "-" : " - ";
    mag = -c;
  } else if (!first) {
    s = " + ";
  }
  if (i == 0) return s + to_string(mag);
  if (mag != 1) s += to_string(mag) + "*";
  s += "t";
  if (i > 1) s += "^" + std::to_string(i);
  return s;
}

}  // namespace

HilbertSeries::HilbertSeries(std::vector<BigInt> numerator, int pole_order)
    : num_(std::move(numerator)), e_(pole_order) {
  if (e_ < 0) throw std::invalid_argument("negative pole order");
  trim(num_);
  while (e_ > 0 && !num_.empty() && multiplicity() == 0) {
    // Divide by (1 - t): the quotient has partial sums as coefficients.
    Coeffs q(num_.size() - 1);
    BigInt acc = 0;
    for (std::size_t i = 0; i + 1 < num_.size(); ++i) q[i] = acc += num_[i];
    num_ = std::move(q);
    trim(num_);
    --e_;
  }
  if (num_.empty()) e_ = 0;
}

BigInt HilbertSeries::multiplicity() const {
  BigInt s = 0;
  for (const auto& h : num_) s += h;
  return s;
}

BigInt HilbertSeries::coefficient(int d) const {
  if (d < 0) return 0;
  if (e_ == 0) return static_cast<std::size_t>(d) < num_.size() ? num_[d] : BigInt(0);
  BigInt s = 0;
  for (std::size_t i = 0; i < num_.size() && static_cast<int>(i) <= d; ++i) {
    s += num_[i] * binomial(d - static_cast<long>(i) + e_ - 1, e_ - 1);
  }
  return s;
}

std::string HilbertSeries::to_string() const {
  std::string n;
  int terms = 0;
  for (std::size_t i = 0; i < num_.size(); ++i) {
    if (num_[i] == 0) continue;
    n += term(num_[i], static_cast<int>(i), terms++ == 0);
  }
  if (terms == 0) n = "0";
  if (e_ == 0) return n;
  if (terms > 1) n = "(" + n + ")";
  std::string den = "(1 - t)";
  if (e_ > 1) den += "^" + std::to_string(e_);
  return n + "/" + den;
}

HilbertSeries operator+(const HilbertSeries& a, const HilbertSeries& b) {
  const int e = std::max(a.e_, b.e_);
  return HilbertSeries(add(times_one_minus_t_pow(a.num_, e - a.e_), times_one_minus_t_pow(b.num_, e - b.e_)),
                       e);
}

HilbertSeries operator-(const HilbertSeries& a, const HilbertSeries& b) {
  const int e = std::max(a.e_, b.e_);
  return HilbertSeries(
      add(times_one_minus_t_pow(a.num_, e - a.e_), times_one_minus_t_pow(b.num_, e - b.e_), -1), e);
}

HilbertSeries hilbert_series(const MonomialIdeal& m) {
  SeriesRecursion rec(m.arity());
  return HilbertSeries(rec.numerator(m.generators()), static_cast<int>(m.arity()));
}

HilbertSeries hilbert_series(const Ideal& a) {
  if (!a.is_homogeneous()) throw std::invalid_argument("Hilbert series of an inhomogeneous ideal");
  const auto n = a.ring()->arity();
  if (a.is_zero()) return hilbert_series(MonomialIdeal(n, {}));
  return hilbert_series(a.groebner_basis().initial_ideal());
}

BigInt hilbert_function(const MonomialIdeal& m, int d) {
  return hilbert_series(m).coefficient(d);
}

BigInt hilbert_function(const Ideal& a, int d) {
  if (!a.is_homogeneous()) throw std::invalid_argument("Hilbert function of an inhomogeneous ideal");
  if (d < 0) return 0;
  const auto n = a.ring()->arity();
  if (a.is_zero()) return binomial(d + static_cast<long>(n) - 1, static_cast<long>(n) - 1);
  // Leading monomials of degree <= d agree with the full initial ideal.
  const auto gb = a.groebner_basis_upto(d);
  std::vector<Monomial> leads;
  for (const auto& m : gb.leading_monomials()) {
    if (m.degree() <= d) leads.push_back(m);
  }
  return hilbert_function(MonomialIdeal(n, std::move(leads)), d);
}

}  // namespace vvkit
