#include "vvkit/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_map>

namespace vvkit {

namespace {

const MonomialOrder& canonical_order() {
  static const MonomialOrder order = MonomialOrder::degrevlex();
  return order;
}

void require_same_ring(const Polynomial& a, const Polynomial& b) {
  if (!a.ring() || !b.ring() || !same_ring(a.ring(), b.ring())) {
    throw std::invalid_argument("polynomials live in different rings");
  }
}

void sort_and_combine(std::vector<Term>& terms) {
  const auto& ord = canonical_order();
  std::sort(terms.begin(), terms.end(),
            [&](const Term& a, const Term& b) { return ord.greater(a.monomial, b.monomial); });
  std::size_t out = 0;
  for (std::size_t i = 0; i < terms.size();) {
    std::size_t j = i + 1;
    Rational c = terms[i].coeff;
    while (j < terms.size() && terms[j].monomial == terms[i].monomial) c += terms[j++].coeff;
    if (c != 0) {
      terms[out].monomial = terms[i].monomial;
      terms[out].coeff = std::move(c);
      ++out;
    }
    i = j;
  }
  terms.resize(out);
}

}  // namespace

Polynomial Polynomial::constant(RingPtr ring, const Rational& c) {
  const std::size_t n = ring->arity();
  return from_monomial(std::move(ring), Monomial(n), c);
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t index) {
  if (index >= ring->arity()) throw std::out_of_range("variable index out of range");
  Monomial m(ring->arity());
  m.set(index, 1);
  return from_monomial(std::move(ring), m);
}

Polynomial Polynomial::variable(RingPtr ring, std::string_view name) {
  auto i = ring->index_of(name);
  if (!i) throw std::invalid_argument("unknown variable: " + std::string(name));
  return variable(std::move(ring), *i);
}

Polynomial Polynomial::from_monomial(RingPtr ring, const Monomial& m, const Rational& c) {
  if (m.arity() != ring->arity()) throw std::invalid_argument("monomial arity does not match ring");
  Polynomial p(std::move(ring));
  Rational k = c;
  k.canonicalize();
  if (k != 0) p.terms_.push_back({m, std::move(k)});
  return p;
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
  for (const auto& t : terms) {
    if (t.monomial.arity() != ring->arity()) {
      throw std::invalid_argument("monomial arity does not match ring");
    }
  }
  for (auto& t : terms) t.coeff.canonicalize();
  Polynomial p(std::move(ring));
  sort_and_combine(terms);
  p.terms_ = std::move(terms);
  return p;
}

int Polynomial::degree() const { return terms_.empty() ? -1 : terms_.front().monomial.degree(); }

int Polynomial::weighted_degree(std::span<const int> weights) const {
  if (weights.empty()) return degree();
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, t.monomial.weighted_degree(weights));
  return d;
}

bool Polynomial::is_homogeneous(std::span<const int> weights) const {
  if (terms_.empty()) return true;
  const int d = terms_.front().monomial.weighted_degree(weights);
  return std::all_of(terms_.begin(), terms_.end(),
                     [&](const Term& t) { return t.monomial.weighted_degree(weights) == d; });
}

Monomial Polynomial::leading_monomial(const MonomialOrder& order) const {
  if (terms_.empty()) throw std::domain_error("leading monomial of zero");
  const Monomial* best = &terms_.front().monomial;
  for (const auto& t : terms_) {
    if (order.greater(t.monomial, *best)) best = &t.monomial;
  }
  return *best;
}

Rational Polynomial::leading_coefficient(const MonomialOrder& order) const {
  return coefficient(leading_monomial(order));
}

Rational Polynomial::coefficient(const Monomial& m) const {
  const auto& ord = canonical_order();
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m, [&](const Term& t, const Monomial& x) {
    return ord.greater(t.monomial, x);
  });
  if (it != terms_.end() && it->monomial == m) return it->coeff;
  return 0;
}

Polynomial Polynomial::homogeneous_part(int d) const {
  Polynomial p(ring_);
  for (const auto& t : terms_) {
    if (t.monomial.degree() == d) p.terms_.push_back(t);
  }
  return p;
}

Polynomial Polynomial::monic(const MonomialOrder& order) const {
  if (is_zero()) return *this;
  Polynomial p = *this;
  p *= 1 / leading_coefficient(order);
  return p;
}

Polynomial Polynomial::operator-() const {
  Polynomial p = *this;
  for (auto& t : p.terms_) t.coeff = -t.coeff;
  return p;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  require_same_ring(*this, other);
  const auto& ord = canonical_order();
  std::vector<Term> out;
  out.reserve(terms_.size() + other.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() || j < other.terms_.size()) {
    if (j == other.terms_.size()) {
      out.push_back(std::move(terms_[i++]));
    } else if (i == terms_.size()) {
      out.push_back(other.terms_[j++]);
    } else {
      auto c = ord.compare(terms_[i].monomial, other.terms_[j].monomial);
      if (c > 0) {
        out.push_back(std::move(terms_[i++]));
      } else if (c < 0) {
        out.push_back(other.terms_[j++]);
      } else {
        Rational s = terms_[i].coeff + other.terms_[j].coeff;
        if (s != 0) out.push_back({terms_[i].monomial, std::move(s)});
        ++i;
        ++j;
      }
    }
  }
  terms_ = std::move(out);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) { return *this += -other; }

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
  } else {
    Rational k = c;
    k.canonicalize();
    for (auto& t : terms_) t.coeff *= k;
  }
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  require_same_ring(a, b);
  std::unordered_map<Monomial, Rational, MonomialHash> acc;
  acc.reserve(a.size() * b.size());
  for (const auto& s : a.terms_) {
    for (const auto& t : b.terms_) acc[s.monomial * t.monomial] += s.coeff * t.coeff;
  }
  std::vector<Term> terms;
  terms.reserve(acc.size());
  for (auto& [m, c] : acc) {
    if (c != 0) terms.push_back({m, std::move(c)});
  }
  Polynomial p(a.ring_);
  const auto& ord = canonical_order();
  std::sort(terms.begin(), terms.end(),
            [&](const Term& x, const Term& y) { return ord.greater(x.monomial, y.monomial); });
  p.terms_ = std::move(terms);
  return p;
}

Polynomial multiply(const Polynomial& a, const Polynomial& b) { return a * b; }

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (!a.ring_ || !b.ring_) return a.ring_ == b.ring_ && a.terms_ == b.terms_;
  return same_ring(a.ring_, b.ring_) && a.terms_ == b.terms_;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result = constant(ring_, 1);
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1u) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

Polynomial Polynomial::times_monomial(const Monomial& m) const {
  Polynomial p = *this;
  for (auto& t : p.terms_) t.monomial = t.monomial * m;
  return p;
}

Rational Polynomial::evaluate(std::span<const Rational> point) const {
  if (point.size() != ring_->arity()) throw std::invalid_argument("evaluation point has wrong length");
  Rational sum = 0;
  for (const auto& t : terms_) {
    Rational v = t.coeff;
    for (std::size_t i = 0; i < point.size(); ++i) {
      for (int k = 0; k < t.monomial[i]; ++k) v *= point[i];
    }
    sum += v;
  }
  return sum;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    const bool negative = t.coeff < 0;
    const Rational mag = abs(t.coeff);
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < ring_->arity(); ++i) {
      const int e = t.monomial[i];
      if (e == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += ring_->name(i);
      if (e > 1) mono += "^" + std::to_string(e);
    }
    if (mono.empty()) {
      out += vvkit::to_string(mag);
    } else if (mag == 1) {
      out += mono;
    } else {
      out += vvkit::to_string(mag) + "*" + mono;
    }
  }
  return out;
}

ParseError::ParseError(Kind kind, std::size_t offset, const std::string& message)
    : std::invalid_argument(message + " at offset " + std::to_string(offset)),
      kind_(kind),
      offset_(offset) {}

namespace {

class Parser {
 public:
  Parser(std::string_view text, const RingPtr& ring) : s_(text), ring_(ring) {}

  Polynomial run() {
    std::vector<Term> terms;
    skip();
    bool negative = false;
    if (peek() == '+' || peek() == '-') {
      negative = peek() == '-';
      ++pos_;
      skip();
    }
    terms.push_back(term(negative));
    while (true) {
      skip();
      if (pos_ == s_.size()) break;
      const char c = s_[pos_];
      if (c != '+' && c != '-') fail("expected '+' or '-'");
      ++pos_;
      skip();
      terms.push_back(term(c == '-'));
    }
    return Polynomial::from_terms(ring_, std::move(terms));
  }

 private:
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(ParseError::Kind::Syntax, pos_, "syntax error: " + what);
  }

  std::string digits() {
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return std::string(s_.substr(start, pos_ - start));
  }

  Term term(bool negative) {
    Term t{Monomial(ring_->arity()), negative ? Rational(-1) : Rational(1)};
    factor(t);
    while (true) {
      skip();
      if (peek() != '*') break;
      ++pos_;
      skip();
      factor(t);
    }
    return t;
  }

  void factor(Term& t) {
    const char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      BigInt num(digits(), 10);
      BigInt den = 1;
      skip();
      if (peek() == '/') {
        ++pos_;
        skip();
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected denominator");
        const std::size_t at = pos_;
        den = BigInt(digits(), 10);
        if (den == 0) throw ParseError(ParseError::Kind::Syntax, at, "zero denominator");
      }
      Rational q(num, den);
      q.canonicalize();
      t.coeff *= q;
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) {
        ++pos_;
      }
      const auto name = s_.substr(start, pos_ - start);
      auto idx = ring_->index_of(name);
      if (!idx) {
        throw ParseError(ParseError::Kind::UnknownVariable, start,
                         "unknown variable '" + std::string(name) + "'");
      }
      int e = 1;
      skip();
      if (peek() == '^') {
        ++pos_;
        skip();
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected exponent");
        const std::size_t at = pos_;
        const std::string d = digits();
        if (d.size() > 5 || std::stoi(d) < 1 || std::stoi(d) > 0xFFFF) {
          throw ParseError(ParseError::Kind::Syntax, at, "exponent out of range");
        }
        e = std::stoi(d);
      }
      t.monomial.set(*idx, t.monomial[*idx] + e);
      return;
    }
    fail(pos_ == s_.size() ? "unexpected end of input" : "unexpected character");
  }

  std::string_view s_;
  const RingPtr& ring_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const RingPtr& ring) {
  return Parser(text, ring).run();
}

Polynomial differentiate(const Polynomial& p, std::size_t var) {
  if (var >= p.ring()->arity()) throw std::invalid_argument("unknown variable index");
  std::vector<Term> out;
  for (const auto& t : p.terms()) {
    const int e = t.monomial[var];
    if (e == 0) continue;
    Monomial m = t.monomial;
    m.set(var, e - 1);
    out.push_back({m, t.coeff * e});
  }
  return Polynomial::from_terms(p.ring(), std::move(out));
}

Polynomial differentiate(const Polynomial& p, std::string_view var) {
  auto i = p.ring()->index_of(var);
  if (!i) throw std::invalid_argument("unknown variable: " + std::string(var));
  return differentiate(p, *i);
}

Polynomial substitute_linear(const Polynomial& p, const RationalMatrix& m) {
  const auto& ring = p.ring();
  const std::size_t n = ring->arity();
  if (m.rows() != n || m.cols() != n) throw std::invalid_argument("substitution matrix has wrong size");
  if (determinant(m) == 0) throw std::invalid_argument("substitution matrix is singular");
  std::vector<Polynomial> images;
  for (std::size_t i = 0; i < n; ++i) {
    Polynomial img(ring);
    for (std::size_t j = 0; j < n; ++j) {
      if (m(i, j) != 0) img += Polynomial::variable(ring, j) * m(i, j);
    }
    images.push_back(std::move(img));
  }
  // powers[i][k] = images[i]^k, grown on demand.
  std::vector<std::vector<Polynomial>> powers(n);
  for (std::size_t i = 0; i < n; ++i) powers[i].push_back(Polynomial::constant(ring, 1));
  Polynomial result(ring);
  for (const auto& t : p.terms()) {
    Polynomial prod = Polynomial::constant(ring, t.coeff);
    for (std::size_t i = 0; i < n; ++i) {
      const auto e = static_cast<std::size_t>(t.monomial[i]);
      while (powers[i].size() <= e) powers[i].push_back(powers[i].back() * images[i]);
      if (e > 0) prod = prod * powers[i][e];
    }
    result += prod;
  }
  return result;
}

Polynomial map_variables(const Polynomial& p, const RingPtr& target,
                         std::span<const std::size_t> var_map) {
  if (var_map.size() != p.ring()->arity()) throw std::invalid_argument("variable map has wrong size");
  std::vector<Term> out;
  out.reserve(p.size());
  for (const auto& t : p.terms()) {
    Monomial m(target->arity());
    for (std::size_t i = 0; i < var_map.size(); ++i) {
      if (t.monomial[i] == 0) continue;
      if (var_map[i] >= target->arity()) throw std::invalid_argument("variable map out of range");
      m.set(var_map[i], m[var_map[i]] + t.monomial[i]);
    }
    out.push_back({m, t.coeff});
  }
  return Polynomial::from_terms(target, std::move(out));
}

Polynomial embed(const Polynomial& p, const RingPtr& target) {
  std::vector<std::size_t> map;
  for (const auto& name : p.ring()->variables()) {
    auto i = target->index_of(name);
    if (!i) throw std::invalid_argument("target ring lacks variable " + name);
    map.push_back(*i);
  }
  return map_variables(p, target, map);
}

}  // namespace vvkit
