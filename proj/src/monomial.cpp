#include "vvkit/monomial.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <stdexcept>

namespace vvkit {

PolyRing::PolyRing(std::vector<std::string> variables) : vars_(std::move(variables)) {
  if (vars_.empty()) throw std::invalid_argument("a ring needs at least one variable");
  if (vars_.size() > Monomial::kMaxVars) {
    throw std::invalid_argument("too many variables (max " + std::to_string(Monomial::kMaxVars) +
                                ")");
  }
  std::set<std::string> seen;
  for (const auto& v : vars_) {
    if (v.empty()) throw std::invalid_argument("empty variable name");
    if (!seen.insert(v).second) throw std::invalid_argument("duplicate variable name: " + v);
  }
}

std::optional<std::size_t> PolyRing::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (vars_[i] == name) return i;
  }
  return std::nullopt;
}

RingPtr make_ring(std::vector<std::string> variables) {
  return std::make_shared<const PolyRing>(std::move(variables));
}

RingPtr plane_ring() {
  static const RingPtr ring = make_ring({"x", "y", "z"});
  return ring;
}

bool same_ring(const RingPtr& a, const RingPtr& b) { return a == b || *a == *b; }

Monomial::Monomial(std::size_t arity) : arity_(static_cast<std::uint8_t>(arity)) {
  if (arity > kMaxVars) throw std::invalid_argument("monomial arity exceeds kMaxVars");
}

Monomial::Monomial(std::initializer_list<int> exponents) : Monomial(exponents.size()) {
  std::size_t i = 0;
  for (int e : exponents) set(i++, e);
}

Monomial Monomial::from_exponents(std::span<const int> exponents) {
  Monomial m(exponents.size());
  for (std::size_t i = 0; i < exponents.size(); ++i) m.set(i, exponents[i]);
  return m;
}

void Monomial::set(std::size_t i, int e) {
  if (i >= arity_) throw std::out_of_range("monomial index out of range");
  if (e < 0 || e > 0xFFFF) throw std::invalid_argument("exponent out of range");
  degree_ = static_cast<std::uint16_t>(degree_ - e_[i] + e);
  e_[i] = static_cast<Exponent>(e);
}

int Monomial::weighted_degree(std::span<const int> weights) const {
  if (weights.empty()) return degree_;
  int d = 0;
  for (std::size_t i = 0; i < arity_; ++i) d += weights[i] * e_[i];
  return d;
}

bool Monomial::divides(const Monomial& other) const {
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    if (e_[i] > other.e_[i]) return false;
  }
  return true;
}

bool Monomial::coprime(const Monomial& other) const {
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    if (e_[i] != 0 && other.e_[i] != 0) return false;
  }
  return true;
}

Monomial Monomial::operator/(const Monomial& other) const {
  Monomial r = *this;
  for (std::size_t i = 0; i < kMaxVars; ++i) r.e_[i] = static_cast<Exponent>(e_[i] - other.e_[i]);
  r.degree_ = static_cast<std::uint16_t>(degree_ - other.degree_);
  return r;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  for (std::size_t i = 0; i < Monomial::kMaxVars; ++i) {
    r.e_[i] = static_cast<Monomial::Exponent>(a.e_[i] + b.e_[i]);
  }
  r.degree_ = static_cast<std::uint16_t>(a.degree_ + b.degree_);
  if (b.arity_ > r.arity_) r.arity_ = b.arity_;
  return r;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  int d = 0;
  for (std::size_t i = 0; i < Monomial::kMaxVars; ++i) {
    r.e_[i] = std::max(a.e_[i], b.e_[i]);
    d += r.e_[i];
  }
  r.degree_ = static_cast<std::uint16_t>(d);
  return r;
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  int d = 0;
  for (std::size_t i = 0; i < Monomial::kMaxVars; ++i) {
    r.e_[i] = std::min(a.e_[i], b.e_[i]);
    d += r.e_[i];
  }
  r.degree_ = static_cast<std::uint16_t>(d);
  return r;
}

std::uint64_t Monomial::divisibility_mask() const {
  std::uint64_t m = 0;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    if (e_[i] >= 1) m |= std::uint64_t{1} << i;
    if (e_[i] >= 2) m |= std::uint64_t{1} << (20 + i);
    if (e_[i] >= 4) m |= std::uint64_t{1} << (40 + i);
  }
  return m;
}

std::size_t Monomial::hash() const {
  std::uint64_t h = 1469598103934665603ull ^ arity_;
  for (std::size_t i = 0; i < arity_; ++i) {
    h ^= e_[i];
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

MonomialOrder MonomialOrder::lex() {
  MonomialOrder o;
  o.kind_ = Kind::Lex;
  return o;
}

MonomialOrder MonomialOrder::degrevlex() { return MonomialOrder{}; }

MonomialOrder MonomialOrder::block(std::size_t first_block_size) {
  if (first_block_size == 0) throw std::invalid_argument("block order needs a nonempty first block");
  MonomialOrder o;
  o.kind_ = Kind::Block;
  o.block_ = first_block_size;
  return o;
}

MonomialOrder MonomialOrder::parse(std::string_view name) {
  if (name == "lex") return lex();
  if (name == "degrevlex" || name == "grevlex") return degrevlex();
  if (name.starts_with("block:")) {
    std::size_t k = 0;
    auto s = name.substr(6);
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), k);
    if (ec == std::errc{} && p == s.data() + s.size() && k > 0) return block(k);
  }
  throw std::invalid_argument("unknown monomial order: " + std::string(name));
}

MonomialOrder MonomialOrder::with_weights(std::vector<int> weights) const {
  for (int w : weights) {
    if (w <= 0) throw std::invalid_argument("order weights must be positive");
  }
  MonomialOrder o = *this;
  o.weights_ = std::move(weights);
  return o;
}

std::string MonomialOrder::name() const {
  switch (kind_) {
    case Kind::Lex:
      return "lex";
    case Kind::DegRevLex:
      return "degrevlex";
    case Kind::Block:
      return "block:" + std::to_string(block_);
  }
  return "?";
}

namespace {

// Degree in [lo, hi), weighted when weights are given.
int range_degree(const Monomial& m, std::size_t lo, std::size_t hi, const std::vector<int>& w) {
  int d = 0;
  if (w.empty()) {
    for (std::size_t i = lo; i < hi; ++i) d += m[i];
  } else {
    for (std::size_t i = lo; i < hi && i < w.size(); ++i) d += w[i] * m[i];
  }
  return d;
}

std::strong_ordering revlex_range(const Monomial& a, const Monomial& b, std::size_t lo,
                                  std::size_t hi) {
  for (std::size_t i = hi; i-- > lo;) {
    if (a[i] != b[i]) return a[i] < b[i] ? std::strong_ordering::greater : std::strong_ordering::less;
  }
  return std::strong_ordering::equal;
}

}  // namespace

std::strong_ordering MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  constexpr std::size_t n = Monomial::kMaxVars;
  switch (kind_) {
    case Kind::Lex:
      for (std::size_t i = 0; i < n; ++i) {
        if (a[i] != b[i]) return a[i] <=> b[i];
      }
      return std::strong_ordering::equal;
    case Kind::DegRevLex: {
      const int da = weights_.empty() ? a.degree() : range_degree(a, 0, n, weights_);
      const int db = weights_.empty() ? b.degree() : range_degree(b, 0, n, weights_);
      if (da != db) return da <=> db;
      return revlex_range(a, b, 0, n);
    }
    case Kind::Block: {
      static const std::vector<int> unit;
      const int da = range_degree(a, 0, block_, unit);
      const int db = range_degree(b, 0, block_, unit);
      if (da != db) return da <=> db;
      if (auto c = revlex_range(a, b, 0, block_); c != 0) return c;
      const int ra = range_degree(a, block_, n, weights_);
      const int rb = range_degree(b, block_, n, weights_);
      if (ra != rb) return ra <=> rb;
      return revlex_range(a, b, block_, n);
    }
  }
  return std::strong_ordering::equal;
}

std::strong_ordering compare_monomials(const MonomialOrder& order, const Monomial& a,
                                       const Monomial& b) {
  if (a.arity() != b.arity()) throw std::invalid_argument("monomial arity mismatch");
  return order.compare(a, b);
}

std::vector<Monomial> monomials_of_degree(std::size_t arity, int degree) {
  std::vector<Monomial> out;
  if (degree < 0) return out;
  Monomial m(arity);
  // Enumerate exponent vectors recursively, then sort.
  auto rec = [&](auto&& self, std::size_t i, int left) -> void {
    if (i + 1 == arity) {
      m.set(i, left);
      out.push_back(m);
      m.set(i, 0);
      return;
    }
    for (int e = left; e >= 0; --e) {
      m.set(i, e);
      self(self, i + 1, left - e);
    }
    m.set(i, 0);
  };
  if (arity == 0) return out;
  rec(rec, 0, degree);
  const auto order = MonomialOrder::degrevlex();
  std::sort(out.begin(), out.end(),
            [&](const Monomial& a, const Monomial& b) { return order.greater(a, b); });
  return out;
}

}  // namespace vvkit
