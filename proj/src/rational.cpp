#include "vvkit/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace vvkit {

namespace {

bool is_integer_text(std::string_view s) {
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

std::string strip(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  std::string out(s.substr(b, e - b));
  if (!out.empty() && out[0] == '+') out.erase(0, 1);
  return out;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string t = strip(text);
  const auto slash = t.find('/');
  const std::string num = t.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : t.substr(slash + 1);
  if (!is_integer_text(num) || !is_integer_text(den) || den[0] == '-' || den[0] == '+') {
    throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
  }
  BigInt n(num, 10), d(den, 10);
  if (d == 0) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(10); }
std::string to_string(const BigInt& z) { return z.get_str(10); }

ModP ModP::from(const BigInt& z) {
  BigInt r = z % BigInt(static_cast<unsigned long>(kPrime));
  if (r < 0) r += static_cast<unsigned long>(kPrime);
  return ModP(static_cast<std::uint32_t>(r.get_ui()));
}

ModP ModP::from(const Rational& q) {
  ModP d = from(BigInt(q.get_den()));
  if (d.is_zero()) throw std::domain_error("denominator vanishes modulo the prefilter prime");
  return from(BigInt(q.get_num())) * d.inverse();
}

ModP ModP::inverse() const {
  if (v_ == 0) throw std::domain_error("inverse of zero in F_p");
  // Extended Euclid on (v, p).
  std::int64_t a = v_, b = kPrime, x0 = 1, x1 = 0;
  while (b != 0) {
    std::int64_t q = a / b;
    std::int64_t t = a - q * b;
    a = b;
    b = t;
    t = x0 - q * x1;
    x0 = x1;
    x1 = t;
  }
  if (x0 < 0) x0 += kPrime;
  return ModP(static_cast<std::uint32_t>(x0), Raw{});
}

}  // namespace vvkit
