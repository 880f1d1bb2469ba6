#include "secant/scalar.hpp"

#include <cctype>
#include <ostream>

#include "secant/error.hpp"

namespace secant {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull}) {
    if (n % q == 0) return n == q;
  }
  for (std::uint64_t d = 17; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

std::string to_string(const Integer& z) { return z.get_str(); }

std::string to_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw InvalidInput("empty rational literal");

  auto parse_int = [&](std::string_view s) {
    std::string buf(s);
    bool ok = !buf.empty();
    std::size_t start = (ok && (buf[0] == '-' || buf[0] == '+')) ? 1 : 0;
    ok = ok && start < buf.size();
    for (std::size_t i = start; ok && i < buf.size(); ++i) {
      ok = std::isdigit(static_cast<unsigned char>(buf[i])) != 0;
    }
    if (!ok) throw InvalidInput("malformed rational literal '" + std::string(text) + "'");
    if (buf[0] == '+') buf.erase(0, 1);
    return Integer(buf);
  };

  Rational q;
  auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    q = Rational(parse_int(text));
  } else {
    Integer den = parse_int(text.substr(slash + 1));
    if (den == 0) throw InvalidInput("zero denominator in '" + std::string(text) + "'");
    q = Rational(parse_int(text.substr(0, slash)), den);
    q.canonicalize();
  }
  return q;
}

std::uint32_t Residues::inv(std::uint32_t a) const {
  if (a == 0) throw InvalidInput("division by zero in F_p");
  // Extended Euclid on signed 64-bit values.
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p, new_r = a;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

std::uint32_t Residues::reduce(std::int64_t v) const {
  std::int64_t m = v % static_cast<std::int64_t>(p);
  if (m < 0) m += p;
  return static_cast<std::uint32_t>(m);
}

std::uint32_t Residues::reduce(const Rational& q) const {
  Integer num = q.get_num() % p;
  if (num < 0) num += p;
  Integer den = q.get_den() % p;
  if (den == 0) throw InvalidInput("denominator " + q.get_den().get_str() + " vanishes mod " + std::to_string(p));
  return mul(static_cast<std::uint32_t>(num.get_ui()), inv(static_cast<std::uint32_t>(den.get_ui())));
}

ModP::ModP(std::int64_t value, std::uint32_t p) : p_(p) {
  if (p < 2) throw InvalidInput("prime field modulus must be at least 2");
  value_ = Residues{p}.reduce(value);
}

ModP ModP::from_rational(const Rational& q, std::uint32_t p) {
  ModP x(0, p);
  x.value_ = Residues{p}.reduce(q);
  return x;
}

void ModP::check_same_field(const ModP& o) const {
  if (p_ != o.p_) {
    throw InvalidInput("mixed prime fields: " + std::to_string(p_) + " vs " + std::to_string(o.p_));
  }
}

ModP ModP::inverse() const {
  ModP x = *this;
  x.value_ = Residues{p_}.inv(value_);
  return x;
}

ModP& ModP::operator+=(const ModP& o) {
  check_same_field(o);
  value_ = Residues{p_}.add(value_, o.value_);
  return *this;
}

ModP& ModP::operator-=(const ModP& o) {
  check_same_field(o);
  value_ = Residues{p_}.sub(value_, o.value_);
  return *this;
}

ModP& ModP::operator*=(const ModP& o) {
  check_same_field(o);
  value_ = Residues{p_}.mul(value_, o.value_);
  return *this;
}

ModP& ModP::operator/=(const ModP& o) {
  check_same_field(o);
  value_ = Residues{p_}.mul(value_, Residues{p_}.inv(o.value_));
  return *this;
}

ModP ModP::operator-() const {
  ModP x = *this;
  x.value_ = Residues{p_}.neg(value_);
  return x;
}

std::ostream& operator<<(std::ostream& os, const ModP& x) {
  return os << x.value() << " (mod " << x.modulus() << ")";
}

}  // namespace secant
