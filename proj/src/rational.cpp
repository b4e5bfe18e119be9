#include "instanton/rational.hpp"

#include <cctype>

#include "instanton/errors.hpp"

namespace instanton {

std::string to_string(const Rational& r) { return r.get_str(); }

namespace {

bool valid_integer_text(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!valid_integer_text(num) || !valid_integer_text(den) || den[0] == '-' || den[0] == '+')
    throw DomainError("not an exact rational: '" + std::string(text) + "'");
  std::string n(num[0] == '+' ? num.substr(1) : num);
  Integer d{std::string(den)};
  if (d == 0) throw DomainError("zero denominator in '" + std::string(text) + "'");
  Rational r(Integer(n), d);
  r.canonicalize();
  return r;
}

Integer floor(const Rational& r) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q;
}

Integer ceil(const Rational& r) {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q;
}

std::int64_t to_int64(const Integer& z) {
  if (!z.fits_slong_p()) throw DomainError("integer out of range: " + z.get_str());
  return z.get_si();
}

std::int64_t to_int64(const Rational& r) {
  if (!is_integer(r)) throw DomainError("not an integer: " + r.get_str());
  return to_int64(r.get_num());
}

Integer lcm(const Integer& a, const Integer& b) {
  Integer out;
  mpz_lcm(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return out;
}

}  // namespace instanton
