#include "acm5/rational.hpp"

#include <cctype>

#include "acm5/error.hpp"

namespace acm5 {

Rational::Rational(long num, long den) {
  if (den == 0) throw Error(ErrorKind::Precondition, "rational with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

mpz_class parse_integer(std::string_view s) {
  std::string digits(s[0] == '+' ? s.substr(1) : s);
  return mpz_class(digits, 10);
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  if (!is_integer_literal(num))
    throw Error(ErrorKind::Parse, "malformed rational '" + std::string(text) + "'");
  mpq_class q;
  if (slash == std::string_view::npos) {
    q = mpq_class(parse_integer(num));
  } else {
    std::string_view den = text.substr(slash + 1);
    if (!is_integer_literal(den) || den[0] == '-' || den[0] == '+')
      throw Error(ErrorKind::Parse, "malformed rational '" + std::string(text) + "'");
    mpz_class d = parse_integer(den);
    if (d == 0) throw Error(ErrorKind::Parse, "zero denominator in '" + std::string(text) + "'");
    q = mpq_class(parse_integer(num), d);
    q.canonicalize();
  }
  return Rational(q);
}

std::optional<Rational> Rational::sqrt() const {
  if (sign() < 0) return std::nullopt;
  mpz_class n = q_.get_num(), d = q_.get_den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t()))
    return std::nullopt;
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
  return Rational(mpq_class(rn, rd));
}

std::string Rational::str() const {
  if (is_integer()) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error(ErrorKind::Precondition, "division by zero");
  q_ /= o.q_;
  return *this;
}

}  // namespace acm5
