#include "ddist/rat.hpp"

#include <cctype>
#include <stdexcept>

namespace ddist {

namespace {

std::size_t hash_mpz(mpz_srcptr z) {
  std::size_t seed = static_cast<std::size_t>(mpz_sgn(z) + 1);
  const std::size_t n = mpz_size(z);
  const mp_limb_t* limbs = mpz_limbs_read(z);
  for (std::size_t i = 0; i < n; ++i) {
    hash_combine(seed, static_cast<std::size_t>(limbs[i]));
  }
  return seed;
}

bool valid_integer(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = 0;
  if (s[0] == '+' || s[0] == '-') i = 1;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

mpz_class parse_integer(std::string_view s) {
  if (!valid_integer(s)) {
    throw std::invalid_argument("not an integer: '" + std::string(s) + "'");
  }
  std::string digits(s[0] == '+' ? s.substr(1) : s);
  return mpz_class(digits, 10);
}

}  // namespace

Rat::Rat(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::domain_error("Rat: zero denominator");
  mpz_class n;
  mpz_class d;
  mpz_set_si(n.get_mpz_t(), num);
  mpz_set_si(d.get_mpz_t(), den);
  q_ = mpq_class(n, d);
  q_.canonicalize();
}

Rat::Rat(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw std::domain_error("Rat: zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rat Rat::parse(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) {
    text.remove_prefix(1);
  }
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) {
    text.remove_suffix(1);
  }
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return Rat(parse_integer(text), mpz_class(1));
  }
  const mpz_class num = parse_integer(text.substr(0, slash));
  const mpz_class den = parse_integer(text.substr(slash + 1));
  if (den == 0) {
    throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
  }
  return Rat(num, den);
}

std::string Rat::str() const {
  if (is_integer()) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) throw std::domain_error("Rat: division by zero");
  q_ /= o.q_;
  return *this;
}

std::size_t Rat::hash() const {
  std::size_t seed = hash_mpz(q_.get_num_mpz_t());
  hash_combine(seed, hash_mpz(q_.get_den_mpz_t()));
  return seed;
}

Rat abs(const Rat& r) { return r.sign() < 0 ? -r : r; }

Rat square(const Rat& r) { return r * r; }

std::optional<Rat> exact_sqrt(const Rat& r) {
  if (r.sign() < 0) return std::nullopt;
  const mpz_class n = r.num();
  const mpz_class d = r.den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) {
    return std::nullopt;
  }
  mpz_class sn;
  mpz_class sd;
  mpz_sqrt(sn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(sd.get_mpz_t(), d.get_mpz_t());
  return Rat(sn, sd);
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

}  // namespace ddist
