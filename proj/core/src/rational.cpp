#include "bunzeta/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace bunzeta {

Int int_pow(const Int& base, unsigned long exp) {
  Int out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
  return out;
}

Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rat out(num, den);
  out.canonicalize();
  return out;
}

Rat rat_pow(const Rat& base, long exp) {
  if (exp == 0) return Rat(1);
  if (exp < 0) {
    if (base == 0) throw std::invalid_argument("negative power of zero");
    return rat_pow(Rat(1) / base, -exp);
  }
  Rat out(int_pow(Int(base.get_num()), static_cast<unsigned long>(exp)),
          int_pow(Int(base.get_den()), static_cast<unsigned long>(exp)));
  // powers of a canonical fraction are canonical
  return out;
}

Rat rat_pow(const Rat& base, const Int& exp) {
  if (exp < 0) {
    if (base == 0) throw std::invalid_argument("negative power of zero");
    return rat_pow(Rat(1) / base, Int(-exp));
  }
  if (mpz_fits_ulong_p(exp.get_mpz_t())) {
    unsigned long e = mpz_get_ui(exp.get_mpz_t());
    return Rat(int_pow(Int(base.get_num()), e), int_pow(Int(base.get_den()), e));
  }
  // exponent beyond ulong: square-and-multiply on the bits
  Rat acc(1);
  Rat sq = base;
  Int e = exp;
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t())) acc *= sq;
    e >>= 1;
    if (e > 0) sq *= sq;
  }
  return acc;
}

std::string rat_to_string(const Rat& v) { return v.get_str(); }

Rat rat_from_string(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  std::size_t i = 0;
  auto scan_int = [&]() {
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
    std::size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == start) throw std::invalid_argument("bad rational literal: " + text);
  };
  scan_int();
  if (i < text.size()) {
    if (text[i] != '/') throw std::invalid_argument("bad rational literal: " + text);
    ++i;
    scan_int();
    if (i != text.size()) throw std::invalid_argument("bad rational literal: " + text);
  }
  Rat out;
  if (mpq_set_str(out.get_mpq_t(), text.c_str(), 10) != 0)
    throw std::invalid_argument("bad rational literal: " + text);
  if (out.get_den() == 0) throw std::invalid_argument("zero denominator: " + text);
  out.canonicalize();
  return out;
}

std::string decimal_string(const Rat& v, int digits) {
  if (digits < 0) throw std::invalid_argument("negative digit count");
  const bool negative = v < 0;
  Int num = abs(Int(v.get_num()));
  Int den = v.get_den();
  Int scaled = num * int_pow(Int(10), static_cast<unsigned long>(digits));
  Int quot, rem;
  mpz_fdiv_qr(quot.get_mpz_t(), rem.get_mpz_t(), scaled.get_mpz_t(), den.get_mpz_t());
  if (2 * rem >= den) quot += 1;
  std::string s = quot.get_str();
  if (static_cast<int>(s.size()) <= digits) s.insert(0, digits + 1 - s.size(), '0');
  if (digits > 0) s.insert(s.size() - digits, ".");
  if (negative && quot != 0) s.insert(0, "-");
  return s;
}

double to_double(const Rat& v) { return mpq_get_d(v.get_mpq_t()); }

}  // namespace bunzeta
