#include "bunzeta/curve_zeta.hpp"

#include "bunzeta/arith.hpp"

#include <cctype>
#include <stdexcept>

namespace bunzeta {

namespace {

constexpr int kPositivityRange = 8;  // N_r >= 0 checked for r = 1..8
constexpr int kWeilRange = 4;        // |s_r| <= 2g q^{r/2} checked for r = 1..4
constexpr long kMaxEllipticPrime = 10000;

Int power_sum_impl(const std::vector<Int>& a, long /*q*/, int r) {
  // Newton's identities for P(t) = prod_j (1 - alpha_j t) = sum a_k t^k:
  //   s_r = -r a_r - sum_{k=1}^{r-1} a_k s_{r-k}   (a_k = 0 beyond deg P)
  const int deg = static_cast<int>(a.size()) - 1;
  std::vector<Int> s(static_cast<std::size_t>(r) + 1);
  for (int m = 1; m <= r; ++m) {
    Int acc = 0;
    if (m <= deg) acc = -m * a[m];
    for (int k = 1; k < m && k <= deg; ++k) acc -= a[k] * s[m - k];
    s[m] = acc;
  }
  return s[r];
}

}  // namespace

CurveZeta CurveZeta::projective_line(long q) {
  require_prime_power(q);
  return CurveZeta{q, 0, {Int(1)}};
}

CurveZeta CurveZeta::from_numerator(long q, int genus, std::vector<Int> coeffs) {
  require_prime_power(q);
  if (genus < 0) throw std::invalid_argument("negative genus");
  if (coeffs.size() != static_cast<std::size_t>(2 * genus + 1))
    throw std::invalid_argument("numerator must have 2g+1 coefficients");
  if (coeffs[0] != 1) throw std::invalid_argument("numerator must have constant term 1");

  for (int j = 0; j <= genus; ++j) {
    Int expect = int_pow(Int(q), static_cast<unsigned long>(genus - j)) * coeffs[j];
    if (coeffs[2 * genus - j] != expect)
      throw std::invalid_argument("functional equation fails at coefficient j=" +
                                  std::to_string(j));
  }

  CurveZeta zeta{q, genus, std::move(coeffs)};
  for (int r = 1; r <= kPositivityRange; ++r) {
    if (point_count(zeta, r) < 0)
      throw std::invalid_argument("point count N_r negative at r=" + std::to_string(r));
  }
  for (int r = 1; r <= kWeilRange; ++r) {
    Int s = frobenius_power_sum(zeta, r);
    Int bound = Int(4) * genus * genus * int_pow(Int(q), static_cast<unsigned long>(r));
    if (s * s > bound)
      throw std::invalid_argument("Weil bound fails at r=" + std::to_string(r));
  }
  return zeta;
}

CurveZeta CurveZeta::elliptic_from_weierstrass(long p, long a1, long a2, long a3,
                                               long a4, long a6) {
  if (!is_prime(p)) throw std::invalid_argument("elliptic base field must be prime");
  if (p > kMaxEllipticPrime)
    throw std::invalid_argument("elliptic enumeration limited to p <= 10^4");

  auto mod = [p](Int v) {
    Int out;
    mpz_mod_ui(out.get_mpz_t(), v.get_mpz_t(), static_cast<unsigned long>(p));
    return out;
  };

  // Nonsingularity via the discriminant of the Weierstrass model.
  Int b2 = Int(a1) * a1 + 4 * Int(a2);
  Int b4 = 2 * Int(a4) + Int(a1) * a3;
  Int b6 = Int(a3) * a3 + 4 * Int(a6);
  Int b8 = Int(a1) * a1 * a6 + 4 * Int(a2) * a6 - Int(a1) * a3 * a4 + Int(a2) * a3 * a3 -
           Int(a4) * a4;
  Int disc = -b2 * b2 * b8 - 8 * b4 * b4 * b4 - 27 * b6 * b6 + 9 * b2 * b4 * b6;
  if (mod(disc) == 0) throw std::invalid_argument("singular Weierstrass equation mod p");

  long affine = 0;
  for (long x = 0; x < p; ++x) {
    for (long y = 0; y < p; ++y) {
      Int lhs = Int(y) * y + Int(a1) * x * y + Int(a3) * y;
      Int rhs = Int(x) * x * x + Int(a2) * x * x + Int(a4) * x + Int(a6);
      if (mod(lhs - rhs) == 0) ++affine;
    }
  }
  long n1 = affine + 1;
  return from_numerator(p, 1, {Int(1), Int(n1 - p - 1), Int(p)});
}

Int frobenius_power_sum(const CurveZeta& zeta, int r) {
  if (r < 1) throw std::invalid_argument("power sum index must be >= 1");
  return power_sum_impl(zeta.numerator, zeta.q, r);
}

Int point_count(const CurveZeta& zeta, int r) {
  if (r < 1) throw std::invalid_argument("point count index must be >= 1");
  return int_pow(Int(zeta.q), static_cast<unsigned long>(r)) + 1 -
         frobenius_power_sum(zeta, r);
}

Int closed_points(const CurveZeta& zeta, int d) {
  if (d < 1) throw std::invalid_argument("closed point degree must be >= 1");
  Int acc = 0;
  for (int e : divisors(d)) acc += moebius(d / e) * point_count(zeta, e);
  // The Moebius sum of power sums of an integer polynomial is divisible by d.
  if (!mpz_divisible_ui_p(acc.get_mpz_t(), static_cast<unsigned long>(d)))
    throw std::logic_error("closed point Moebius sum not divisible by degree");
  Int out = acc / d;
  if (out < 0)
    throw std::invalid_argument("negative closed-point count at degree " + std::to_string(d) +
                                "; numerator is not a Weil polynomial");
  return out;
}

std::map<int, Int> closed_point_table(const CurveZeta& zeta, int max_degree) {
  std::map<int, Int> table;
  for (int d = 1; d <= max_degree; ++d) table[d] = closed_points(zeta, d);
  return table;
}

Rat zeta_value(const CurveZeta& zeta, int s) {
  if (s <= 1) throw std::domain_error("zeta value defined for integer s >= 2 only");
  const Int q(zeta.q);
  // P(q^{-s}) over the common denominator q^{2gs}
  Rat numerator(0);
  for (int j = 0; j <= 2 * zeta.genus; ++j)
    numerator += make_rat(zeta.numerator[j],
                          int_pow(q, static_cast<unsigned long>(s) * j));
  Rat d1 = 1 - make_rat(1, int_pow(q, static_cast<unsigned long>(s)));
  Rat d2 = 1 - make_rat(int_pow(q, 1), int_pow(q, static_cast<unsigned long>(s)));
  Rat out = numerator / (d1 * d2);
  if (out <= 0) throw std::logic_error("zeta special value not positive");
  return out;
}

namespace {

// Tiny cursor parser for the curve spec grammar; errors carry the position.
class SpecParser {
 public:
  explicit SpecParser(const std::string& text) : text_(text) {}

  [[noreturn]] void fail(const std::string& expected) const {
    throw std::invalid_argument("curve spec error at position " + std::to_string(pos_) +
                                ": expected " + expected);
  }

  bool literal(const std::string& word) {
    if (text_.compare(pos_, word.size(), word) == 0) {
      pos_ += word.size();
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("'") + c + "'");
    ++pos_;
  }

  long integer() {
    std::size_t start = pos_;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == start || (pos_ == start + 1 && !std::isdigit(static_cast<unsigned char>(text_[start]))))
      fail("integer");
    return std::stol(text_.substr(start, pos_ - start));
  }

  std::vector<long> integer_list() {
    std::vector<long> out{integer()};
    while (pos_ < text_.size() && text_[pos_] == ',') {
      ++pos_;
      out.push_back(integer());
    }
    return out;
  }

  bool done() const { return pos_ == text_.size(); }
  std::size_t pos() const { return pos_; }

 private:
  const std::string& text_;
  std::size_t pos_ = 0;
};

}  // namespace

CurveZeta parse_curve_spec(const std::string& spec, std::optional<long> q_flag) {
  SpecParser p(spec);
  if (p.literal("p1")) {
    if (!p.done()) p.fail("end of spec after 'p1'");
    if (!q_flag) throw std::invalid_argument("curve 'p1' requires --q");
    return CurveZeta::projective_line(*q_flag);
  }
  if (p.literal("weil:")) {
    if (!p.literal("q=")) p.fail("'q='");
    long q = p.integer();
    p.expect(',');
    if (!p.literal("g=")) p.fail("'g='");
    long g = p.integer();
    p.expect(',');
    if (!p.literal("num=")) p.fail("'num='");
    std::vector<long> nums = p.integer_list();
    if (!p.done()) p.fail("end of spec after coefficient list");
    if (q_flag && *q_flag != q)
      throw std::invalid_argument("--q conflicts with q declared in the curve spec");
    std::vector<Int> coeffs(nums.begin(), nums.end());
    return CurveZeta::from_numerator(q, static_cast<int>(g), std::move(coeffs));
  }
  if (p.literal("elliptic:")) {
    if (!p.literal("p=")) p.fail("'p='");
    long prime = p.integer();
    p.expect(',');
    if (!p.literal("a=[")) p.fail("'a=['");
    std::vector<long> a = p.integer_list();
    p.expect(']');
    if (!p.done()) p.fail("end of spec after coefficient list");
    if (a.size() != 5)
      throw std::invalid_argument("elliptic spec needs a=[a1,a2,a3,a4,a6]");
    if (q_flag && *q_flag != prime)
      throw std::invalid_argument("--q conflicts with p declared in the curve spec");
    return CurveZeta::elliptic_from_weierstrass(prime, a[0], a[1], a[2], a[3], a[4]);
  }
  p.fail("one of 'p1', 'weil:...', 'elliptic:...'");
}

}  // namespace bunzeta
