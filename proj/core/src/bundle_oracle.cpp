#include "bunzeta/bundle_oracle.hpp"

#include "bunzeta/arith.hpp"
#include "bunzeta/bun_series.hpp"
#include "bunzeta/curve_zeta.hpp"
#include "bunzeta/root_system.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <stdexcept>

namespace bunzeta {

SplittingType::SplittingType(std::vector<long> a) : twists(std::move(a)) {
  if (twists.empty()) throw std::invalid_argument("empty splitting type");
  if (!std::is_sorted(twists.rbegin(), twists.rend()))
    throw std::invalid_argument("splitting type must be non-increasing");
  if (std::accumulate(twists.begin(), twists.end(), 0L) != 0)
    throw std::invalid_argument("splitting type must sum to zero");
}

Int gl_order(int m, long q) {
  // prod_{i=0}^{m-1} (q^m - q^i)
  Int qm = int_pow(Int(q), static_cast<unsigned long>(m));
  Int out(1);
  for (int i = 0; i < m; ++i) out *= qm - int_pow(Int(q), static_cast<unsigned long>(i));
  return out;
}

Int aut_order(const SplittingType& type, long q) {
  // Collapse into blocks of equal twist.
  std::vector<long> values;
  std::vector<int> mults;
  for (long a : type.twists) {
    if (!values.empty() && values.back() == a) {
      ++mults.back();
    } else {
      values.push_back(a);
      mults.push_back(1);
    }
  }

  long hom_dim = 0;
  for (std::size_t j = 0; j < values.size(); ++j)
    for (std::size_t k = j + 1; k < values.size(); ++k)
      hom_dim += static_cast<long>(mults[j]) * mults[k] * (values[j] - values[k] + 1);

  Int out = int_pow(Int(q), static_cast<unsigned long>(hom_dim));
  for (int m : mults) out *= gl_order(m, q);
  return out;
}

namespace {

void extend_types(int n, std::vector<long>& prefix, long sum,
                  std::vector<SplittingType>& out) {
  const int have = static_cast<int>(prefix.size());
  if (have == n - 1) {
    long last = -sum;
    if (last <= prefix.back()) {
      prefix.push_back(last);
      out.push_back(SplittingType(prefix));
      prefix.pop_back();
    }
    return;
  }
  // Later entries are capped by v, so total zero stays reachable iff
  // sum + v * (slots left) >= 0.
  const long remaining = n - have;
  for (long v = prefix.back(); sum + v * remaining >= 0; --v) {
    prefix.push_back(v);
    extend_types(n, prefix, sum + v, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<SplittingType> splitting_types_p1(int n, long max_twist) {
  if (n < 1) throw std::invalid_argument("rank must be positive");
  if (max_twist < 0) throw std::invalid_argument("twist cutoff must be >= 0");
  std::vector<SplittingType> out;
  std::vector<long> prefix;
  for (long a1 = 0; a1 <= max_twist; ++a1) {
    prefix.assign(1, a1);
    if (n == 1) {
      if (a1 == 0) out.push_back(SplittingType(prefix));
      continue;
    }
    extend_types(n, prefix, a1, out);
  }
  return out;
}

MassReport sl_mass_p1(int n, long q, long twist_cutoff) {
  if (n < 2 || n > 4) throw std::invalid_argument("rank supported in 2..4 only");
  require_prime_power(q);
  if (twist_cutoff < 1) throw std::invalid_argument("twist cutoff must be >= 1");

  Rat sum(0);
  for (const SplittingType& type : splitting_types_p1(n, twist_cutoff))
    sum += make_rat(1, aut_order(type, q));
  Rat partial = Rat(q - 1) * sum;

  // Tail: a type with a_1 = A > cutoff has |Aut| >= (q-1)^n q^{nA}, because
  // prod |GL_{m_j}| >= (q-1)^n and the Hom dimension satisfies
  //   u >= sum_{i<i'} (a_i - a_{i'}) >= sum_{i'>1} (a_1 - a_{i'}) = n a_1.
  // There are at most (nA+1)^{n-2} types with that a_1 (middle entries range
  // over an interval of nA+1 integers, the last is forced). Hence
  //   tail <= (q-1)^{1-n} sum_{A>B} (nA+1)^{n-2} q^{-nA}.
  const Rat x = rat_pow(Rat(q), static_cast<long>(-n));
  const long B = twist_cutoff;
  Rat s0 = rat_pow(x, B + 1) / (1 - x);
  Rat s1 = rat_pow(x, B + 1) * (Rat(B + 1) / (1 - x) + x / ((1 - x) * (1 - x)));
  Rat s2 = rat_pow(x, B + 1) *
           (Rat(B + 1) * (B + 1) / (1 - x) + Rat(2 * (B + 1)) * x / ((1 - x) * (1 - x)) +
            (x + x * x) / ((1 - x) * (1 - x) * (1 - x)));
  Rat poly_tail;  // sum_{A>B} (nA+1)^{n-2} x^A
  switch (n) {
    case 2: poly_tail = s0; break;
    case 3: poly_tail = Rat(3) * s1 + s0; break;
    default: poly_tail = Rat(16) * s2 + Rat(8) * s1 + s0; break;
  }
  Rat tail = rat_pow(Rat(q - 1), 1 - static_cast<long>(n)) * poly_tail;

  BunGContext ctx(group_invariants(CartanLabel{Family::A, n - 1}),
                  CurveZeta::projective_line(q));
  Rat rhs = tamagawa_rhs(ctx);

  MassReport report;
  report.partial_mass = partial;
  report.tail_bound = tail;
  report.twist_cutoff = twist_cutoff;
  report.rhs = rhs;
  report.verdict = abs(partial - rhs) <= tail;
  return report;
}

namespace {

// Arithmetic tables for the tiny fields the matrix oracle enumerates.
class SmallField {
 public:
  static SmallField make(long q) {
    if (q == 4) {
      SmallField f(4);
      // F_4 = {0, 1, w, w+1} with w^2 = w + 1; addition is XOR.
      for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) f.add_[a][b] = a ^ b;
      const int mul[4][4] = {{0, 0, 0, 0}, {0, 1, 2, 3}, {0, 2, 3, 1}, {0, 3, 1, 2}};
      for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) f.mul_[a][b] = mul[a][b];
      return f;
    }
    if (!is_prime(q) || q > 3) throw std::invalid_argument("unsupported oracle field");
    SmallField f(static_cast<int>(q));
    for (int a = 0; a < q; ++a)
      for (int b = 0; b < q; ++b) {
        f.add_[a][b] = (a + b) % static_cast<int>(q);
        f.mul_[a][b] = (a * b) % static_cast<int>(q);
      }
    return f;
  }

  int size() const { return size_; }
  int add(int a, int b) const { return add_[a][b]; }
  int sub(int a, int b) const {
    for (int c = 0; c < size_; ++c)
      if (add_[b][c] == a) return c;
    return -1;  // unreachable
  }
  int mul(int a, int b) const { return mul_[a][b]; }

 private:
  explicit SmallField(int size) : size_(size) {}
  int size_;
  std::array<std::array<int, 4>, 4> add_{};
  std::array<std::array<int, 4>, 4> mul_{};
};

}  // namespace

Int brute_sl_order(int n, long q) {
  if (n != 2 && n != 3) throw std::invalid_argument("matrix oracle supports n in {2,3}");
  if (q != 2 && q != 3 && q != 4)
    throw std::invalid_argument("matrix oracle supports q in {2,3,4}");
  SmallField f = SmallField::make(q);
  const int s = f.size();
  long count = 0;
  long total = 1;
  for (int i = 0; i < n * n; ++i) total *= s;
  std::vector<int> m(static_cast<std::size_t>(n) * n);
  for (long code = 0; code < total; ++code) {
    long rest = code;
    for (auto& entry : m) {
      entry = static_cast<int>(rest % s);
      rest /= s;
    }
    int det;
    if (n == 2) {
      det = f.sub(f.mul(m[0], m[3]), f.mul(m[1], m[2]));
    } else {
      auto minor = [&](int a, int b, int c, int d) {
        return f.sub(f.mul(m[a], m[b]), f.mul(m[c], m[d]));
      };
      int t0 = f.mul(m[0], minor(4, 8, 5, 7));
      int t1 = f.mul(m[1], minor(3, 8, 5, 6));
      int t2 = f.mul(m[2], minor(3, 7, 4, 6));
      det = f.add(f.sub(t0, t1), t2);
    }
    if (det == 1) ++count;
  }
  return Int(count);
}

}  // namespace bunzeta
