#include "bunzeta/arith.hpp"

#include <stdexcept>
#include <string>

namespace bunzeta {

bool is_prime(long n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (long d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

bool is_prime_power(long q) {
  if (q < 2) return false;
  long p = q;
  for (long d = 2; d * d <= q; ++d) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  while (q % p == 0) q /= p;
  return q == 1;
}

void require_prime_power(long q) {
  if (!is_prime_power(q))
    throw std::invalid_argument("q = " + std::to_string(q) + " is not a prime power");
}

int moebius(int n) {
  if (n < 1) throw std::invalid_argument("moebius of nonpositive integer");
  int out = 1;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return 0;
      out = -out;
    }
  }
  if (n > 1) out = -out;
  return out;
}

std::vector<int> divisors(int n) {
  std::vector<int> small, large;
  for (int d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d != n / d) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

Int binomial(const Int& n, unsigned long k) {
  Int out;
  mpz_bin_ui(out.get_mpz_t(), n.get_mpz_t(), k);
  return out;
}

}  // namespace bunzeta
