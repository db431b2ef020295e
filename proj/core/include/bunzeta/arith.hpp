#pragma once

#include "bunzeta/rational.hpp"

#include <vector>

namespace bunzeta {

bool is_prime(long n);

// q = p^k for a prime p and k >= 1
bool is_prime_power(long q);

// throws std::invalid_argument unless q is a prime power >= 2
void require_prime_power(long q);

int moebius(int n);

std::vector<int> divisors(int n);

// C(n, k) for big n
Int binomial(const Int& n, unsigned long k);

}  // namespace bunzeta
