#pragma once

#include "bunzeta/rational.hpp"

#include <vector>

namespace bunzeta {

// Truncated formal power series over Q with exact rational coefficients.
// An instance of order D carries coefficients for t^0..t^D; every operation
// agrees with the untruncated one modulo t^{D+1}. Binary operations on
// mixed orders truncate to the smaller order.
class TruncSeries {
 public:
  TruncSeries(int order, std::vector<Rat> coeffs);

  static TruncSeries zero(int order);
  static TruncSeries one(int order);
  static TruncSeries constant(const Rat& c, int order);
  static TruncSeries monomial(const Rat& c, int degree, int order);

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Rat>& coeffs() const { return coeffs_; }
  const Rat& operator[](int k) const { return coeffs_[static_cast<std::size_t>(k)]; }

  TruncSeries truncated(int order) const;

  // Multiplicative inverse modulo t^{order+1}; the constant term must be
  // nonzero (std::domain_error otherwise).
  TruncSeries invert() const;

  TruncSeries pow(unsigned exp) const;

  friend TruncSeries operator+(const TruncSeries& a, const TruncSeries& b);
  friend TruncSeries operator-(const TruncSeries& a, const TruncSeries& b);
  friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b);

  bool operator==(const TruncSeries&) const = default;

  // {"order": D, "coeffs": ["1", "3/4", ...]}
  std::string to_json() const;
  static TruncSeries from_json(const std::string& text);

 private:
  std::vector<Rat> coeffs_;  // length order+1
};

// (1 - c t^k)^{-1} truncated at the given order; k >= 1.
TruncSeries geometric_factor(const Rat& c, int k, int order);

// (1 - c t^k)^{-mult} for a nonnegative (possibly huge) multiplicity.
TruncSeries binomial_factor(const Rat& c, int k, const Int& mult, int order);

// P(inner) for an integer-coefficient polynomial P, exact modulo t^{D+1}.
TruncSeries poly_eval_series(const std::vector<Int>& poly, const TruncSeries& inner);

}  // namespace bunzeta
