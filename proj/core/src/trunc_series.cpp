#include "bunzeta/trunc_series.hpp"

#include "bunzeta/arith.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <stdexcept>

namespace bunzeta {

using ordered_json = nlohmann::ordered_json;

namespace {

int checked_order(int order) {
  if (order < 0) throw std::invalid_argument("series order must be >= 0");
  return order;
}

}  // namespace

TruncSeries::TruncSeries(int order, std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) {
  checked_order(order);
  if (coeffs_.size() != static_cast<std::size_t>(order) + 1)
    throw std::invalid_argument("coefficient list does not match series order");
}

TruncSeries TruncSeries::zero(int order) {
  return TruncSeries(order, std::vector<Rat>(static_cast<std::size_t>(checked_order(order)) + 1));
}

TruncSeries TruncSeries::one(int order) { return constant(Rat(1), order); }

TruncSeries TruncSeries::constant(const Rat& c, int order) {
  auto out = zero(order);
  out.coeffs_[0] = c;
  return out;
}

TruncSeries TruncSeries::monomial(const Rat& c, int degree, int order) {
  if (degree < 0) throw std::invalid_argument("monomial degree must be >= 0");
  auto out = zero(order);
  if (degree <= order) out.coeffs_[static_cast<std::size_t>(degree)] = c;
  return out;
}

TruncSeries TruncSeries::truncated(int order) const {
  checked_order(order);
  std::vector<Rat> c(coeffs_.begin(),
                     coeffs_.begin() + std::min<std::size_t>(coeffs_.size(), order + 1));
  c.resize(static_cast<std::size_t>(order) + 1);
  return TruncSeries(order, std::move(c));
}

TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) {
  const int d = std::min(a.order(), b.order());
  std::vector<Rat> c(static_cast<std::size_t>(d) + 1);
  for (int k = 0; k <= d; ++k) c[k] = a[k] + b[k];
  return TruncSeries(d, std::move(c));
}

TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) {
  const int d = std::min(a.order(), b.order());
  std::vector<Rat> c(static_cast<std::size_t>(d) + 1);
  for (int k = 0; k <= d; ++k) c[k] = a[k] - b[k];
  return TruncSeries(d, std::move(c));
}

TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
  const int d = std::min(a.order(), b.order());
  std::vector<Rat> c(static_cast<std::size_t>(d) + 1);
  for (int i = 0; i <= d; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; i + j <= d; ++j) {
      if (b[j] == 0) continue;
      c[i + j] += a[i] * b[j];
    }
  }
  return TruncSeries(d, std::move(c));
}

TruncSeries TruncSeries::invert() const {
  if (coeffs_[0] == 0) throw std::domain_error("cannot invert series with zero constant term");
  const int d = order();
  std::vector<Rat> b(static_cast<std::size_t>(d) + 1);
  b[0] = Rat(1) / coeffs_[0];
  for (int n = 1; n <= d; ++n) {
    Rat acc(0);
    for (int k = 1; k <= n; ++k) acc += coeffs_[k] * b[n - k];
    b[n] = -acc / coeffs_[0];
  }
  return TruncSeries(d, std::move(b));
}

TruncSeries TruncSeries::pow(unsigned exp) const {
  TruncSeries acc = one(order());
  TruncSeries sq = *this;
  while (exp > 0) {
    if (exp & 1u) acc = acc * sq;
    exp >>= 1u;
    if (exp > 0) sq = sq * sq;
  }
  return acc;
}

std::string TruncSeries::to_json() const {
  ordered_json j;
  j["order"] = order();
  auto& arr = j["coeffs"] = ordered_json::array();
  for (const Rat& c : coeffs_) arr.push_back(rat_to_string(c));
  return j.dump();
}

TruncSeries TruncSeries::from_json(const std::string& text) {
  ordered_json j = ordered_json::parse(text);
  int order = j.at("order").get<int>();
  std::vector<Rat> coeffs;
  for (const auto& item : j.at("coeffs")) coeffs.push_back(rat_from_string(item.get<std::string>()));
  return TruncSeries(order, std::move(coeffs));
}

TruncSeries geometric_factor(const Rat& c, int k, int order) {
  return binomial_factor(c, k, Int(1), order);
}

TruncSeries binomial_factor(const Rat& c, int k, const Int& mult, int order) {
  if (k < 1) throw std::invalid_argument("factor exponent k must be >= 1");
  if (mult < 0) throw std::invalid_argument("factor multiplicity must be >= 0");
  checked_order(order);
  // (1 - c t^k)^{-a} = sum_m C(a+m-1, m) c^m t^{km}
  std::vector<Rat> coeffs(static_cast<std::size_t>(order) + 1);
  coeffs[0] = 1;
  Rat cpow(1);
  for (int m = 1; m * k <= order; ++m) {
    cpow *= c;
    coeffs[static_cast<std::size_t>(m) * k] =
        Rat(binomial(mult + m - 1, static_cast<unsigned long>(m))) * cpow;
  }
  return TruncSeries(order, std::move(coeffs));
}

TruncSeries poly_eval_series(const std::vector<Int>& poly, const TruncSeries& inner) {
  const int d = inner.order();
  if (poly.empty()) return TruncSeries::zero(d);
  // Horner
  TruncSeries acc = TruncSeries::constant(Rat(poly.back()), d);
  for (auto it = poly.rbegin() + 1; it != poly.rend(); ++it)
    acc = acc * inner + TruncSeries::constant(Rat(*it), d);
  return acc;
}

}  // namespace bunzeta
