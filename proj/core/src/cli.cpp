#include "bunzeta/cli.hpp"

#include "bunzeta/arith.hpp"
#include "bunzeta/bun_series.hpp"
#include "bunzeta/bundle_oracle.hpp"
#include "bunzeta/curve_zeta.hpp"
#include "bunzeta/root_system.hpp"
#include "bunzeta/trunc_series.hpp"

#include <nlohmann/json.hpp>

#include <stdexcept>

namespace bunzeta {

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr int kMaxOrder = 200;
constexpr int kMaxPointDegree = 30;
constexpr long kMaxTwistCutoff = 64;
constexpr int kMaxDecimalDigits = 50;

void validate(const RunConfig& c) {
  if (c.order < 0 || c.order > kMaxOrder)
    throw std::invalid_argument("--order must be in 0..200");
  if (c.cohomology_cutoff < 0 || c.cohomology_cutoff > kMaxOrder)
    throw std::invalid_argument("--cohomology-cutoff must be in 0..200");
  if (c.point_degree_cutoff < 1 || c.point_degree_cutoff > kMaxPointDegree)
    throw std::invalid_argument("--point-degree must be in 1..30");
  if (c.max_twist < 1 || c.max_twist > kMaxTwistCutoff)
    throw std::invalid_argument("--max-twist must be in 1..64");
  if (c.decimal_digits && (*c.decimal_digits < 1 || *c.decimal_digits > kMaxDecimalDigits))
    throw std::invalid_argument("--decimal must be in 1..50");
}

GroupInvariants need_group(const RunConfig& c) {
  if (c.group_spec.empty()) throw std::invalid_argument("missing --group");
  return group_invariants(parse_cartan_label(c.group_spec));
}

CurveZeta need_curve(const RunConfig& c) {
  if (c.curve_spec.empty()) throw std::invalid_argument("missing --curve");
  return parse_curve_spec(c.curve_spec, c.q);
}

// Adds "<key>": "num/den" plus an optional "<key>_decimal" companion.
void put_rat(ordered_json& j, const std::string& key, const Rat& v,
             const std::optional<int>& digits) {
  j[key] = rat_to_string(v);
  if (digits) j[key + "_decimal"] = decimal_string(v, *digits);
}

std::string show(const Rat& v, const std::optional<int>& digits) {
  std::string s = rat_to_string(v);
  if (digits) s += " (" + decimal_string(v, *digits) + ")";
  return s;
}

void emit(const ordered_json& j, std::ostream& out) { out << j.dump(2) << "\n"; }

int cmd_info(const RunConfig& c, std::ostream& out) {
  GroupInvariants inv = need_group(c);
  ordered_json j;
  j["group"] = inv.label.str();
  j["rank"] = inv.label.rank;
  j["exponents"] = inv.exponents;
  j["degrees"] = inv.degrees;
  j["num_pos_roots"] = inv.num_pos_roots;
  j["dim"] = inv.dim_g;
  j["weyl_order"] = inv.weyl_order.get_str();
  if (c.q) {
    require_prime_power(*c.q);
    j["q"] = *c.q;
    j["chevalley_order"] = chevalley_order(inv, *c.q).get_str();
    put_rat(j, "local_mass", local_mass(inv, *c.q), c.decimal_digits);
  }
  if (c.format == OutputFormat::json) {
    emit(j, out);
    return 0;
  }
  out << "group " << inv.label.str() << ": rank " << inv.label.rank << ", " << inv.num_pos_roots
      << " positive roots, dim " << inv.dim_g << "\n";
  out << "  exponents:";
  for (int e : inv.exponents) out << " " << e;
  out << "\n  degrees:  ";
  for (int d : inv.degrees) out << " " << d;
  out << "\n  |W| = " << inv.weyl_order.get_str() << "\n";
  if (c.q) {
    out << "  |G(F_" << *c.q << ")| = " << j["chevalley_order"].get<std::string>() << "\n";
    out << "  q^dim / |G(F_q)| = " << show(local_mass(inv, *c.q), c.decimal_digits) << "\n";
  }
  return 0;
}

int cmd_zeta(const RunConfig& c, std::ostream& out) {
  CurveZeta curve = need_curve(c);
  ordered_json j;
  j["curve"] = c.curve_spec;
  j["q"] = curve.q;
  j["genus"] = curve.genus;
  auto& num = j["numerator"] = ordered_json::array();
  for (const Int& a : curve.numerator) num.push_back(a.get_str());
  auto& counts = j["point_counts"] = ordered_json::array();
  for (int r = 1; r <= 8; ++r) counts.push_back(point_count(curve, r).get_str());
  auto& closed = j["closed_points"] = ordered_json::object();
  for (const auto& [d, count] : closed_point_table(curve, c.point_degree_cutoff))
    closed[std::to_string(d)] = count.get_str();
  auto& values = j["zeta_values"] = ordered_json::object();
  for (int s = 2; s <= 4; ++s) {
    values[std::to_string(s)] = rat_to_string(zeta_value(curve, s));
    if (c.decimal_digits)
      values[std::to_string(s) + "_decimal"] = decimal_string(zeta_value(curve, s), *c.decimal_digits);
  }
  if (c.format == OutputFormat::json) {
    emit(j, out);
    return 0;
  }
  out << "curve " << c.curve_spec << " over F_" << curve.q << ", genus " << curve.genus << "\n";
  out << "  numerator:";
  for (const Int& a : curve.numerator) out << " " << a.get_str();
  out << "\n  N_r (r=1..8):";
  for (int r = 1; r <= 8; ++r) out << " " << point_count(curve, r).get_str();
  out << "\n  closed points (d=1.." << c.point_degree_cutoff << "):";
  for (int d = 1; d <= c.point_degree_cutoff; ++d) out << " " << closed_points(curve, d).get_str();
  out << "\n";
  for (int s = 2; s <= 4; ++s)
    out << "  zeta(" << s << ") = " << show(zeta_value(curve, s), c.decimal_digits) << "\n";
  return 0;
}

int cmd_trace(const RunConfig& c, std::ostream& out) {
  BunGContext ctx(need_group(c), need_curve(c));
  ordered_json j;
  j["group"] = ctx.group.label.str();
  j["curve"] = c.curve_spec;
  j["q"] = ctx.curve.q;
  j["degrees"] = ctx.group.degrees;
  auto& factors = j["zeta_factors"] = ordered_json::array();
  for (int d : ctx.group.degrees) factors.push_back(rat_to_string(zeta_value(ctx.curve, d)));
  put_rat(j, "trace_total", trace_total(ctx), c.decimal_digits);
  put_rat(j, "tamagawa_rhs", tamagawa_rhs(ctx), c.decimal_digits);
  if (c.format == OutputFormat::json) {
    emit(j, out);
    return 0;
  }
  out << "group " << ctx.group.label.str() << " on " << c.curve_spec << " over F_" << ctx.curve.q
      << "\n";
  for (std::size_t i = 0; i < ctx.group.degrees.size(); ++i)
    out << "  zeta(" << ctx.group.degrees[i] << ") = "
        << show(zeta_value(ctx.curve, ctx.group.degrees[i]), c.decimal_digits) << "\n";
  out << "  trace total  = " << show(trace_total(ctx), c.decimal_digits) << "\n";
  out << "  tamagawa rhs = " << show(tamagawa_rhs(ctx), c.decimal_digits) << "\n";
  return 0;
}

int cmd_series_compare(const RunConfig& c, std::ostream& out) {
  BunGContext ctx(need_group(c), need_curve(c));
  SeriesComparison cmp = compare_trace_series(ctx, c.order);
  ordered_json j;
  j["group"] = ctx.group.label.str();
  j["curve"] = c.curve_spec;
  j["q"] = ctx.curve.q;
  j["order"] = cmp.order;
  j["identical"] = cmp.identical;
  if (!cmp.identical) {
    j["first_mismatch"] = cmp.first_mismatch;
    j["lhs"] = rat_to_string(cmp.lhs);
    j["rhs"] = rat_to_string(cmp.rhs);
  }
  if (c.format == OutputFormat::json) {
    emit(j, out);
  } else if (cmp.identical) {
    out << "series identical through t^" << cmp.order << "\n";
  } else {
    out << "series differ at t^" << cmp.first_mismatch << ": global " << rat_to_string(cmp.lhs)
        << " vs local " << rat_to_string(cmp.rhs) << "\n";
  }
  return cmp.identical ? 0 : 1;
}

int cmd_euler(const RunConfig& c, std::ostream& out) {
  BunGContext ctx(need_group(c), need_curve(c));
  EulerTruncation trunc = euler_partial_product(ctx, c.point_degree_cutoff);
  ordered_json j;
  j["group"] = ctx.group.label.str();
  j["curve"] = c.curve_spec;
  j["q"] = ctx.curve.q;
  auto& e = j["euler"] = ordered_json::object();
  e["D"] = trunc.degree_cutoff;
  e["value"] = rat_to_string(trunc.value);
  if (c.decimal_digits) e["value_decimal"] = decimal_string(trunc.value, *c.decimal_digits);
  e["tail_bound"] = rat_to_string(trunc.tail_bound);
  if (c.decimal_digits)
    e["tail_bound_decimal"] = decimal_string(trunc.tail_bound, *c.decimal_digits);
  put_rat(j, "trace_total", trace_total(ctx), c.decimal_digits);
  if (c.format == OutputFormat::json) {
    emit(j, out);
    return 0;
  }
  out << "Euler product over closed points of degree <= " << trunc.degree_cutoff << ":\n";
  out << "  partial   = " << show(trunc.value, c.decimal_digits) << "\n";
  out << "  tail bound (log scale) = " << show(trunc.tail_bound, c.decimal_digits) << "\n";
  out << "  full value = " << show(trace_total(ctx), c.decimal_digits) << "\n";
  return 0;
}

int cmd_poincare(const RunConfig& c, std::ostream& out) {
  GroupInvariants inv = need_group(c);
  CurveZeta curve = need_curve(c);
  TruncSeries series = poincare_series(inv, curve.genus, c.cohomology_cutoff);
  ordered_json j;
  j["group"] = inv.label.str();
  j["genus"] = curve.genus;
  j["cutoff"] = c.cohomology_cutoff;
  auto& coeffs = j["coeffs"] = ordered_json::array();
  for (const Rat& v : series.coeffs()) coeffs.push_back(rat_to_string(v));
  if (c.format == OutputFormat::json) {
    emit(j, out);
    return 0;
  }
  out << "Poincare series of Bun_" << inv.label.str() << ", genus " << curve.genus
      << ", through s^" << c.cohomology_cutoff << ":\n ";
  for (const Rat& v : series.coeffs()) out << " " << rat_to_string(v);
  out << "\n";
  return 0;
}

int cmd_verify_tamagawa(const RunConfig& c, std::ostream& out) {
  GroupInvariants inv = need_group(c);
  CurveZeta curve = need_curve(c);
  if (inv.label.family != Family::A || inv.label.rank > 3)
    throw std::invalid_argument("the bundle oracle supports groups A1..A3 (SL_2..SL_4)");
  if (curve.genus != 0)
    throw std::invalid_argument("the bundle oracle supports genus 0 (curve 'p1') only");

  BunGContext ctx(inv, curve);
  MassReport mass = sl_mass_p1(inv.label.rank + 1, curve.q, c.max_twist);
  SeriesComparison cmp = compare_trace_series(ctx, c.order);
  EulerTruncation trunc = euler_partial_product(ctx, c.point_degree_cutoff);
  const bool verified = mass.verdict && cmp.identical;

  ordered_json j;
  j["group"] = inv.label.str();
  j["curve"] = c.curve_spec;
  j["q"] = curve.q;
  put_rat(j, "trace_total", trace_total(ctx), c.decimal_digits);
  put_rat(j, "tamagawa_rhs", tamagawa_rhs(ctx), c.decimal_digits);
  j["ser_identity_order"] = cmp.order;
  j["ser_identity_ok"] = cmp.identical;
  auto& e = j["euler"] = ordered_json::object();
  e["D"] = trunc.degree_cutoff;
  e["value"] = rat_to_string(trunc.value);
  e["tail_bound"] = rat_to_string(trunc.tail_bound);
  auto& m = j["mass"] = ordered_json::object();
  m["B"] = mass.twist_cutoff;
  m["partial_mass"] = rat_to_string(mass.partial_mass);
  if (c.decimal_digits)
    m["partial_mass_decimal"] = decimal_string(mass.partial_mass, *c.decimal_digits);
  m["tail_bound"] = rat_to_string(mass.tail_bound);
  m["rhs"] = rat_to_string(mass.rhs);
  m["verdict"] = mass.verdict;
  j["verified"] = verified;
  if (c.format == OutputFormat::json) {
    emit(j, out);
    return verified ? 0 : 1;
  }
  out << "Tamagawa check for " << inv.label.str() << " on " << c.curve_spec << " over F_"
      << curve.q << ":\n";
  out << "  bundle mass (twists <= " << mass.twist_cutoff
      << ") = " << show(mass.partial_mass, c.decimal_digits) << "\n";
  out << "  mass tail bound          = " << show(mass.tail_bound, c.decimal_digits) << "\n";
  out << "  rhs q^{(g-1)dim}*prod zeta(d_i) = " << show(mass.rhs, c.decimal_digits) << "\n";
  out << "  series identity through t^" << cmp.order << ": " << (cmp.identical ? "ok" : "FAILED")
      << "\n";
  out << (verified ? "VERIFIED" : "FAILED") << "\n";
  return verified ? 0 : 1;
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    validate(config);
    switch (config.command) {
      case Command::info: return cmd_info(config, out);
      case Command::zeta: return cmd_zeta(config, out);
      case Command::trace: return cmd_trace(config, out);
      case Command::series_compare: return cmd_series_compare(config, out);
      case Command::euler: return cmd_euler(config, out);
      case Command::poincare: return cmd_poincare(config, out);
      case Command::verify_tamagawa: return cmd_verify_tamagawa(config, out);
    }
    err << "error: unknown command\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace bunzeta
