#include "eelwe/cost_model.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <utility>

namespace eelwe::cost {

namespace {

void
check_point(const DesignPoint& dp)
{
  if (dp.unroll == 0) throw std::invalid_argument("unroll factor must be >= 1");
  if (dp.n == 0) throw std::invalid_argument("block size must be >= 1");
}

struct Line
{
  double slope;
  double intercept;
};

// ordinary least squares y = slope * x + intercept
Line
fit_line(std::span<const std::pair<double, double>> pts)
{
  if (pts.size() < 2) throw fit_error("need at least two points for a linear fit");
  double sx = 0, sy = 0;
  for (auto [x, y] : pts) {
    sx += x;
    sy += y;
  }
  const double mx = sx / static_cast<double>(pts.size());
  const double my = sy / static_cast<double>(pts.size());
  double sxx = 0, sxy = 0;
  for (auto [x, y] : pts) {
    sxx += (x - mx) * (x - mx);
    sxy += (x - mx) * (y - my);
  }
  if (sxx == 0) throw fit_error("degenerate linear fit (all x equal)");
  const double slope = sxy / sxx;
  return { slope, my - slope * mx };
}

double
relative_error(double model, double reference)
{
  if (reference == 0) return std::abs(model);
  return std::abs(model - reference) / std::abs(reference);
}

unsigned
ceil_div(unsigned a, unsigned b)
{
  return (a + b - 1) / b;
}

} // namespace

bool
CostConstants::valid() const
{
  for (double v : { t0, tn, d_r, a1, gn, g0, gb, a0, pd, pi })
    if (!(v >= 0) || !std::isfinite(v)) return false;
  return true;
}

unsigned
cycles_per_block(const DesignPoint& dp, const CostConstants& c)
{
  check_point(dp);
  return ceil_div(dp.rounds, dp.unroll) + c.c0;
}

TimeBreakdown
time_per_block(const DesignPoint& dp, const CostConstants& c)
{
  const double cb = cycles_per_block(dp, c);
  const double tr1 = c.t0 + c.tn * dp.n;
  const double ct = c.d_r + dp.unroll * tr1;
  const double tb = cb * ct;
  return { tr1, ct, tb, dp.n / tb };
}

AreaBreakdown
area(const DesignPoint& dp, const CostConstants& c)
{
  check_point(dp);
  const double ar = c.a1 * std::pow(static_cast<double>(dp.unroll), c.gn * dp.n + c.g0);
  return { ar, ar + c.gb * dp.n + c.a0 };
}

double
power(const DesignPoint& dp, const CostConstants& c)
{
  const auto t = time_per_block(dp, c);
  const auto a = area(dp, c);
  return (c.pd * dp.unroll + c.pi) * a.ad / t.ct;
}

EnergyBreakdown
energy(const DesignPoint& dp, const CostConstants& c)
{
  const double e_block = time_per_block(dp, c).tb * power(dp, c);
  return { e_block, e_block / dp.n };
}

CostReport
evaluate(const DesignPoint& dp, const CostConstants& c)
{
  CostReport r;
  r.unroll = dp.unroll;
  r.cb = cycles_per_block(dp, c);
  const auto t = time_per_block(dp, c);
  r.tr1 = t.tr1;
  r.ct = t.ct;
  r.tb = t.tb;
  r.throughput = t.throughput;
  const auto a = area(dp, c);
  r.ar = a.ar;
  r.ad = a.ad;
  r.power = (c.pd * dp.unroll + c.pi) * a.ad / t.ct;
  r.e_block = r.tb * r.power;
  r.e_bit = r.e_block / dp.n;
  return r;
}

std::vector<CostReport>
sweep(VariantId id, const CostConstants& c)
{
  const unsigned n = build_variant_params(id).n;
  std::vector<CostReport> out;
  out.reserve(sweep_unrolls.size());
  for (unsigned u : sweep_unrolls)
    out.push_back(evaluate({ n, u, total_rounds }, c));
  return out;
}

unsigned
optimal_unroll(VariantId id, const CostConstants& c)
{
  const auto reports = sweep(id, c);
  const auto best = std::min_element(reports.begin(), reports.end(),
                                     [](const CostReport& l, const CostReport& r) { return l.e_bit < r.e_bit; });
  return best->unroll;
}

double
microjoule_per_byte(double e_bit_pj)
{
  if (e_bit_pj < 0) throw std::invalid_argument("energy per bit must be non-negative");
  return e_bit_pj * 8.0 / 1e6;
}

TableComparison
compare_table(const ReferenceTable& table, const CostConstants& c)
{
  TableComparison out;
  const unsigned n = build_variant_params(table.variant).n;
  for (const auto& ref : table.columns) {
    const auto m = evaluate({ n, ref.unroll, total_rounds }, c);
    if (m.cb != ref.cb) ++out.cb_mismatches;
    const std::pair<const char*, std::pair<double, double>> cells[] = {
      { "tr1", { m.tr1, ref.tr1 } },       { "ct", { m.ct, ref.ct } },
      { "tb", { m.tb, ref.tb } },          { "throughput", { m.throughput, ref.throughput } },
      { "ar", { m.ar, ref.ar } },          { "ad", { m.ad, ref.ad } },
      { "power", { m.power, ref.power } }, { "e_block", { m.e_block, ref.e_block } },
      { "e_bit", { m.e_bit, ref.e_bit } },
    };
    for (const auto& [name, vals] : cells) {
      const double err = relative_error(vals.first, vals.second);
      const std::string cell = to_string(table.variant) + " r=" + std::to_string(ref.unroll) + " " + name;
      ++out.cells_checked;
      if (err > table_tolerance) out.outliers.push_back(cell);
      if (err > out.max_relative_error) {
        out.max_relative_error = err;
        out.worst_cell = cell;
      }
    }
  }
  return out;
}

std::vector<std::string>
identity_violations(const ReferenceTable& table, double tolerance)
{
  std::vector<std::string> out;
  const unsigned n = build_variant_params(table.variant).n;
  for (const auto& col : table.columns) {
    const std::string at = to_string(table.variant) + " r=" + std::to_string(col.unroll) + " ";
    if (relative_error(col.cb * col.ct, col.tb) > tolerance) out.push_back(at + "tb != cb * ct");
    if (relative_error(col.tb * col.power, col.e_block) > tolerance) out.push_back(at + "e_block != tb * power");
    if (relative_error(col.e_block / n, col.e_bit) > tolerance) out.push_back(at + "e_bit != e_block / n");
  }
  return out;
}

FitResult
fit_constants(std::span<const ReferenceTable> tables, double tolerance)
{
  if (tables.empty()) throw fit_error("no reference tables");

  CostConstants c;

  // cycles: cb - ceil(rounds/unroll) must be one constant
  bool have_c0 = false;
  for (const auto& t : tables) {
    for (const auto& col : t.columns) {
      if (col.unroll == 0) throw fit_error("unroll factor 0 in reference table");
      const long extra = static_cast<long>(col.cb) - static_cast<long>(ceil_div(total_rounds, col.unroll));
      if (extra < 0) throw fit_error("cb row below ceil(rounds/unroll)");
      if (!have_c0) {
        c.c0 = static_cast<unsigned>(extra);
        have_c0 = true;
      } else if (static_cast<unsigned>(extra) != c.c0) {
        throw fit_error(to_string(t.variant) + " r=" + std::to_string(col.unroll) +
                        ": cb row is not ceil(rounds/unroll) + constant");
      }
    }
  }
  if (!have_c0) throw fit_error("reference tables have no columns");

  // per table, ct = d_r + unroll * tr1; then tr1 = t0 + tn * n
  std::vector<std::pair<double, double>> tr1_vs_n;
  double d_r_sum = 0;
  std::vector<std::pair<double, double>> exponent_vs_n;
  std::vector<std::pair<double, double>> fixed_area_vs_n;
  std::vector<std::pair<double, double>> power_vs_unroll;
  double a1_sum = 0;
  unsigned a1_count = 0;

  for (const auto& t : tables) {
    const double n = build_variant_params(t.variant).n;
    std::vector<std::pair<double, double>> ct_pts;
    for (const auto& col : t.columns) {
      ct_pts.emplace_back(col.unroll, col.ct);
      fixed_area_vs_n.emplace_back(n, col.ad - col.ar);
      power_vs_unroll.emplace_back(col.unroll, col.power * col.ct / col.ad);
      if (col.unroll == 1) {
        a1_sum += col.ar;
        ++a1_count;
      }
    }
    const Line ct_line = fit_line(ct_pts);
    tr1_vs_n.emplace_back(n, ct_line.slope);
    d_r_sum += ct_line.intercept;
  }
  if (a1_count == 0) throw fit_error("reference tables lack an unroll=1 column");
  c.a1 = a1_sum / a1_count;
  c.d_r = d_r_sum / static_cast<double>(tables.size());

  const Line tr1_line = fit_line(tr1_vs_n);
  c.tn = tr1_line.slope;
  c.t0 = tr1_line.intercept;

  // ar = a1 * unroll^e(n), e(n) = gn * n + g0; fit log-ratios through the origin
  for (const auto& t : tables) {
    const double n = build_variant_params(t.variant).n;
    double sxx = 0, sxy = 0;
    for (const auto& col : t.columns) {
      if (col.unroll < 2) continue;
      const double x = std::log(static_cast<double>(col.unroll));
      sxx += x * x;
      sxy += x * std::log(col.ar / c.a1);
    }
    if (sxx == 0) throw fit_error(to_string(t.variant) + ": need an unroll > 1 column for the area exponent");
    exponent_vs_n.emplace_back(n, sxy / sxx);
  }
  const Line exp_line = fit_line(exponent_vs_n);
  c.gn = exp_line.slope;
  c.g0 = exp_line.intercept;

  const Line fixed_line = fit_line(fixed_area_vs_n);
  c.gb = fixed_line.slope;
  c.a0 = fixed_line.intercept;

  const Line power_line = fit_line(power_vs_unroll);
  c.pd = power_line.slope;
  c.pi = power_line.intercept;

  FitResult result{ c, 0, {} };
  std::string outliers;
  for (const auto& t : tables) {
    const auto cmp = compare_table(t, c);
    if (cmp.cb_mismatches != 0) throw fit_error(to_string(t.variant) + ": regenerated cb row differs");
    if (cmp.max_relative_error > result.max_relative_error) {
      result.max_relative_error = cmp.max_relative_error;
      result.worst_cell = cmp.worst_cell;
    }
    for (const auto& cell : identity_violations(t, tolerance))
      outliers += (outliers.empty() ? "" : "; ") + cell;
  }
  if (result.max_relative_error > tolerance) {
    throw fit_error("fit residual " + std::to_string(result.max_relative_error) + " at " + result.worst_cell +
                    " exceeds tolerance; check the reference tables for transcription errors" +
                    (outliers.empty() ? std::string() : " (table identities broken: " + outliers + ")"));
  }
  return result;
}

} // namespace eelwe::cost
