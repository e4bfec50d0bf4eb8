#include "eelwe/reproduce.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "eelwe/cipher.hpp"
#include "eelwe/hex.hpp"
#include "eelwe/security_metrics.hpp"

namespace eelwe::report {

namespace {

std::string
bits_string(std::uint64_t v, unsigned count)
{
  std::string s;
  for (unsigned i = count; i-- > 0;)
    s.push_back(((v >> i) & 1u) ? '1' : '0');
  return s;
}

bool
within(double value, double target, double rel)
{
  return std::abs(value - target) <= rel * std::abs(target);
}

std::string
fmt(double v, int digits = 6)
{
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return buf;
}

} // namespace

std::uint64_t
reference_plaintext(VariantId id)
{
  switch (id) {
    case VariantId::e32: return 0x5742414EULL;
    case VariantId::e48: return 0x5742414E3438ULL;
    case VariantId::e64: return 0x5742414E4B4C4345ULL;
  }
  return 0;
}

MasterKey
default_table_key()
{
  MasterKey k;
  k.set_bit(0, true);
  return k;
}

std::vector<io::SweepRow>
sweep_table(VariantId id, const cost::CostConstants& c, const MasterKey& key, std::uint64_t pt)
{
  const BlockCipher cipher(id, key);
  const unsigned nibbles = cipher.params().n / 4;
  std::vector<io::SweepRow> rows;
  for (const auto& r : cost::sweep(id, c))
    rows.push_back({ id, format_hex(cipher.encrypt(pt, std::min(r.unroll, total_rounds)), nibbles), r });
  return rows;
}

std::string
ladder_validation_csv(const std::vector<analysis::ShiftReport>& reports)
{
  std::string out = "variant,rounds,shifted,p1_checked,p1_ok,p2_checked,p2_ok,p1_inserted,p2_inserted\n";
  for (const auto& rep : reports) {
    for (const auto& e : rep.entries) {
      out += to_string(rep.variant) + ',' + std::to_string(e.rounds) + ',' + std::to_string(e.shifted) + ',' +
             (e.p1_checked ? "1" : "0") + ',' + (e.p1_ok ? "1" : "0") + ',' + (e.p2_checked ? "1" : "0") + ',' +
             (e.p2_ok ? "1" : "0") + ',' + (e.p1_checked ? bits_string(e.p1_inserted, e.shifted) : "") + ',' +
             (e.p2_checked ? bits_string(e.p2_inserted, e.shifted) : "") + '\n';
    }
  }
  return out;
}

std::string
key_constraints_csv(VariantId id, const analysis::ConstraintReport& r)
{
  std::string out = "variant,round,step,expanded_key_bits,value\n";
  for (const auto& c : r.constraints) {
    std::string idx;
    for (unsigned i : c.indices)
      idx += (idx.empty() ? "k" : "^k") + std::to_string(i);
    out += to_string(id) + ',' + std::to_string(c.round) + ',' + std::to_string(c.step) + ',' + idx + ',' +
           (c.value ? "1" : "0") + '\n';
  }
  return out;
}

std::string
avalanche_csv(const std::vector<analysis::AvalancheStats>& stats)
{
  std::string out = "variant,rounds,trials,seed,mean,stddev,min,max,mean_fraction\n";
  for (const auto& s : stats) {
    const double n = build_variant_params(s.variant).n;
    out += to_string(s.variant) + ',' + std::to_string(s.rounds) + ',' + std::to_string(s.trials) + ',' +
           std::to_string(s.seed) + ',' + fmt(s.mean(), 8) + ',' + fmt(s.stddev(), 8) + ',' +
           std::to_string(s.min_flips) + ',' + std::to_string(s.max_flips) + ',' + fmt(s.mean() / n, 6) + '\n';
  }
  return out;
}

bool
Reproduction::passed() const
{
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

Reproduction
reproduce(const std::filesystem::path& dir, const ReproduceOptions& opts)
{
  Reproduction out;
  const auto& c = opts.constants;
  auto check = [&](std::string id, bool ok, std::string detail) {
    out.checks.push_back({ std::move(id), ok, std::move(detail) });
  };

  // cost tables
  std::vector<cost::ReferenceTable> tables;
  for (VariantId id : all_variants) {
    tables.push_back(io::load_reference_table(dir / io::reference_table_file(id)));
    const auto cmp = cost::compare_table(tables.back(), c);
    std::string detail = "cb mismatches " + std::to_string(cmp.cb_mismatches) + ", max rel err " +
                         fmt(cmp.max_relative_error, 3) + " at " + cmp.worst_cell;
    if (!cmp.outliers.empty()) detail += ", " + std::to_string(cmp.outliers.size()) + " cells out of tolerance";
    for (const auto& v : cost::identity_violations(tables.back()))
      detail += "; table itself has " + v;
    check("cost_table_" + to_string(id), cmp.cb_mismatches == 0 && cmp.max_relative_error <= cost::table_tolerance,
          detail);
    out.sections.push_back(
      { "sweep_" + to_string(id) + ".csv", io::format_sweep_csv(sweep_table(id, c, opts.key, reference_plaintext(id))) });
  }

  try {
    const auto fit = cost::fit_constants(tables);
    check("fit_constants", true, "max rel err " + fmt(fit.max_relative_error, 3) + " at " + fit.worst_cell);
  } catch (const cost::fit_error& e) {
    check("fit_constants", false, e.what());
  }

  // figure rows
  const auto figures = io::load_figure_rows(dir / io::figure_ebit_file);
  for (VariantId id : all_variants) {
    const unsigned n = build_variant_params(id).n;
    const auto fr = std::find_if(figures.begin(), figures.end(), [&](const io::FigureRow& f) { return f.variant == id; });
    if (fr == figures.end()) {
      check("figure_" + to_string(id), false, "no reference row");
    } else {
      double worst = 0;
      for (auto [u, e] : fr->e_bit)
        worst = std::max(worst, std::abs(cost::energy({ n, u }, c).e_bit - e) / e);
      check("figure_" + to_string(id), worst <= cost::table_tolerance, "max rel err " + fmt(worst, 3));
    }
    out.sections.push_back({ "figure_" + to_string(id) + ".csv", analysis::figure_data_csv(id, c) });

    const unsigned best = cost::optimal_unroll(id, c);
    check("optimal_unroll_" + to_string(id), best == 16, "r_i = " + std::to_string(best));
  }

  const double uj254 = cost::microjoule_per_byte(cost::energy({ 64, 254 }, c).e_bit);
  const double uj16 = cost::microjoule_per_byte(cost::energy({ 64, 16 }, c).e_bit);
  check("headline_uj_per_byte_r254", within(uj254, 0.0406, 0.01), fmt(uj254) + " uJ/byte");
  check("headline_uj_per_byte_r16", within(uj16, 0.00305, 0.01), fmt(uj16) + " uJ/byte");

  // comparison
  const auto energies = io::load_comparison(dir / io::comparison_file);
  const auto ranking = analysis::comparison_report(energies, cost::energy({ 64, 254 }, c).e_bit, 64);
  const bool strict_min = ranking.size() >= 2 && ranking.front().computed &&
                          ranking.front().entry.uj_per_byte < ranking[1].entry.uj_per_byte;
  check("comparison_eelwe_minimum", strict_min,
        ranking.front().entry.name + " " + fmt(ranking.front().entry.uj_per_byte) + " uJ/byte");
  out.sections.push_back({ "comparison.csv", io::format_comparison_csv(ranking) });

  std::vector<analysis::ComparisonEntry> with_eelwe;
  for (const auto& r : ranking)
    with_eelwe.push_back(r.entry);
  const auto profile = io::load_msec_profile(dir / io::msec_profile_file);
  const auto msec_rows = security::msec_ranking(io::msec_candidates(with_eelwe, profile), opts.current_year);
  out.sections.push_back({ "msec.csv", io::format_msec_csv(msec_rows) });

  const int horizon = security::protection_horizon({ 2020, 80 });
  check("protection_horizon_2020_80", horizon == 2092, std::to_string(horizon));

  // ladders
  const auto ladders = io::load_ladders(dir / io::ladders_file);
  std::vector<analysis::ShiftReport> shift_reports;
  for (const auto& l : ladders) {
    shift_reports.push_back(analysis::shift_consistency_check(l));
    const auto& rep = shift_reports.back();
    check("ladder_shift_" + to_string(l.variant), rep.passed() && rep.checked_entries() > 0,
          std::to_string(rep.checked_entries()) + " entries in window");

    if (rep.passed()) {
      const auto cons = analysis::extract_key_constraints(l);
      out.sections.push_back({ "key_constraints_" + to_string(l.variant) + ".csv", key_constraints_csv(l.variant, cons) });
      // informational: deep-ladder consistency depends on the IR profile
      std::string notes;
      for (const auto& n : cons.notes)
        notes += (notes.empty() ? "" : "; ") + n;
      out.sections.push_back({ "key_constraint_summary_" + to_string(l.variant) + ".csv",
                               "variant,constraints,rank,consistent,solution_key,notes\n" + to_string(l.variant) + ',' +
                                 std::to_string(cons.constraints.size()) + ',' + std::to_string(cons.rank) + ',' +
                                 (cons.consistent ? "1" : "0") + ',' +
                                 (cons.solution ? cons.solution->to_hex() : std::string()) + ",\"" + notes + "\"\n" });

      if (l.variant == VariantId::e32 && !l.entries.empty() && l.entries.front().rounds == 1) {
        analysis::RoundLadderVector first{ l.variant, l.pt, { l.entries.front() } };
        const auto r1 = analysis::extract_key_constraints(first);
        bool k0 = false, k1 = false;
        for (const auto& k : r1.constraints) {
          if (k.indices == std::vector<unsigned>{ 0 } && k.value) k0 = true;
          if (k.indices == std::vector<unsigned>{ 1 } && !k.value) k1 = true;
        }
        check("ladder_e32_r1_key_bits", k0 && k1 && r1.constraints.size() == 2 && r1.consistent,
              std::string("k0=1 ") + (k0 ? "found" : "missing") + ", k1=0 " + (k1 ? "found" : "missing"));
      }
    }
  }
  out.sections.push_back({ "ladder_validation.csv", ladder_validation_csv(shift_reports) });

  // cipher sanity
  bool zero_ok = true;
  for (VariantId id : all_variants)
    zero_ok = zero_ok && encrypt_block(0, MasterKey{}, id) == 0;
  check("zero_fixed_point", zero_ok, zero_ok ? "encrypt(0, 0) = 0 for all variants" : "nonzero output");

  const auto kat_path = dir / io::known_answer_file;
  if (std::filesystem::exists(kat_path)) {
    const auto kats = io::parse_known_answers(io::read_text(kat_path));
    unsigned bad = 0;
    for (const auto& ka : kats) {
      const BlockCipher cipher(ka.variant, ka.key);
      if (cipher.encrypt(ka.pt, ka.rounds) != ka.ct || cipher.decrypt(ka.ct, ka.rounds) != ka.pt) ++bad;
    }
    check("known_answers", bad == 0 && !kats.empty(),
          std::to_string(kats.size() - bad) + "/" + std::to_string(kats.size()) + " vectors");
  }

  std::vector<analysis::AvalancheStats> aval;
  for (VariantId id : all_variants) {
    aval.push_back(analysis::avalanche_test(id, opts.avalanche_trials, total_rounds, opts.seed));
    const double n = build_variant_params(id).n;
    const double m = aval.back().mean();
    check("avalanche_" + to_string(id), m >= 0.45 * n && m <= 0.55 * n, "mean " + fmt(m) + " of " + fmt(n));
  }
  out.sections.push_back({ "avalanche.csv", avalanche_csv(aval) });

  std::string summary = "check,passed,detail\n";
  for (const auto& ch : out.checks)
    summary += ch.id + ',' + (ch.passed ? "1" : "0") + ",\"" + ch.detail + "\"\n";
  out.sections.push_back({ "checks.csv", summary });
  return out;
}

} // namespace eelwe::report
