// eelwe: command-line front end for the cipher, cost model, metrics and the
// reference-table reproduction.
//
// Exit codes: 0 success, 1 usage or input error, 2 validation failure,
// 3 missing or unreadable fixture/data file.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "eelwe/analysis.hpp"
#include "eelwe/cipher.hpp"
#include "eelwe/cost_model.hpp"
#include "eelwe/data_io.hpp"
#include "eelwe/hex.hpp"
#include "eelwe/reproduce.hpp"
#include "eelwe/security_metrics.hpp"

namespace {

using namespace eelwe;

enum ExitCode : int
{
  exit_ok = 0,
  exit_usage = 1,
  exit_validation = 2,
  exit_data = 3,
};

struct usage_error : std::runtime_error
{
  using std::runtime_error::runtime_error;
};

struct CipherArgs
{
  std::string variant = "e32";
  std::string key;
  std::string block_hex;
  std::string in_file;
  std::string out_file;
  unsigned rounds = total_rounds;
};

std::filesystem::path
resolve_fixtures(const std::string& flag)
{
  return flag.empty() ? io::fixture_dir() : std::filesystem::path(flag);
}

std::vector<std::uint8_t>
read_binary(const std::string& path)
{
  std::ifstream in(path, std::ios::binary);
  if (!in) throw usage_error("cannot open input file '" + path + "'");
  return { std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>() };
}

int
run_cipher(const CipherArgs& a, bool decrypt)
{
  const auto id = parse_variant(a.variant);
  const auto& p = build_variant_params(id);
  const BlockCipher cipher(id, MasterKey::from_hex(a.key));
  const auto apply = [&](std::uint64_t x) { return decrypt ? cipher.decrypt(x, a.rounds) : cipher.encrypt(x, a.rounds); };

  if (!a.block_hex.empty()) {
    const std::uint64_t out = apply(parse_hex(a.block_hex, p.n / 4));
    std::cout << format_hex(out, p.n / 4) << '\n';
    return exit_ok;
  }

  const unsigned block_bytes = p.n / 8;
  const auto data = read_binary(a.in_file);
  if (data.size() % block_bytes != 0) {
    throw usage_error("input length " + std::to_string(data.size()) + " is not a multiple of the " +
                      std::to_string(block_bytes) + "-byte block (no padding is applied)");
  }
  const std::size_t blocks = data.size() / block_bytes;
  if (blocks > 1) {
    std::cerr << "warning: raw ECB over " << blocks << " blocks; equal input blocks give equal output blocks\n";
  }

  std::vector<std::uint8_t> out(data.size());
  for (std::size_t b = 0; b < blocks; ++b) {
    std::uint64_t x = 0;
    for (unsigned i = 0; i < block_bytes; ++i)
      x = (x << 8) | data[b * block_bytes + i];
    const std::uint64_t y = apply(x);
    for (unsigned i = 0; i < block_bytes; ++i)
      out[b * block_bytes + i] = static_cast<std::uint8_t>(y >> (8 * (block_bytes - 1 - i)));
  }

  if (a.out_file.empty()) {
    for (std::size_t b = 0; b < blocks; ++b) {
      std::uint64_t y = 0;
      for (unsigned i = 0; i < block_bytes; ++i)
        y = (y << 8) | out[b * block_bytes + i];
      std::cout << format_hex(y, p.n / 4) << '\n';
    }
  } else {
    std::ofstream f(a.out_file, std::ios::binary);
    if (!f) throw usage_error("cannot open output file '" + a.out_file + "'");
    f.write(reinterpret_cast<const char*>(out.data()), static_cast<std::streamsize>(out.size()));
  }
  return exit_ok;
}

int
run_keyschedule(const std::string& key_hex)
{
  const auto ek = expand_key(MasterKey::from_hex(key_hex));
  std::cout << "# expanded key, 508 bits; hex digits run from k507 down to k0\n";
  std::cout << "hex," << ek.to_hex() << '\n';
  std::cout << "# range,hex (most significant bit first)\n";
  for (unsigned lo = 0; lo < expanded_key_bits; lo += 64) {
    const unsigned hi = std::min(lo + 64, expanded_key_bits);
    std::uint64_t w = 0;
    for (unsigned j = hi; j-- > lo;)
      w = (w << 1) | (ek.bit(j) ? 1u : 0u);
    std::cout << "k" << hi - 1 << "..k" << lo << ',' << format_hex(w, (hi - lo + 3) / 4) << '\n';
  }
  return exit_ok;
}

int
run_irseq()
{
  const auto ir = ir_sequence();
  std::cout << "# irregular-update sequence, 254 bits; ir(0) is the top bit of the first digit\n";
  std::cout << "hex," << ir.to_hex() << '\n';
  std::cout << "# range,bits (leftmost = lowest round)\n";
  for (unsigned lo = 0; lo < total_rounds; lo += 64) {
    const unsigned hi = std::min(lo + 64, total_rounds);
    std::string bits;
    for (unsigned i = lo; i < hi; ++i)
      bits.push_back(ir[i] ? '1' : '0');
    std::cout << "ir" << lo << "..ir" << hi - 1 << ',' << bits << '\n';
  }
  return exit_ok;
}

struct CostArgs
{
  std::string variant = "e32";
  std::optional<unsigned> unroll;
  bool optimal = false;
  bool fit = false;
  std::string key;
  std::string pt;
  std::string fixtures;
};

cost::CostConstants
constants_for(bool fit, const std::string& fixtures)
{
  if (!fit) return {};
  const auto dir = resolve_fixtures(fixtures);
  std::vector<cost::ReferenceTable> tables;
  for (auto id : all_variants)
    tables.push_back(io::load_reference_table(dir / io::reference_table_file(id)));
  const auto result = cost::fit_constants(tables);
  const auto& c = result.constants;
  std::cerr << "fitted: t0=" << c.t0 << " tn=" << c.tn << " d_r=" << c.d_r << " c0=" << c.c0 << " a1=" << c.a1
            << " gn=" << c.gn << " g0=" << c.g0 << " gb=" << c.gb << " a0=" << c.a0 << " pd=" << c.pd
            << " pi=" << c.pi << " (max rel err " << result.max_relative_error << ")\n";
  return c;
}

int
run_cost(const CostArgs& a)
{
  const auto id = parse_variant(a.variant);
  const auto& p = build_variant_params(id);
  const auto c = constants_for(a.fit, a.fixtures);

  if (a.optimal) {
    const unsigned best = cost::optimal_unroll(id, c);
    const auto r = cost::evaluate({ p.n, best }, c);
    std::cout << "variant,optimal_unroll,e_bit,uj_per_byte\n"
              << to_string(id) << ',' << best << ',' << io::format_number(r.e_bit) << ','
              << io::format_number(cost::microjoule_per_byte(r.e_bit)) << '\n';
    return exit_ok;
  }

  const MasterKey key = a.key.empty() ? report::default_table_key() : MasterKey::from_hex(a.key);
  const std::uint64_t pt = a.pt.empty() ? report::reference_plaintext(id) : parse_hex(a.pt, p.n / 4);
  std::vector<io::SweepRow> rows;
  if (a.unroll) {
    if (*a.unroll == 0) throw usage_error("--unroll must be >= 1");
    const BlockCipher cipher(id, key);
    rows.push_back({ id, format_hex(cipher.encrypt(pt, std::min(*a.unroll, total_rounds)), p.n / 4),
                     cost::evaluate({ p.n, *a.unroll }, c) });
  } else {
    rows = report::sweep_table(id, c, key, pt);
  }

  // sweep schema plus the uJ/byte conversion
  const std::string csv = io::format_sweep_csv(rows);
  std::size_t pos = 0;
  bool header = true;
  std::size_t i = 0;
  while (pos < csv.size()) {
    const auto nl = csv.find('\n', pos);
    std::cout << csv.substr(pos, nl - pos) << ','
              << (header ? std::string("uj_per_byte") : io::format_number(cost::microjoule_per_byte(rows[i++].cost.e_bit)))
              << '\n';
    header = false;
    pos = nl + 1;
  }
  return exit_ok;
}

struct MsecArgs
{
  std::string fixtures;
  int current_year = 2020;
  unsigned unroll = total_rounds;
  std::optional<int> horizon_gamma;
  int proposed_year = security::default_proposed_year;
};

int
run_msec(const MsecArgs& a)
{
  if (a.horizon_gamma) {
    std::cout << "proposed_year,gamma,horizon\n"
              << a.proposed_year << ',' << *a.horizon_gamma << ','
              << security::protection_horizon({ a.proposed_year, *a.horizon_gamma }) << '\n';
    return exit_ok;
  }
  const auto dir = resolve_fixtures(a.fixtures);
  const auto energies = io::load_comparison(dir / io::comparison_file);
  const auto profile = io::load_msec_profile(dir / io::msec_profile_file);
  const double e_bit = cost::energy({ 64, a.unroll }).e_bit;
  std::vector<analysis::ComparisonEntry> all;
  for (const auto& r : analysis::comparison_report(energies, e_bit, 64))
    all.push_back(r.entry);
  std::cout << io::format_msec_csv(security::msec_ranking(io::msec_candidates(all, profile), a.current_year));
  return exit_ok;
}

struct AnalyzeArgs
{
  std::string what = "all";
  std::string fixtures;
  std::string ladder_file;
  std::string variant;
  std::uint64_t trials = 10000;
  std::uint64_t seed = 20201;
  unsigned rounds = total_rounds;
};

int
run_analyze(const AnalyzeArgs& a)
{
  const bool all = a.what == "all";
  if (!all && a.what != "ladder" && a.what != "constraints" && a.what != "avalanche" && a.what != "comparison") {
    throw usage_error("--what must be one of ladder, constraints, avalanche, comparison, all");
  }
  const auto dir = resolve_fixtures(a.fixtures);
  bool ok = true;

  if (all || a.what == "ladder" || a.what == "constraints") {
    const auto ladders = io::load_ladders(a.ladder_file.empty() ? dir / io::ladders_file : std::filesystem::path(a.ladder_file));
    std::vector<analysis::ShiftReport> reps;
    for (const auto& l : ladders) {
      reps.push_back(analysis::shift_consistency_check(l));
      ok = ok && reps.back().passed();
    }
    if (all || a.what == "ladder") std::cout << report::ladder_validation_csv(reps);
    if (all || a.what == "constraints") {
      for (std::size_t i = 0; i < ladders.size(); ++i) {
        if (!reps[i].passed()) continue;
        const auto cons = analysis::extract_key_constraints(ladders[i]);
        std::cout << report::key_constraints_csv(ladders[i].variant, cons);
        std::cerr << to_string(ladders[i].variant) << ": " << cons.constraints.size() << " constraints, rank "
                  << cons.rank << (cons.consistent ? ", consistent" : ", inconsistent under the IR profile") << '\n';
        for (const auto& n : cons.notes)
          std::cerr << "  " << n << '\n';
      }
    }
  }

  if (all || a.what == "avalanche") {
    std::vector<analysis::AvalancheStats> stats;
    if (a.variant.empty()) {
      for (auto id : all_variants)
        stats.push_back(analysis::avalanche_test(id, a.trials, a.rounds, a.seed));
    } else {
      stats.push_back(analysis::avalanche_test(parse_variant(a.variant), a.trials, a.rounds, a.seed));
    }
    std::cout << report::avalanche_csv(stats);
    if (a.rounds == total_rounds) {
      for (const auto& s : stats) {
        const double n = build_variant_params(s.variant).n;
        ok = ok && s.mean() >= 0.45 * n && s.mean() <= 0.55 * n;
      }
    }
  }

  if (all || a.what == "comparison") {
    const auto energies = io::load_comparison(dir / io::comparison_file);
    const auto rows = analysis::comparison_report(energies, cost::energy({ 64, total_rounds }).e_bit, 64);
    std::cout << io::format_comparison_csv(rows);
  }
  return ok ? exit_ok : exit_validation;
}

struct ReproduceArgs
{
  std::string fixtures;
  std::string out_dir;
  std::uint64_t trials = 10000;
  std::uint64_t seed = 20201;
  std::string key;
};

int
run_reproduce(const ReproduceArgs& a)
{
  report::ReproduceOptions opts;
  opts.avalanche_trials = a.trials;
  opts.seed = a.seed;
  if (!a.key.empty()) opts.key = MasterKey::from_hex(a.key);
  const auto result = report::reproduce(resolve_fixtures(a.fixtures), opts);

  if (a.out_dir.empty()) {
    for (const auto& s : result.sections)
      std::cout << "## " << s.name << '\n' << s.csv << '\n';
  } else {
    std::filesystem::create_directories(a.out_dir);
    for (const auto& s : result.sections) {
      std::ofstream f(std::filesystem::path(a.out_dir) / s.name);
      if (!f) throw usage_error("cannot write into '" + a.out_dir + "'");
      f << s.csv;
    }
  }
  for (const auto& c : result.checks)
    std::cerr << (c.passed ? "PASS " : "FAIL ") << c.id << ": " << c.detail << '\n';
  std::cerr << (result.passed() ? "all checks passed\n" : "some checks FAILED\n");
  return result.passed() ? exit_ok : exit_validation;
}

} // namespace

int
main(int argc, char** argv)
{
  CLI::App app{ "EELWE lightweight block cipher: encryption, cost model and reference-table reproduction" };
  app.require_subcommand(1);
  app.set_version_flag("--version", "eelwe 1.0.0");

  CipherArgs enc, dec;
  const auto add_cipher = [&app](const char* name, const char* desc, CipherArgs& a, const char* block_flag) {
    auto* sub = app.add_subcommand(name, desc);
    sub->add_option("-v,--variant", a.variant, "e32, e48 or e64")->capture_default_str();
    sub->add_option("-k,--key", a.key, "80-bit key, 20 hex digits")->required();
    auto* blk = sub->add_option(block_flag, a.block_hex, "single block in hex");
    auto* in = sub->add_option("-i,--in", a.in_file, "binary input file, processed block by block");
    blk->excludes(in);
    sub->add_option("-o,--out", a.out_file, "binary output file (file mode only)")->needs(in);
    sub->add_option("-r,--rounds", a.rounds, "rounds to run, 0..254")
      ->check(CLI::Range(0u, total_rounds))
      ->capture_default_str();
    sub->callback([blk, in] {
      if (blk->count() == 0 && in->count() == 0) throw CLI::ValidationError("an input block or --in file is required");
    });
    return sub;
  };
  auto* enc_cmd = add_cipher("encrypt", "encrypt a block or a block-aligned file", enc, "-p,--pt");
  auto* dec_cmd = add_cipher("decrypt", "decrypt a block or a block-aligned file", dec, "-c,--ct");

  std::string ks_key;
  auto* ks_cmd = app.add_subcommand("keyschedule", "dump the 508-bit expanded key");
  ks_cmd->add_option("-k,--key", ks_key, "80-bit key, 20 hex digits")->required();

  auto* ir_cmd = app.add_subcommand("irseq", "dump the 254-bit irregular-update sequence");

  CostArgs cost_args;
  auto* cost_cmd = app.add_subcommand("cost", "time/area/power/energy model (sweep, one point, or optimum)");
  cost_cmd->add_option("-v,--variant", cost_args.variant, "e32, e48 or e64")->capture_default_str();
  auto* unroll_opt = cost_cmd->add_option("-u,--unroll", cost_args.unroll, "rounds unrolled per cycle");
  cost_cmd->add_flag("--optimal", cost_args.optimal, "report the energy-optimal unroll factor")->excludes(unroll_opt);
  cost_cmd->add_flag("--fit", cost_args.fit, "fit the model constants from the reference tables first");
  cost_cmd->add_option("-k,--key", cost_args.key, "key for the ciphertext column (default: k0 = 1)");
  cost_cmd->add_option("-p,--pt", cost_args.pt, "plaintext for the ciphertext column");
  cost_cmd->add_option("--fixtures", cost_args.fixtures, "fixture directory (default: $EELWE_FIXTURES)");

  MsecArgs msec_args;
  auto* msec_cmd = app.add_subcommand("msec", "MSEC ranking over the comparison dataset, or a protection horizon");
  msec_cmd->add_option("--fixtures", msec_args.fixtures, "fixture directory (default: $EELWE_FIXTURES)");
  msec_cmd->add_option("--current-year", msec_args.current_year, "year the remaining security is measured from")
    ->capture_default_str();
  msec_cmd->add_option("-u,--unroll", msec_args.unroll, "unroll factor of the EELWE64 energy figure")
    ->check(CLI::Range(1u, 100000u))
    ->capture_default_str();
  msec_cmd->add_option("--horizon", msec_args.horizon_gamma, "print the protection horizon for this security level");
  msec_cmd->add_option("--proposed-year", msec_args.proposed_year, "base year for --horizon")->capture_default_str();

  AnalyzeArgs an;
  auto* an_cmd = app.add_subcommand("analyze", "ladder validation, key-bit constraints, avalanche, comparison");
  an_cmd->add_option("-w,--what", an.what, "ladder | constraints | avalanche | comparison | all")->capture_default_str();
  an_cmd->add_option("--fixtures", an.fixtures, "fixture directory (default: $EELWE_FIXTURES)");
  an_cmd->add_option("--ladders", an.ladder_file, "ladder file (default: <fixtures>/reference_ladders.txt)");
  an_cmd->add_option("-v,--variant", an.variant, "restrict avalanche to one variant");
  an_cmd->add_option("-t,--trials", an.trials, "avalanche trials (>= 1000)")->capture_default_str();
  an_cmd->add_option("-s,--seed", an.seed, "avalanche seed")->capture_default_str();
  an_cmd->add_option("-r,--rounds", an.rounds, "avalanche rounds")->check(CLI::Range(0u, total_rounds))->capture_default_str();

  ReproduceArgs rep;
  auto* rep_cmd = app.add_subcommand("reproduce", "regenerate every reference table and check tolerances");
  rep_cmd->add_option("--fixtures", rep.fixtures, "fixture directory (default: $EELWE_FIXTURES)");
  rep_cmd->add_option("-o,--out", rep.out_dir, "write each report as a CSV file in this directory");
  rep_cmd->add_option("-t,--trials", rep.trials, "avalanche trials")->capture_default_str();
  rep_cmd->add_option("-s,--seed", rep.seed, "avalanche seed")->capture_default_str();
  rep_cmd->add_option("-k,--key", rep.key, "key for the sweep ciphertext column (default: k0 = 1)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_usage;
  }

  try {
    if (*enc_cmd) return run_cipher(enc, false);
    if (*dec_cmd) return run_cipher(dec, true);
    if (*ks_cmd) return run_keyschedule(ks_key);
    if (*ir_cmd) return run_irseq();
    if (*cost_cmd) return run_cost(cost_args);
    if (*msec_cmd) return run_msec(msec_args);
    if (*an_cmd) return run_analyze(an);
    if (*rep_cmd) return run_reproduce(rep);
  } catch (const io::data_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_data;
  } catch (const cost::fit_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_validation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_usage;
  }
  return exit_usage;
}
