#include "eelwe/data_io.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "eelwe/hex.hpp"

#ifndef EELWE_DEFAULT_FIXTURE_DIR
#define EELWE_DEFAULT_FIXTURE_DIR "data"
#endif

namespace eelwe::io {

namespace {

std::string
trim(const std::string& s)
{
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

double
to_double(const std::string& s, const std::string& what)
{
  try {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw data_error("bad number '" + s + "' for " + what);
  }
}

long
to_long(const std::string& s, const std::string& what)
{
  try {
    std::size_t used = 0;
    const long v = std::stol(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw data_error("bad integer '" + s + "' for " + what);
  }
}

unsigned
to_unsigned(const std::string& s, const std::string& what)
{
  const long v = to_long(s, what);
  if (v < 0) throw data_error("negative value '" + s + "' for " + what);
  return static_cast<unsigned>(v);
}

// Drops the header row after checking its first column name.
std::vector<std::vector<std::string>>
body_rows(const std::string& text, const std::string& first_column, std::size_t min_columns)
{
  auto rows = parse_csv(text);
  if (rows.empty() || rows.front().empty() || rows.front().front() != first_column) {
    throw data_error("CSV header must start with '" + first_column + "'");
  }
  rows.erase(rows.begin());
  for (const auto& r : rows)
    if (r.size() < min_columns) throw data_error("CSV row has " + std::to_string(r.size()) + " columns, expected " +
                                                 std::to_string(min_columns));
  return rows;
}

} // namespace

std::filesystem::path
fixture_dir()
{
  if (const char* env = std::getenv(fixture_env_var); env != nullptr && *env != '\0') return env;
  return EELWE_DEFAULT_FIXTURE_DIR;
}

std::string
reference_table_file(VariantId id)
{
  return "reference_table_" + to_string(id) + ".csv";
}

std::string
read_text(const std::filesystem::path& path)
{
  std::ifstream in(path, std::ios::binary);
  if (!in) throw data_error("cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::vector<std::string>>
parse_csv(const std::string& text)
{
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    const std::string t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    std::vector<std::string> fields;
    std::string cur;
    for (char ch : t) {
      if (ch == ',') {
        fields.push_back(trim(cur));
        cur.clear();
      } else {
        cur.push_back(ch);
      }
    }
    fields.push_back(trim(cur));
    rows.push_back(std::move(fields));
  }
  return rows;
}

const char* const sweep_csv_header = "variant,unroll,ciphertext_hex,cb,tr1,ct,tb,throughput,ar,ad,power,e_block,e_bit";

std::string
format_number(double v)
{
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

std::string
format_sweep_csv(const std::vector<SweepRow>& rows)
{
  std::string out = std::string(sweep_csv_header) + '\n';
  for (const auto& r : rows) {
    const auto& c = r.cost;
    out += to_string(r.variant) + ',' + std::to_string(c.unroll) + ',' + r.ciphertext_hex + ',' + std::to_string(c.cb);
    for (double v : { c.tr1, c.ct, c.tb, c.throughput, c.ar, c.ad, c.power, c.e_block, c.e_bit })
      out += ',' + format_number(v);
    out += '\n';
  }
  return out;
}

std::vector<SweepRow>
parse_sweep_csv(const std::string& text)
{
  std::vector<SweepRow> out;
  for (const auto& f : body_rows(text, "variant", 13)) {
    SweepRow r;
    r.variant = parse_variant(f[0]);
    r.cost.unroll = to_unsigned(f[1], "unroll");
    r.ciphertext_hex = f[2];
    r.cost.cb = to_unsigned(f[3], "cb");
    double* cells[] = { &r.cost.tr1, &r.cost.ct, &r.cost.tb, &r.cost.throughput, &r.cost.ar,
                        &r.cost.ad,  &r.cost.power, &r.cost.e_block, &r.cost.e_bit };
    for (std::size_t i = 0; i < 9; ++i)
      *cells[i] = to_double(f[4 + i], "sweep cell");
    out.push_back(std::move(r));
  }
  return out;
}

cost::ReferenceTable
load_reference_table(const std::filesystem::path& path)
{
  const auto rows = parse_sweep_csv(read_text(path));
  if (rows.empty()) throw data_error("'" + path.string() + "' has no rows");
  cost::ReferenceTable t{ rows.front().variant, {} };
  for (const auto& r : rows) {
    if (r.variant != t.variant) throw data_error("'" + path.string() + "' mixes variants");
    t.columns.push_back(r.cost);
  }
  return t;
}

std::vector<analysis::RoundLadderVector>
load_ladders(const std::filesystem::path& path)
{
  std::vector<analysis::RoundLadderVector> out;
  std::istringstream in(read_text(path));
  std::string line;
  unsigned lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    try {
      out.push_back(analysis::parse_ladder(t));
    } catch (const std::exception& e) {
      throw data_error(path.string() + ":" + std::to_string(lineno) + ": " + e.what());
    }
  }
  return out;
}

std::vector<analysis::ComparisonEntry>
load_comparison(const std::filesystem::path& path)
{
  std::vector<analysis::ComparisonEntry> out;
  for (const auto& f : body_rows(read_text(path), "name", 3)) {
    analysis::ComparisonEntry e{ f[0], to_unsigned(f[1], "block_bits"), to_double(f[2], "uj_per_byte") };
    if (!(e.uj_per_byte > 0)) throw data_error(e.name + ": energy must be positive");
    out.push_back(std::move(e));
  }
  return out;
}

std::string
format_comparison_csv(const std::vector<analysis::ComparisonRow>& rows)
{
  std::string out = "rank,name,block_bits,uj_per_byte,computed,minimum\n";
  unsigned rank = 1;
  for (const auto& r : rows) {
    out += std::to_string(rank++) + ',' + r.entry.name + ',' + std::to_string(r.entry.block_bits) + ',' +
           format_number(r.entry.uj_per_byte) + ',' + (r.computed ? "1" : "0") + ',' + (r.minimum ? "1" : "0") + '\n';
  }
  return out;
}

std::vector<MsecProfileEntry>
load_msec_profile(const std::filesystem::path& path)
{
  std::vector<MsecProfileEntry> out;
  for (const auto& f : body_rows(read_text(path), "name", 3))
    out.push_back({ f[0], static_cast<int>(to_long(f[1], "gamma")), static_cast<int>(to_long(f[2], "proposed_year")) });
  return out;
}

std::vector<security::MsecCandidate>
msec_candidates(const std::vector<analysis::ComparisonEntry>& energies, const std::vector<MsecProfileEntry>& profile)
{
  std::vector<security::MsecCandidate> out;
  for (const auto& e : energies) {
    security::MsecCandidate c{ e.name, e.uj_per_byte, 80, security::default_proposed_year };
    for (const auto& p : profile) {
      if (p.name == e.name) {
        c.gamma = p.gamma;
        c.proposed_year = p.proposed_year;
        break;
      }
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::string
format_msec_csv(const std::vector<security::MsecRow>& rows)
{
  std::string out = "rank,name,uj_per_byte,normalized_energy,horizon,years_left,msec\n";
  unsigned rank = 1;
  for (const auto& r : rows) {
    out += std::to_string(rank++) + ',' + r.name + ',' + format_number(r.energy_uj_per_byte) + ',' +
           format_number(r.normalized_energy) + ',' + std::to_string(r.horizon) + ',' + format_number(r.years_left) +
           ',' + format_number(r.msec) + '\n';
  }
  return out;
}

std::vector<FigureRow>
load_figure_rows(const std::filesystem::path& path)
{
  auto rows = parse_csv(read_text(path));
  if (rows.empty() || rows.front().empty() || rows.front().front() != "variant") {
    throw data_error("figure CSV header must start with 'variant'");
  }
  std::vector<unsigned> unrolls;
  for (std::size_t i = 1; i < rows.front().size(); ++i)
    unrolls.push_back(to_unsigned(rows.front()[i], "unroll header"));

  std::vector<FigureRow> out;
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const auto& f = rows[r];
    if (f.size() != unrolls.size() + 1) throw data_error("figure CSV row width differs from header");
    FigureRow fr{ parse_variant(f[0]), {} };
    for (std::size_t i = 0; i < unrolls.size(); ++i)
      fr.e_bit.emplace_back(unrolls[i], to_double(f[i + 1], "e_bit"));
    out.push_back(std::move(fr));
  }
  return out;
}

std::vector<KnownAnswer>
parse_known_answers(const std::string& text)
{
  std::vector<KnownAnswer> out;
  for (const auto& f : parse_csv(text)) {
    if (f.size() != 5) throw data_error("known-answer line needs 5 fields");
    KnownAnswer ka;
    ka.variant = parse_variant(f[0]);
    const unsigned nibbles = build_variant_params(ka.variant).n / 4;
    ka.key = MasterKey::from_hex(f[1]);
    ka.pt = parse_hex(f[2], nibbles);
    ka.rounds = to_unsigned(f[3], "rounds");
    ka.ct = parse_hex(f[4], nibbles);
    out.push_back(ka);
  }
  return out;
}

std::string
format_known_answer(const KnownAnswer& ka)
{
  const unsigned nibbles = build_variant_params(ka.variant).n / 4;
  return to_string(ka.variant) + ", " + ka.key.to_hex() + ", " + format_hex(ka.pt, nibbles) + ", " +
         std::to_string(ka.rounds) + ", " + format_hex(ka.ct, nibbles);
}

} // namespace eelwe::io
