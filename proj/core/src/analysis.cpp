#include "eelwe/analysis.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>
#include <stdexcept>

#include "eelwe/hex.hpp"

namespace eelwe::analysis {

namespace {

std::string
trim(std::string_view s)
{
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

std::string
drop_spaces(std::string_view s)
{
  std::string out;
  for (char ch : s)
    if (ch != ' ' && ch != '\t') out.push_back(ch);
  return out;
}

constexpr bool
bit(std::uint64_t w, unsigned i)
{
  return (w >> i) & 1u;
}

constexpr std::uint64_t
low_mask(unsigned bits)
{
  return bits >= 64 ? ~std::uint64_t{ 0 } : (std::uint64_t{ 1 } << bits) - 1;
}

// Register whose bits may be unknown.
struct PartialRegister
{
  std::uint64_t value = 0;
  std::uint64_t known = 0;
};

struct Tri
{
  bool known;
  bool value;
};

Tri
tap(const PartialRegister& r, unsigned i)
{
  return { bit(r.known, i), bit(r.value, i) };
}

Tri
tri_xor(Tri l, Tri r)
{
  return { l.known && r.known, l.value != r.value };
}

Tri
tri_and(Tri l, Tri r)
{
  if ((l.known && !l.value) || (r.known && !r.value)) return { true, false };
  return { l.known && r.known, l.value && r.value };
}

void
shift_in(PartialRegister& r, unsigned width, Tri in)
{
  const std::uint64_t m = low_mask(width);
  r.value = ((r.value << 1) & m) | std::uint64_t{ in.known && in.value };
  r.known = ((r.known << 1) & m) | std::uint64_t{ in.known };
}

// Incremental GF(2) elimination over the master-key bits.
class LinearSystem
{
public:
  bool add(std::bitset<key_bits> row, bool rhs)
  {
    for (unsigned p = key_bits; p-- > 0;) {
      if (!row.test(p)) continue;
      if (!rows_[p]) {
        rows_[p] = Row{ row, rhs };
        ++rank_;
        return true;
      }
      row ^= rows_[p]->bits;
      rhs ^= rows_[p]->rhs;
    }
    return !rhs; // 0 = rhs: redundant if rhs is 0, contradiction otherwise
  }

  unsigned rank() const { return rank_; }

  // free variables set to zero
  MasterKey solve() const
  {
    std::bitset<key_bits> x;
    for (unsigned p = 0; p < key_bits; ++p) {
      if (!rows_[p]) continue;
      auto lower = rows_[p]->bits;
      lower.reset(p);
      x.set(p, rows_[p]->rhs ^ ((lower & x).count() & 1u));
    }
    return MasterKey(x);
  }

private:
  struct Row
  {
    std::bitset<key_bits> bits;
    bool rhs;
  };
  std::array<std::optional<Row>, key_bits> rows_{};
  unsigned rank_ = 0;
};

std::string
format_fixed(double v, int decimals)
{
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
  return buf;
}

} // namespace

void
RoundLadderVector::validate() const
{
  const auto& p = build_variant_params(variant);
  if ((pt & ~p.block_mask()) != 0) throw std::invalid_argument("ladder plaintext wider than the block");
  unsigned prev = 0;
  for (const auto& e : entries) {
    if (e.rounds <= prev || e.rounds > total_rounds) {
      throw std::invalid_argument("ladder rounds must be strictly increasing within [1, 254]");
    }
    if ((e.ct & ~p.block_mask()) != 0) throw std::invalid_argument("ladder ciphertext wider than the block");
    prev = e.rounds;
  }
}

RoundLadderVector
parse_ladder(std::string_view line)
{
  std::vector<std::string> fields;
  std::string cur;
  for (char ch : line) {
    if (ch == ',') {
      fields.push_back(trim(cur));
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  fields.push_back(trim(cur));
  if (fields.size() != 3) throw std::invalid_argument("ladder line needs 'variant, pt_hex, r:ct;...'");

  RoundLadderVector v;
  v.variant = parse_variant(fields[0]);
  const unsigned nibbles = build_variant_params(v.variant).n / 4;
  v.pt = parse_hex(drop_spaces(fields[1]), nibbles);

  std::istringstream items(fields[2]);
  std::string item;
  while (std::getline(items, item, ';')) {
    item = trim(item);
    if (item.empty()) continue;
    const auto colon = item.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("ladder entry '" + item + "' lacks ':'");
    const std::string r = trim(item.substr(0, colon));
    unsigned rounds = 0;
    try {
      std::size_t used = 0;
      rounds = static_cast<unsigned>(std::stoul(r, &used));
      if (used != r.size()) throw std::invalid_argument(r);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad round count '" + r + "' in ladder");
    }
    v.entries.push_back({ rounds, parse_hex(drop_spaces(item.substr(colon + 1)), nibbles) });
  }
  v.validate();
  return v;
}

std::string
format_ladder(const RoundLadderVector& v)
{
  const unsigned nibbles = build_variant_params(v.variant).n / 4;
  std::string out = to_string(v.variant) + ", " + format_hex(v.pt, nibbles) + ", ";
  for (std::size_t i = 0; i < v.entries.size(); ++i) {
    if (i) out += ';';
    out += std::to_string(v.entries[i].rounds) + ':' + format_hex(v.entries[i].ct, nibbles);
  }
  return out;
}

RoundLadderVector
make_ladder(const BlockCipher& cipher, std::uint64_t pt, std::span<const unsigned> rounds)
{
  RoundLadderVector v;
  v.variant = cipher.params().id;
  v.pt = pt;
  for (unsigned r : rounds)
    v.entries.push_back({ r, cipher.encrypt(pt, r) });
  v.validate();
  return v;
}

bool
ShiftReport::passed() const
{
  return std::all_of(entries.begin(), entries.end(), [](const ShiftEntry& e) { return e.passed(); });
}

unsigned
ShiftReport::checked_entries() const
{
  return static_cast<unsigned>(std::count_if(entries.begin(), entries.end(), [](const ShiftEntry& e) { return e.checked(); }));
}

ShiftReport
shift_consistency_check(const RoundLadderVector& v)
{
  v.validate();
  const auto& p = build_variant_params(v.variant);
  const CipherState pt = load_state(v.pt, p);

  ShiftReport report{ v.variant, {} };
  for (const auto& e : v.entries) {
    const CipherState ct = load_state(e.ct, p);
    ShiftEntry s;
    s.rounds = e.rounds;
    s.shifted = e.rounds * p.steps_per_round;
    if (s.shifted <= p.len_p1 - 1) {
      s.p1_checked = true;
      s.p1_ok = (ct.p1 >> s.shifted) == (pt.p1 & low_mask(p.len_p1 - s.shifted));
      s.p1_inserted = ct.p1 & low_mask(s.shifted);
    }
    if (s.shifted <= p.len_p2 - 1) {
      s.p2_checked = true;
      s.p2_ok = (ct.p2 >> s.shifted) == (pt.p2 & low_mask(p.len_p2 - s.shifted));
      s.p2_inserted = ct.p2 & low_mask(s.shifted);
    }
    report.entries.push_back(s);
  }
  return report;
}

bool
KeyBitConstraint::satisfied_by(const ExpandedKey& k) const
{
  bool acc = false;
  for (unsigned i : indices)
    acc ^= k.bit(i);
  return acc == value;
}

std::bitset<key_bits>
master_key_form(unsigned j)
{
  if (j >= expanded_key_bits) throw std::out_of_range("expanded key index out of range");
  static const auto forms = [] {
    std::vector<std::bitset<key_bits>> f(expanded_key_bits);
    for (unsigned i = 0; i < key_bits; ++i)
      f[i].set(i);
    for (unsigned i = key_bits; i < expanded_key_bits; ++i)
      for (unsigned off : key_recurrence_offsets)
        f[i] ^= f[i - off];
    return f;
  }();
  return forms[j];
}

ConstraintReport
extract_key_constraints(const RoundLadderVector& v, const IRSequence& ir)
{
  if (!shift_consistency_check(v).passed()) {
    throw std::invalid_argument("ladder fails the shift-consistency check; constraints are meaningless");
  }
  const auto& p = build_variant_params(v.variant);
  const auto taps = p.taps();

  ConstraintReport report;
  LinearSystem system;

  const auto record = [&](unsigned key_index, bool value, unsigned round, unsigned step) {
    report.constraints.push_back({ { key_index }, value, round, step });
    if (!system.add(master_key_form(key_index), value)) report.consistent = false;
  };

  CipherState prev = load_state(v.pt, p);
  unsigned prev_rounds = 0;
  for (const auto& e : v.entries) {
    const CipherState next = load_state(e.ct, p);
    const unsigned shifts = (e.rounds - prev_rounds) * p.steps_per_round;

    // bits that survive the whole segment must agree
    if (shifts < p.len_p1 && (next.p1 >> shifts) != (prev.p1 & low_mask(p.len_p1 - shifts))) {
      report.notes.push_back("P1 overlap mismatch between r=" + std::to_string(prev_rounds) + " and r=" +
                             std::to_string(e.rounds));
      report.consistent = false;
    }
    if (shifts < p.len_p2 && (next.p2 >> shifts) != (prev.p2 & low_mask(p.len_p2 - shifts))) {
      report.notes.push_back("P2 overlap mismatch between r=" + std::to_string(prev_rounds) + " and r=" +
                             std::to_string(e.rounds));
      report.consistent = false;
    }

    PartialRegister r1{ prev.p1, p.p1_mask() };
    PartialRegister r2{ prev.p2, p.p2_mask() };
    for (unsigned t = 1; t <= shifts; ++t) {
      const unsigned round = prev_rounds + (t - 1) / p.steps_per_round;
      const Tri ir_bit{ true, ir[round] };

      // fx without kx, and the bit that landed in P2 (if still visible)
      const Tri fx_rest = tri_xor(tri_xor(tap(r1, taps.p1_xor[0]), tap(r1, taps.p1_xor[1])),
                                  tri_xor(tri_and(tap(r1, taps.p1_and[0]), tap(r1, taps.p1_and[1])),
                                          tri_and(tap(r1, taps.p1_ir), ir_bit)));
      const Tri fy_rest = tri_xor(tri_xor(tap(r2, taps.p2_xor[0]), tap(r2, taps.p2_xor[1])),
                                  tri_xor(tri_and(tap(r2, taps.p2_and[0][0]), tap(r2, taps.p2_and[0][1])),
                                          tri_and(tap(r2, taps.p2_and[1][0]), tap(r2, taps.p2_and[1][1]))));
      const unsigned age = shifts - t; // final position of this step's inserted bits
      const Tri fx_seen{ age < p.len_p2, age < p.len_p2 && bit(next.p2, age) };
      const Tri fy_seen{ age < p.len_p1, age < p.len_p1 && bit(next.p1, age) };

      if (fx_rest.known && fx_seen.known) record(2 * round, fx_seen.value ^ fx_rest.value, round, t);
      if (fy_rest.known && fy_seen.known) record(2 * round + 1, fy_seen.value ^ fy_rest.value, round, t);

      shift_in(r1, p.len_p1, fy_seen);
      shift_in(r2, p.len_p2, fx_seen);
    }
    prev = next;
    prev_rounds = e.rounds;
  }

  report.rank = system.rank();
  if (report.consistent) report.solution = system.solve();
  return report;
}

double
AvalancheStats::mean() const
{
  return trials ? static_cast<double>(total_flips) / static_cast<double>(trials) : 0.0;
}

double
AvalancheStats::stddev() const
{
  if (trials < 2) return 0.0;
  const double n = static_cast<double>(trials);
  const double m = mean();
  const double var = (static_cast<double>(total_flips_sq) - n * m * m) / (n - 1);
  return var > 0 ? std::sqrt(var) : 0.0;
}

AvalancheStats
avalanche_test(VariantId id, std::uint64_t trials, unsigned rounds, std::uint64_t seed)
{
  if (trials < min_avalanche_trials) throw std::invalid_argument("avalanche test needs at least 1000 trials");
  if (rounds > total_rounds) throw std::out_of_range("rounds must be in [0, 254]");
  const auto& p = build_variant_params(id);

  AvalancheStats s{ id, rounds, trials, seed, 0, 0, p.n, 0 };
  std::mt19937_64 rng(seed);
  for (std::uint64_t t = 0; t < trials; ++t) {
    // raw engine output only, so runs are identical across standard libraries
    const std::uint64_t lo = rng();
    const std::uint64_t hi = rng();
    std::bitset<key_bits> kb;
    for (unsigned i = 0; i < 64; ++i)
      kb.set(i, bit(lo, i));
    for (unsigned i = 0; i < 16; ++i)
      kb.set(64 + i, bit(hi, i));
    const BlockCipher cipher(id, MasterKey(kb));

    const std::uint64_t pt = rng() & p.block_mask();
    const unsigned flip = static_cast<unsigned>(rng() % p.n);
    const auto d = static_cast<unsigned>(
      std::popcount(cipher.encrypt(pt, rounds) ^ cipher.encrypt(pt ^ (std::uint64_t{ 1 } << flip), rounds)));

    s.total_flips += d;
    s.total_flips_sq += std::uint64_t{ d } * d;
    s.min_flips = std::min(s.min_flips, d);
    s.max_flips = std::max(s.max_flips, d);
  }
  return s;
}

std::vector<ComparisonRow>
comparison_report(std::span<const ComparisonEntry> entries, double eelwe_e_bit, unsigned eelwe_block_bits)
{
  if (entries.empty()) throw std::invalid_argument("comparison dataset is empty");
  std::vector<ComparisonRow> rows;
  for (const auto& e : entries) {
    if (!(e.uj_per_byte > 0)) throw std::invalid_argument(e.name + ": energy must be positive");
    if (e.name == eelwe_row_name) continue;
    rows.push_back({ e, false, false });
  }
  rows.push_back(
    { ComparisonEntry{ std::string(eelwe_row_name), eelwe_block_bits, cost::microjoule_per_byte(eelwe_e_bit) }, true,
      false });
  std::stable_sort(rows.begin(), rows.end(), [](const ComparisonRow& l, const ComparisonRow& r) {
    return l.entry.uj_per_byte < r.entry.uj_per_byte;
  });
  for (auto& r : rows)
    r.minimum = r.entry.uj_per_byte == rows.front().entry.uj_per_byte;
  return rows;
}

std::string
figure_data_csv(VariantId id, const cost::CostConstants& c)
{
  const auto reports = cost::sweep(id, c);
  std::string header = "r";
  std::string values = "e_bit_pj_per_bit";
  for (const auto& r : reports) {
    header += ',' + std::to_string(r.unroll);
    values += ',' + format_fixed(r.e_bit, 2);
  }
  return header + '\n' + values + '\n';
}

} // namespace eelwe::analysis
