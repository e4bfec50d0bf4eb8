#pragma once

#include <bitset>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "eelwe/cipher.hpp"
#include "eelwe/cost_model.hpp"
#include "eelwe/key_schedule.hpp"
#include "eelwe/variant.hpp"

namespace eelwe::analysis {

struct LadderEntry
{
  unsigned rounds;
  std::uint64_t ct;

  friend bool operator==(const LadderEntry&, const LadderEntry&) = default;
};

// Ciphertexts of one plaintext after increasing round counts.
struct RoundLadderVector
{
  VariantId variant = VariantId::e32;
  std::uint64_t pt = 0;
  std::vector<LadderEntry> entries;

  // rounds strictly increasing, within [1, 254], blocks fit in n bits
  void validate() const;

  friend bool operator==(const RoundLadderVector&, const RoundLadderVector&) = default;
};

// "e32, 5742414E, 1:AE8C829D;2:5D11053A;..." (spaces inside hex are ignored)
RoundLadderVector
parse_ladder(std::string_view line);

std::string
format_ladder(const RoundLadderVector& v);

RoundLadderVector
make_ladder(const BlockCipher& cipher, std::uint64_t pt, std::span<const unsigned> rounds);

struct ShiftEntry
{
  unsigned rounds = 0;
  unsigned shifted = 0; // rounds * steps_per_round
  bool p1_checked = false;
  bool p1_ok = true;
  bool p2_checked = false;
  bool p2_ok = true;
  std::uint64_t p1_inserted = 0; // low `shifted` bits of ciphertext P1 (fy stream)
  std::uint64_t p2_inserted = 0; // low `shifted` bits of ciphertext P2 (fx stream)

  bool checked() const { return p1_checked || p2_checked; }
  bool passed() const { return p1_ok && p2_ok; }
};

struct ShiftReport
{
  VariantId variant;
  std::vector<ShiftEntry> entries;

  bool passed() const;
  unsigned checked_entries() const;
};

// Key-independent check: after s = r * steps shifts, a register of width w
// with s <= w - 1 must still hold the plaintext's low (w - s) bits in its
// top positions. Entries outside both windows are reported unchecked.
ShiftReport
shift_consistency_check(const RoundLadderVector& v);

// XOR of the listed expanded-key bits equals `value`.
struct KeyBitConstraint
{
  std::vector<unsigned> indices;
  bool value = false;
  unsigned round = 0; // round that exposed the constraint
  unsigned step = 0;  // step within the ladder segment, 1-based

  bool satisfied_by(const ExpandedKey& k) const;
};

struct ConstraintReport
{
  std::vector<KeyBitConstraint> constraints;
  bool consistent = true;
  unsigned rank = 0;                  // rank over the 80 master-key bits
  std::optional<MasterKey> solution;  // one key meeting every constraint
  std::vector<std::string> notes;     // segments whose overlapping bits disagree
};

// Walks every ladder segment (plaintext -> first entry -> next entry ...),
// tracks which register bits are observable, and turns each feedback bit
// whose inputs are all known into a constraint on k[2i] or k[2i+1].
// Throws std::invalid_argument if the plaintext-relative shift check fails.
ConstraintReport
extract_key_constraints(const RoundLadderVector& v, const IRSequence& ir = ir_sequence());

// Linear form of expanded-key bit j over the master-key bits.
std::bitset<key_bits>
master_key_form(unsigned j);

struct AvalancheStats
{
  VariantId variant;
  unsigned rounds = 0;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  std::uint64_t total_flips = 0;
  std::uint64_t total_flips_sq = 0;
  unsigned min_flips = 0;
  unsigned max_flips = 0;

  double mean() const;
  double stddev() const;
};

inline constexpr std::uint64_t min_avalanche_trials = 1000;

// Single-bit plaintext flips under random keys drawn from a seeded
// mt19937_64; throws std::invalid_argument for fewer than 1000 trials.
AvalancheStats
avalanche_test(VariantId id, std::uint64_t trials, unsigned rounds, std::uint64_t seed);

struct ComparisonEntry
{
  std::string name;
  unsigned block_bits = 0;
  double uj_per_byte = 0;
};

struct ComparisonRow
{
  ComparisonEntry entry;
  bool computed = false; // the EELWE row produced by the cost model
  bool minimum = false;
};

inline constexpr std::string_view eelwe_row_name = "EELWE";

// Appends the EELWE row (energy per bit converted to uJ/byte) and sorts
// ascending by energy. Dataset rows named EELWE are replaced by the
// computed one. Throws std::invalid_argument for an empty dataset.
std::vector<ComparisonRow>
comparison_report(std::span<const ComparisonEntry> entries, double eelwe_e_bit, unsigned eelwe_block_bits = 64);

// "r,1,2,...,254\ne_bit_pj_per_bit,...\n" with two decimals.
std::string
figure_data_csv(VariantId id, const cost::CostConstants& c = {});

} // namespace eelwe::analysis
