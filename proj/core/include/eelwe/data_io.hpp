#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "eelwe/analysis.hpp"
#include "eelwe/cost_model.hpp"
#include "eelwe/key_schedule.hpp"
#include "eelwe/security_metrics.hpp"

namespace eelwe::io {

struct data_error : std::runtime_error
{
  using std::runtime_error::runtime_error;
};

inline constexpr const char* fixture_env_var = "EELWE_FIXTURES";

// $EELWE_FIXTURES if set, else the data/ directory of the source tree.
std::filesystem::path
fixture_dir();

// Fixture file names inside the fixture directory.
inline constexpr const char* ladders_file = "reference_ladders.txt";
inline constexpr const char* comparison_file = "comparison_energy.csv";
inline constexpr const char* msec_profile_file = "msec_profile.csv";
inline constexpr const char* figure_ebit_file = "reference_figure_ebit.csv";
inline constexpr const char* known_answer_file = "known_answers.txt";

std::string
reference_table_file(VariantId id); // "reference_table_e32.csv", ...

// Reads a whole file; throws data_error if it cannot be opened.
std::string
read_text(const std::filesystem::path& path);

// Splits CSV text into trimmed fields per non-empty, non-'#' line.
std::vector<std::vector<std::string>>
parse_csv(const std::string& text);

// Sweep table CSV: variant,unroll,ciphertext_hex,cb,tr1,ct,tb,throughput,
// ar,ad,power,e_block,e_bit
extern const char* const sweep_csv_header;

struct SweepRow
{
  VariantId variant;
  std::string ciphertext_hex;
  cost::CostReport cost;
};

std::string
format_sweep_csv(const std::vector<SweepRow>& rows);

std::vector<SweepRow>
parse_sweep_csv(const std::string& text);

cost::ReferenceTable
load_reference_table(const std::filesystem::path& path);

std::vector<analysis::RoundLadderVector>
load_ladders(const std::filesystem::path& path);

// name,block_bits,uj_per_byte
std::vector<analysis::ComparisonEntry>
load_comparison(const std::filesystem::path& path);

std::string
format_comparison_csv(const std::vector<analysis::ComparisonRow>& rows);

// name,gamma,proposed_year
struct MsecProfileEntry
{
  std::string name;
  int gamma;
  int proposed_year;
};

std::vector<MsecProfileEntry>
load_msec_profile(const std::filesystem::path& path);

// Joins energies with profile rows by name; names missing from the profile
// fall back to an 80-bit level proposed in 2020.
std::vector<security::MsecCandidate>
msec_candidates(const std::vector<analysis::ComparisonEntry>& energies,
                const std::vector<MsecProfileEntry>& profile);

std::string
format_msec_csv(const std::vector<security::MsecRow>& rows);

// variant,1,2,4,8,16,32,64,128,254 -> e_bit per unroll column
struct FigureRow
{
  VariantId variant;
  std::vector<std::pair<unsigned, double>> e_bit;
};

std::vector<FigureRow>
load_figure_rows(const std::filesystem::path& path);

// variant, key_hex, pt_hex, rounds, ct_hex
struct KnownAnswer
{
  VariantId variant;
  MasterKey key;
  std::uint64_t pt;
  unsigned rounds;
  std::uint64_t ct;
};

std::vector<KnownAnswer>
parse_known_answers(const std::string& text);

std::string
format_known_answer(const KnownAnswer& ka);

// "%.*g" with enough digits to round-trip the table precision
std::string
format_number(double v);

} // namespace eelwe::io
