#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "eelwe/analysis.hpp"
#include "eelwe/cost_model.hpp"
#include "eelwe/data_io.hpp"
#include "eelwe/key_schedule.hpp"

namespace eelwe::report {

// Plaintexts of the reference round ladders ("WBAN", "WBAN48", "WBANKLCE").
std::uint64_t
reference_plaintext(VariantId id);

// k0 = 1, every other bit 0: the two bits the r = 1 ladder entries pin down.
MasterKey
default_table_key();

// Sweep table with the ciphertext column filled in as encrypt(pt, key, r)
// for r equal to the unroll column.
std::vector<io::SweepRow>
sweep_table(VariantId id, const cost::CostConstants& c, const MasterKey& key, std::uint64_t pt);

std::string
ladder_validation_csv(const std::vector<analysis::ShiftReport>& reports);

std::string
key_constraints_csv(VariantId id, const analysis::ConstraintReport& r);

std::string
avalanche_csv(const std::vector<analysis::AvalancheStats>& stats);

struct ReproduceOptions
{
  cost::CostConstants constants{};
  MasterKey key = default_table_key();
  std::uint64_t avalanche_trials = 10000;
  std::uint64_t seed = 20201;
  int current_year = 2020;
};

struct Check
{
  std::string id;
  bool passed = false;
  std::string detail;
};

struct Section
{
  std::string name; // file name when written to a directory
  std::string csv;
};

struct Reproduction
{
  std::vector<Check> checks;
  std::vector<Section> sections;

  bool passed() const;
};

// Regenerates every table from the fixtures in `dir` and evaluates the
// tolerance checks. Throws io::data_error if a fixture is missing.
Reproduction
reproduce(const std::filesystem::path& dir, const ReproduceOptions& opts = {});

} // namespace eelwe::report
