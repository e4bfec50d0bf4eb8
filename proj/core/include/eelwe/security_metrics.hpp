#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace eelwe::security {

inline constexpr double seconds_per_year = 60.0 * 60 * 24 * 365;
inline constexpr int default_proposed_year = 2020;
inline constexpr int moore_baseline_bits = 56;

struct AttackBudget
{
  double flops = 0;                 // operations per second of one system
  double cycles_per_encryption = 0; // C
  double systems = 0;               // N
  double years = 0;                 // M
};

// Encryptions an attacker completes: (flops / C) * seconds_per_year * M * N.
double
operations_capacity(const AttackBudget& b);

struct HorizonInput
{
  int proposed_year = default_proposed_year;
  int gamma = 80; // security level in bits
};

// Year up to which a gamma-bit design stays ahead of Moore's-law attackers:
// proposed_year + 3 * (gamma - 56). Throws std::invalid_argument if gamma < 56.
int
protection_horizon(const HorizonInput& h);

struct MsecInput
{
  double secured_years_left = 0;
  double normalized_energy = 1;
};

double
msec(const MsecInput& m);

struct MsecCandidate
{
  std::string name;
  double energy_uj_per_byte = 0;
  int gamma = 80;
  int proposed_year = default_proposed_year;
};

struct MsecRow
{
  std::string name;
  double energy_uj_per_byte;
  double normalized_energy; // energy / min energy of the set
  int horizon;
  double years_left;        // max(0, horizon - current_year)
  double msec;
};

// Sorted by MSEC, highest first; ties keep input order.
std::vector<MsecRow>
msec_ranking(std::span<const MsecCandidate> entries, int current_year);

} // namespace eelwe::security
