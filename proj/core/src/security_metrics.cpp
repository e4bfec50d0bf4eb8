#include "eelwe/security_metrics.hpp"

#include <algorithm>
#include <stdexcept>

namespace eelwe::security {

double
operations_capacity(const AttackBudget& b)
{
  if (b.flops < 0 || b.systems < 0 || b.years < 0) throw std::invalid_argument("attack budget must be non-negative");
  if (b.cycles_per_encryption <= 0) throw std::invalid_argument("cycles per encryption must be positive");
  return (b.flops / b.cycles_per_encryption) * seconds_per_year * b.years * b.systems;
}

int
protection_horizon(const HorizonInput& h)
{
  if (h.gamma < moore_baseline_bits) {
    throw std::invalid_argument("security level must be at least 56 bits, got " + std::to_string(h.gamma));
  }
  return h.proposed_year + 3 * (h.gamma - moore_baseline_bits);
}

double
msec(const MsecInput& m)
{
  if (!(m.normalized_energy > 0)) throw std::invalid_argument("normalized energy must be positive");
  return m.secured_years_left / m.normalized_energy;
}

std::vector<MsecRow>
msec_ranking(std::span<const MsecCandidate> entries, int current_year)
{
  if (entries.empty()) throw std::invalid_argument("MSEC ranking needs at least one entry");
  double min_energy = entries.front().energy_uj_per_byte;
  for (const auto& e : entries) {
    if (!(e.energy_uj_per_byte > 0)) throw std::invalid_argument(e.name + ": energy must be positive");
    min_energy = std::min(min_energy, e.energy_uj_per_byte);
  }

  std::vector<MsecRow> rows;
  rows.reserve(entries.size());
  for (const auto& e : entries) {
    MsecRow r;
    r.name = e.name;
    r.energy_uj_per_byte = e.energy_uj_per_byte;
    r.normalized_energy = e.energy_uj_per_byte / min_energy;
    r.horizon = protection_horizon({ e.proposed_year, e.gamma });
    r.years_left = std::max(0, r.horizon - current_year);
    r.msec = msec({ r.years_left, r.normalized_energy });
    rows.push_back(std::move(r));
  }
  std::stable_sort(rows.begin(), rows.end(), [](const MsecRow& l, const MsecRow& r) { return l.msec > r.msec; });
  return rows;
}

} // namespace eelwe::security
