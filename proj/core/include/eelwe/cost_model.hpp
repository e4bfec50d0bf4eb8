#pragma once

#include <array>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "eelwe/variant.hpp"

namespace eelwe::cost {

// Coefficients of the time/area/power model. Time values are in the units
// the reference tables print (one unit for tr1, ct and tb alike).
struct CostConstants
{
  double t0 = 1.431e-4; // fixed part of one round's delay
  double tn = 8.75e-8;  // per-bit part of one round's delay
  double d_r = 0.014;   // register + overhead delay per cycle
  unsigned c0 = 2;      // extra cycles per block
  double a1 = 30.0;     // area of one round (GE)
  double gn = 0.0041;   // area exponent, per-bit coefficient
  double g0 = 0.69;     // area exponent, constant part
  double gb = 3.0;      // per-bit register area (GE)
  double a0 = 80.0;     // fixed design area (GE)
  double pd = 0.066;    // dynamic power coefficient, per unrolled round
  double pi = 0.9;      // static power coefficient

  bool valid() const;
};

struct DesignPoint
{
  unsigned n = 32;                 // block size in bits
  unsigned unroll = 1;             // rounds instantiated per cycle, >= 1
  unsigned rounds = total_rounds;  // total rounds per block
};

struct TimeBreakdown
{
  double tr1;        // one round
  double ct;         // one cycle
  double tb;         // one block
  double throughput; // n / tb
};

struct AreaBreakdown
{
  double ar; // unrolled rounds
  double ad; // whole design
};

struct EnergyBreakdown
{
  double e_block;
  double e_bit;
};

struct CostReport
{
  unsigned unroll = 0;
  unsigned cb = 0;
  double tr1 = 0, ct = 0, tb = 0, throughput = 0;
  double ar = 0, ad = 0;
  double power = 0;
  double e_block = 0, e_bit = 0;
};

// Column grid of the reference tables.
inline constexpr std::array<unsigned, 9> sweep_unrolls{ 1, 2, 4, 8, 16, 32, 64, 128, 254 };

// ceil(rounds / unroll) + c0
unsigned
cycles_per_block(const DesignPoint& dp, const CostConstants& c = {});

TimeBreakdown
time_per_block(const DesignPoint& dp, const CostConstants& c = {});

AreaBreakdown
area(const DesignPoint& dp, const CostConstants& c = {});

// ((pd * unroll + pi) * ad) / ct
double
power(const DesignPoint& dp, const CostConstants& c = {});

EnergyBreakdown
energy(const DesignPoint& dp, const CostConstants& c = {});

CostReport
evaluate(const DesignPoint& dp, const CostConstants& c = {});

std::vector<CostReport>
sweep(VariantId id, const CostConstants& c = {});

// Unroll factor from sweep_unrolls with the lowest energy per bit.
unsigned
optimal_unroll(VariantId id, const CostConstants& c = {});

// pJ/bit -> uJ/byte
double
microjoule_per_byte(double e_bit_pj);

// One printed reference table (one variant, nine unroll columns).
struct ReferenceTable
{
  VariantId variant;
  std::vector<CostReport> columns;
};

struct fit_error : std::runtime_error
{
  using std::runtime_error::runtime_error;
};

struct FitResult
{
  CostConstants constants;
  double max_relative_error = 0; // worst real-valued cell after regeneration
  std::string worst_cell;        // "<variant> r=<unroll> <field>"
};

// Relative tolerance used when regenerating the reference tables.
inline constexpr double table_tolerance = 0.005;

// Recovers the model coefficients from reference tables (one per variant,
// at least two distinct block sizes). Throws fit_error when the cb rows do
// not follow ceil(rounds/unroll) + c0 or when regeneration misses any
// real-valued cell by more than `tolerance`.
FitResult
fit_constants(std::span<const ReferenceTable> tables, double tolerance = table_tolerance);

// Largest relative deviation between the model and a reference table; cb
// mismatches are reported through `cb_mismatches`.
struct TableComparison
{
  double max_relative_error = 0;
  std::string worst_cell;
  unsigned cb_mismatches = 0;
  unsigned cells_checked = 0;
  std::vector<std::string> outliers; // cells above table_tolerance
};

TableComparison
compare_table(const ReferenceTable& table, const CostConstants& c = {});

// Cells of a table that break its own identities tb = cb * ct,
// e_block = tb * power and e_bit = e_block / n beyond `tolerance`.
// Independent of the model constants.
std::vector<std::string>
identity_violations(const ReferenceTable& table, double tolerance = table_tolerance);

} // namespace eelwe::cost
