#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "wcc/enumerate.hpp"
#include "wcc/measures.hpp"
#include "wcc/numeric.hpp"
#include "wcc/oracle.hpp"

namespace wcc {

// Incompressibility predicates.
enum class Predicate {
  kMaxRateBits,     // #_b = N * ceil_log2(q)
  kAllInformants,   // #_n = N
  kBetaOne,         // beta = 1 (non-degenerate)
};

std::string_view to_string(Predicate p);
Predicate parse_predicate(std::string_view text);  // "max-rate-bits", ...

struct CostReport {
  MeasureSummary measures;
  int bits_worst = 0;
  int informants_worst = 0;
  NormalizedCost beta;
  NormalizedCost eta;
  bool bit_compressible = true;        // beta < 1
  bool informant_compressible = true;  // eta < 1
  bool max_rate = false;               // #_b = N * ceil_log2(q)
  bool all_informants = false;         // #_n = N
  StrategyTree bits_strategy;
  StrategyTree informants_strategy;
};

CostReport classify(const SupportSet& s, FunctionKind f);

// Shared knobs for the enumeration-based operations. Results never depend on
// `jobs`.
struct AnalysisOptions {
  EnumerationLimits limits;
  int jobs = 1;
};

enum class ThresholdSource { kFormula, kOracle };

// M1/M2 bound the bit-incompressible cardinalities, M3/M4 the
// informant-incompressible ones: M1 (M3) is the smallest cardinality with an
// incompressible set, M2 (M4) the largest with a compressible set.
struct ThresholdSet {
  FunctionKind function = FunctionKind::kIdentity;
  ThresholdSource source = ThresholdSource::kFormula;
  std::optional<std::int64_t> m1, m2, m3, m4;

  friend bool operator==(const ThresholdSet&, const ThresholdSet&) = default;
};

// Closed forms: M1 = N(q-1)+1, M2 = q^(N-1)(q-1), M3 = N+1, M4 = q^(N-1).
// For bitwise OR only M1 and M3 are known. Throws InvalidArgument on
// q < 2, n < 1 or int64 overflow.
ThresholdSet formula_thresholds(int q, int n, FunctionKind f);

// Exhaustive scan filling the pair that `predicate` governs (M1/M2 for the
// bit predicates, M3/M4 for all-informants). A threshold stays empty when no
// cardinality qualifies.
ThresholdSet oracle_thresholds(const SampleSpace& space, FunctionKind f, Predicate predicate,
                               const AnalysisOptions& options = {});
// Both pairs (max-rate bits and all-informants).
ThresholdSet oracle_thresholds(const SampleSpace& space, FunctionKind f,
                               const AnalysisOptions& options = {});

struct CountReport {
  std::string space;
  int cardinality = 0;
  Predicate predicate = Predicate::kMaxRateBits;
  FunctionKind function = FunctionKind::kIdentity;
  BigInt incompressible_count;
  BigInt total_sets;
  Rational fraction;
};

CountReport count_at_cardinality(const SampleSpace& space, int m, Predicate predicate,
                                 FunctionKind f, const AnalysisOptions& options = {});

// Closed-form counts of max-rate sets at M1 and all-informant sets at M3,
// with their fractions of all sets of that cardinality.
struct FormulaCounts {
  std::int64_t m1 = 0;
  BigInt m1_count;
  BigInt m1_total;
  Rational m1_fraction;
  std::int64_t m3 = 0;
  BigInt m3_count;
  BigInt m3_total;
  Rational m3_fraction;
};

FormulaCounts formula_counts(int q, int n);

struct PropositionRow {
  int q = 0;
  int n = 0;
  ThresholdSet thresholds;
  bool holds = false;  // M3 < M1 < M4 < M2
};

std::vector<PropositionRow> verify_proposition(int q_min, int q_max, int n_min, int n_max);

enum class RegionKind { kBits, kInformants };
enum class RegionLabel { kAllCompressible, kMixed, kAllIncompressible };

std::string_view to_string(RegionKind kind);
std::string_view to_string(RegionLabel label);
RegionKind parse_region_kind(std::string_view text);

struct RegionRow {
  int cardinality = 0;
  bool exists_incompressible = false;
  bool all_incompressible = false;
  RegionLabel label = RegionLabel::kAllCompressible;
  std::optional<BigInt> count;
  BigInt total;
};

struct RegionTable {
  std::string space;
  FunctionKind function = FunctionKind::kIdentity;
  RegionKind kind = RegionKind::kBits;
  ThresholdSource source = ThresholdSource::kOracle;
  std::vector<RegionRow> rows;  // cardinality 1..q^N
};

RegionLabel label_for(bool exists_incompressible, bool all_incompressible);

// Exhaustive table for every cardinality. The bits kind uses the max-rate
// predicate, informants the all-informants predicate. With with_counts every
// subset is evaluated; otherwise each row stops as soon as both flags are
// settled.
RegionTable region_table(const SampleSpace& space, FunctionKind f, RegionKind kind,
                         const AnalysisOptions& options = {}, bool with_counts = false);

// Identity-only table read off the closed-form thresholds.
RegionTable formula_region_table(const SampleSpace& space, RegionKind kind);

// First set in lexicographic combination order at cardinality m that is
// incompressible under the predicate (compressible when negate is set).
std::optional<SupportSet> find_witness(const SampleSpace& space, int m, Predicate predicate,
                                       FunctionKind f, bool negate,
                                       const AnalysisOptions& options = {});

// Predicate on one mask through a (per-worker) evaluator.
bool is_incompressible(CostEvaluator& evaluator, CellMask mask, Predicate predicate);

// Result of scanning every m-subset.
struct ScanResult {
  std::uint64_t matches = 0;             // meaningful only for full scans
  std::optional<std::uint64_t> first;    // lowest matching rank
  CellMask first_mask = 0;
};

// Scans the m-subsets for sets whose incompressibility equals `target`.
// With stop_at_first the scan ends at the lowest-ranked match.
ScanResult scan_cardinality(const SampleSpace& space, int m, FunctionKind f, Predicate predicate,
                            bool target, bool stop_at_first, const AnalysisOptions& options);

}  // namespace wcc
