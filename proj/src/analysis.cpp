#include "wcc/analysis.hpp"

#include <atomic>
#include <limits>
#include <string>

#include "wcc/error.hpp"

namespace wcc {

std::string_view to_string(Predicate p) {
  switch (p) {
    case Predicate::kMaxRateBits: return "max-rate-bits";
    case Predicate::kAllInformants: return "all-informants";
    case Predicate::kBetaOne: return "beta-one";
  }
  return "unknown";
}

Predicate parse_predicate(std::string_view text) {
  if (text == "max-rate-bits") return Predicate::kMaxRateBits;
  if (text == "all-informants") return Predicate::kAllInformants;
  if (text == "beta-one") return Predicate::kBetaOne;
  throw Error(ErrorCode::kInvalidArgument, "unknown predicate '" + std::string(text) + "'");
}

std::string_view to_string(RegionKind kind) {
  return kind == RegionKind::kBits ? "bits" : "informants";
}

std::string_view to_string(RegionLabel label) {
  switch (label) {
    case RegionLabel::kAllCompressible: return "all_compressible";
    case RegionLabel::kMixed: return "mixed";
    case RegionLabel::kAllIncompressible: return "all_incompressible";
  }
  return "unknown";
}

RegionKind parse_region_kind(std::string_view text) {
  if (text == "bits") return RegionKind::kBits;
  if (text == "informants") return RegionKind::kInformants;
  throw Error(ErrorCode::kInvalidArgument, "unknown region kind '" + std::string(text) + "'");
}

RegionLabel label_for(bool exists_incompressible, bool all_incompressible) {
  if (all_incompressible) return RegionLabel::kAllIncompressible;
  if (!exists_incompressible) return RegionLabel::kAllCompressible;
  return RegionLabel::kMixed;
}

CostReport classify(const SupportSet& s, FunctionKind f) {
  const SampleSpace& space = s.space();
  const int n = space.num_informants();
  OracleResult bits = worst_case_bits(s, f);
  OracleResult informants = worst_case_informants(s, f);
  CostReport report{summarize(s),
                    bits.value,
                    informants.value,
                    beta(s, bits.value),
                    eta(s, informants.value),
                    true,
                    true,
                    false,
                    false,
                    std::move(bits.strategy),
                    std::move(informants.strategy)};
  report.bit_compressible = report.beta.value < 1;
  report.informant_compressible = report.eta.value < 1;
  report.max_rate = report.bits_worst == n * ceil_log2(space.alphabet_size());
  report.all_informants = report.informants_worst == n;
  return report;
}

bool is_incompressible(CostEvaluator& evaluator, CellMask mask, Predicate predicate) {
  const SampleSpace& space = evaluator.space();
  const int n = space.num_informants();
  switch (predicate) {
    case Predicate::kMaxRateBits:
      return evaluator.bits(mask) == n * ceil_log2(space.alphabet_size());
    case Predicate::kAllInformants:
      return evaluator.informants(mask) == n;
    case Predicate::kBetaOne: {
      int budget = 0;
      for (int i = 0; i < n; ++i) budget += ceil_log2(mask_ops::projection_size(space, mask, i));
      return budget > 0 && evaluator.bits(mask) == budget;
    }
  }
  return false;
}

ScanResult scan_cardinality(const SampleSpace& space, int m, FunctionKind f, Predicate predicate,
                            bool target, bool stop_at_first, const AnalysisOptions& options) {
  const std::uint64_t total = checked_subset_count(space, m, options.limits);
  const auto slots = static_cast<std::size_t>(std::max(options.jobs, 1));
  std::vector<ScanResult> partial(slots);
  std::atomic<std::uint64_t> best{std::numeric_limits<std::uint64_t>::max()};

  run_partitioned(total, options.jobs, [&](std::size_t worker, std::uint64_t begin, std::uint64_t end) {
    if (begin >= end) return;
    CostEvaluator evaluator(space, f);
    CombinationCursor cursor(space.total_cells(), m, begin);
    ScanResult& out = partial[worker];
    for (std::uint64_t rank = begin; rank < end; ++rank) {
      if (stop_at_first && rank > best.load(std::memory_order_relaxed)) break;
      if (is_incompressible(evaluator, cursor.mask(), predicate) == target) {
        ++out.matches;
        if (!out.first) {
          out.first = rank;
          out.first_mask = cursor.mask();
        }
        if (stop_at_first) {
          std::uint64_t seen = best.load();
          while (rank < seen && !best.compare_exchange_weak(seen, rank)) {
          }
          break;
        }
      }
      cursor.next();
    }
  });

  ScanResult result;
  for (const ScanResult& part : partial) {
    result.matches += part.matches;
    if (part.first && (!result.first || *part.first < *result.first)) {
      result.first = part.first;
      result.first_mask = part.first_mask;
    }
  }
  return result;
}

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw Error(ErrorCode::kInvalidArgument, "threshold formula overflows 64 bits");
  }
  return out;
}

std::int64_t checked_pow(std::int64_t base, int exponent) {
  std::int64_t out = 1;
  for (int i = 0; i < exponent; ++i) out = checked_mul(out, base);
  return out;
}

void check_parameters(int q, int n) {
  if (q < 2 || n < 1) {
    throw Error(ErrorCode::kInvalidArgument, "need q >= 2 and N >= 1");
  }
}

std::uint64_t cells_as_u64(int q, int n) {
  const BigInt cells = power(static_cast<std::uint64_t>(q), static_cast<std::uint64_t>(n));
  if (cells > std::numeric_limits<std::uint64_t>::max()) {
    throw Error(ErrorCode::kInvalidArgument, "q^N exceeds 64 bits");
  }
  return cells.convert_to<std::uint64_t>();
}

}  // namespace

ThresholdSet formula_thresholds(int q, int n, FunctionKind f) {
  check_parameters(q, n);
  ThresholdSet t;
  t.function = f;
  t.source = ThresholdSource::kFormula;
  t.m1 = checked_mul(n, q - 1) + 1;
  t.m3 = static_cast<std::int64_t>(n) + 1;
  if (f == FunctionKind::kIdentity) {
    const std::int64_t layer = checked_pow(q, n - 1);
    t.m2 = checked_mul(layer, q - 1);
    t.m4 = layer;
  }
  return t;
}

ThresholdSet oracle_thresholds(const SampleSpace& space, FunctionKind f, Predicate predicate,
                               const AnalysisOptions& options) {
  ThresholdSet t;
  t.function = f;
  t.source = ThresholdSource::kOracle;
  const int cells = space.total_cells();
  std::optional<std::int64_t> low;
  std::optional<std::int64_t> high;
  for (int m = 1; m <= cells; ++m) {
    if (scan_cardinality(space, m, f, predicate, true, true, options).first) {
      low = m;
      break;
    }
  }
  for (int m = cells; m >= 1; --m) {
    if (scan_cardinality(space, m, f, predicate, false, true, options).first) {
      high = m;
      break;
    }
  }
  if (predicate == Predicate::kAllInformants) {
    t.m3 = low;
    t.m4 = high;
  } else {
    t.m1 = low;
    t.m2 = high;
  }
  return t;
}

ThresholdSet oracle_thresholds(const SampleSpace& space, FunctionKind f,
                               const AnalysisOptions& options) {
  ThresholdSet t = oracle_thresholds(space, f, Predicate::kMaxRateBits, options);
  const ThresholdSet informants = oracle_thresholds(space, f, Predicate::kAllInformants, options);
  t.m3 = informants.m3;
  t.m4 = informants.m4;
  return t;
}

CountReport count_at_cardinality(const SampleSpace& space, int m, Predicate predicate,
                                 FunctionKind f, const AnalysisOptions& options) {
  const ScanResult scan = scan_cardinality(space, m, f, predicate, true, false, options);
  CountReport report;
  report.space = space.label();
  report.cardinality = m;
  report.predicate = predicate;
  report.function = f;
  report.incompressible_count = scan.matches;
  report.total_sets = small_binomial(space.total_cells(), m);
  report.fraction = Rational(report.incompressible_count, report.total_sets);
  return report;
}

FormulaCounts formula_counts(int q, int n) {
  check_parameters(q, n);
  const std::uint64_t cells = cells_as_u64(q, n);
  const auto uq = static_cast<std::uint64_t>(q);
  const auto un = static_cast<std::uint64_t>(n);
  FormulaCounts c;
  c.m1 = checked_mul(n, q - 1) + 1;
  c.m1_count = power(uq, un - 1) * BigInt((un - 1) * (uq - 1) + 1);
  c.m1_total = binomial(cells, static_cast<std::uint64_t>(c.m1));
  c.m1_fraction = Rational(c.m1_count, c.m1_total);
  c.m3 = static_cast<std::int64_t>(n) + 1;
  c.m3_count = power(uq, un) * power(uq - 1, un);
  c.m3_total = binomial(cells, static_cast<std::uint64_t>(c.m3));
  c.m3_fraction = Rational(c.m3_count, c.m3_total);
  return c;
}

std::vector<PropositionRow> verify_proposition(int q_min, int q_max, int n_min, int n_max) {
  std::vector<PropositionRow> rows;
  for (int q = q_min; q <= q_max; ++q) {
    for (int n = n_min; n <= n_max; ++n) {
      PropositionRow row;
      row.q = q;
      row.n = n;
      row.thresholds = formula_thresholds(q, n, FunctionKind::kIdentity);
      const ThresholdSet& t = row.thresholds;
      row.holds = *t.m3 < *t.m1 && *t.m1 < *t.m4 && *t.m4 < *t.m2;
      rows.push_back(row);
    }
  }
  return rows;
}

RegionTable region_table(const SampleSpace& space, FunctionKind f, RegionKind kind,
                         const AnalysisOptions& options, bool with_counts) {
  const Predicate predicate =
      kind == RegionKind::kBits ? Predicate::kMaxRateBits : Predicate::kAllInformants;
  RegionTable table;
  table.space = space.label();
  table.function = f;
  table.kind = kind;
  table.source = ThresholdSource::kOracle;
  for (int m = 1; m <= space.total_cells(); ++m) {
    RegionRow row;
    row.cardinality = m;
    row.total = small_binomial(space.total_cells(), m);
    if (with_counts) {
      const ScanResult scan = scan_cardinality(space, m, f, predicate, true, false, options);
      row.count = BigInt(scan.matches);
      row.exists_incompressible = scan.matches > 0;
      row.all_incompressible = *row.count == row.total;
    } else {
      row.exists_incompressible =
          scan_cardinality(space, m, f, predicate, true, true, options).first.has_value();
      row.all_incompressible =
          !scan_cardinality(space, m, f, predicate, false, true, options).first.has_value();
    }
    row.label = label_for(row.exists_incompressible, row.all_incompressible);
    table.rows.push_back(std::move(row));
  }
  return table;
}

RegionTable formula_region_table(const SampleSpace& space, RegionKind kind) {
  const ThresholdSet t =
      formula_thresholds(space.alphabet_size(), space.num_informants(), FunctionKind::kIdentity);
  const std::int64_t first = kind == RegionKind::kBits ? *t.m1 : *t.m3;
  const std::int64_t last_compressible = kind == RegionKind::kBits ? *t.m2 : *t.m4;
  RegionTable table;
  table.space = space.label();
  table.function = FunctionKind::kIdentity;
  table.kind = kind;
  table.source = ThresholdSource::kFormula;
  for (int m = 1; m <= space.total_cells(); ++m) {
    RegionRow row;
    row.cardinality = m;
    row.total = small_binomial(space.total_cells(), m);
    row.all_incompressible = m > last_compressible;
    row.exists_incompressible = m >= first || row.all_incompressible;
    row.label = label_for(row.exists_incompressible, row.all_incompressible);
    table.rows.push_back(std::move(row));
  }
  return table;
}

std::optional<SupportSet> find_witness(const SampleSpace& space, int m, Predicate predicate,
                                       FunctionKind f, bool negate,
                                       const AnalysisOptions& options) {
  const ScanResult scan = scan_cardinality(space, m, f, predicate, !negate, true, options);
  if (!scan.first) return std::nullopt;
  return SupportSet::from_mask(space, scan.first_mask);
}

}  // namespace wcc
