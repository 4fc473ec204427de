#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "brute_force.hpp"
#include "wcc/analysis.hpp"
#include "wcc/invariants.hpp"
#include "wcc/oracle.hpp"
#include "wcc/symmetry.hpp"

namespace wcc {
namespace {

constexpr std::pair<int, int> kSmallSpaces[] = {{2, 2}, {3, 2}, {2, 3}, {4, 2}, {2, 4},
                                                {3, 1}, {16, 1}, {4, 1}};

Relabeling random_relabeling(const SampleSpace& space, std::mt19937_64& rng, bool values) {
  Relabeling r = Relabeling::identity(space);
  std::shuffle(r.coord_perm.begin(), r.coord_perm.end(), rng);
  if (values) {
    for (auto& map : r.value_maps) std::shuffle(map.begin(), map.end(), rng);
  }
  return r;
}

// Checks every output of simulate against the target and that some point
// realizes the claimed worst case.
void expect_sound(const StrategyTree& tree, const SupportSet& s, FunctionKind f, CostMetric metric) {
  int worst = 0;
  for (const Point& p : s.points()) {
    const Transcript t = simulate(tree, p);
    ASSERT_EQ(t.output, evaluate(f, s.space(), p));
    const int cost = metric == CostMetric::kBits ? t.total_bits() : t.informants_queried();
    ASSERT_LE(cost, tree.worst_case());
    worst = std::max(worst, cost);
  }
  ASSERT_EQ(worst, tree.worst_case());
}

void check_set(const SupportSet& s, std::mt19937_64& rng) {
  const SampleSpace& space = s.space();
  const int n = space.num_informants();
  const auto points = s.points();
  const testing::PointSet ref(points.begin(), points.end());
  const MeasureSummary m = summarize(s);

  for (FunctionKind f : {FunctionKind::kIdentity, FunctionKind::kBitwiseOr}) {
    const bool is_or = f == FunctionKind::kBitwiseOr;
    const OracleResult bits = worst_case_bits(s, f);
    const OracleResult informants = worst_case_informants(s, f);
    ASSERT_EQ(bits.value, testing::ref_block_serial(ref, n, is_or, true));
    ASSERT_EQ(informants.value, testing::ref_block_serial(ref, n, is_or, false));

    ASSERT_GE(bits.value, 0);
    ASSERT_LE(bits.value, m.naive_bit_budget);
    ASSERT_GE(informants.value, 0);
    ASSERT_LE(informants.value, n);
    ASSERT_LE(informants.value, bits.value);
    if (f == FunctionKind::kIdentity) {
      ASSERT_GE(bits.value, m.min_bits_bound);
      const NormalizedCost b = beta(s, bits.value);
      ASSERT_GE(b.value, 0);
      ASSERT_LE(b.value, 1);
    }
    const int interleaved = worst_case_bits_interleaved(s, f);
    ASSERT_LE(interleaved, bits.value);
    ASSERT_EQ(interleaved, testing::ref_bit_adaptive(ref, n, is_or));

    expect_sound(bits.strategy, s, f, CostMetric::kBits);
    expect_sound(informants.strategy, s, f, CostMetric::kInformants);

    // Coordinate permutations commute with OR; value maps only with identity.
    const Relabeling r = random_relabeling(space, rng, !is_or);
    const SupportSet image = apply_symmetry(s, r);
    ASSERT_EQ(worst_case_bits(image, f).value, bits.value);
    ASSERT_EQ(worst_case_informants(image, f).value, informants.value);

    // Adding one point never lowers a worst case.
    const CellMask outside = space.full_mask() & ~s.mask();
    if (outside != 0) {
      std::vector<int> free_cells;
      for_each_cell(outside, [&](int cell) { free_cells.push_back(cell); });
      const int cell = free_cells[rng() % free_cells.size()];
      const SupportSet bigger = SupportSet::from_mask(space, s.mask() | (CellMask{1} << cell));
      ASSERT_GE(worst_case_bits(bigger, f).value, bits.value);
      ASSERT_GE(worst_case_informants(bigger, f).value, informants.value);
    }
  }

  const int id_bits = worst_case_bits(s, FunctionKind::kIdentity).value;
  const int id_informants = worst_case_informants(s, FunctionKind::kIdentity).value;
  ASSERT_LE(worst_case_bits(s, FunctionKind::kBitwiseOr).value, id_bits);
  ASSERT_LE(worst_case_informants(s, FunctionKind::kBitwiseOr).value, id_informants);
  if (id_bits == n * ceil_log2(space.alphabet_size()) && space.alphabet_size() > 1) {
    ASSERT_EQ(id_informants, n);
  }
}

TEST(PropertyTest, RandomSets) {
  std::mt19937_64 rng(20261016);
  int checked = 0;
  for (int round = 0; round < 1200; ++round) {
    const auto [q, n] = kSmallSpaces[round % std::size(kSmallSpaces)];
    const SampleSpace space = make_space(q, n);
    CellMask mask = 0;
    while (mask == 0) mask = rng() & space.full_mask();
    SCOPED_TRACE(::testing::Message() << q << "x" << n << " mask " << mask);
    check_set(SupportSet::from_mask(space, mask), rng);
    if (HasFatalFailure()) return;
    ++checked;
  }
  EXPECT_GE(checked, 1000);
}

TEST(PropertyTest, ExhaustiveUpToNineCells) {
  std::mt19937_64 rng(7);
  for (auto [q, n] : {std::pair{2, 2}, {3, 2}, {2, 3}, {3, 1}, {9, 1}}) {
    const SampleSpace space = make_space(q, n);
    for (CellMask mask = 1; mask <= space.full_mask(); ++mask) {
      SCOPED_TRACE(::testing::Message() << q << "x" << n << " mask " << mask);
      check_set(SupportSet::from_mask(space, mask), rng);
      if (HasFatalFailure()) return;
    }
  }
}

TEST(PropertyTest, InvariantSuitePasses) {
  for (auto [q, n] : {std::pair{2, 2}, {3, 2}, {2, 3}, {4, 2}, {2, 4}}) {
    for (FunctionKind f : {FunctionKind::kIdentity, FunctionKind::kBitwiseOr}) {
      const InvariantReport report = check_invariants(make_space(q, n), f);
      for (const auto& check : report.checks) {
        EXPECT_GT(check.checked, 0u) << report.space << " " << check.name;
        EXPECT_EQ(check.violations, 0u) << report.space << " " << check.name;
      }
      EXPECT_TRUE(report.passed());
    }
  }
}

// Every max-rate set is informant-incompressible, on every subset of q^N <= 16.
TEST(PropertyTest, MaxRateNestsInAllInformants) {
  for (auto [q, n] : {std::pair{2, 2}, {3, 2}, {2, 3}, {4, 2}, {2, 4}}) {
    const SampleSpace space = make_space(q, n);
    CostEvaluator evaluator(space, FunctionKind::kIdentity);
    std::uint64_t max_rate = 0;
    for (CellMask mask = 1; mask <= space.full_mask(); ++mask) {
      if (!is_incompressible(evaluator, mask, Predicate::kMaxRateBits)) continue;
      ++max_rate;
      ASSERT_TRUE(is_incompressible(evaluator, mask, Predicate::kAllInformants))
          << q << "x" << n << " mask " << mask;
    }
    EXPECT_GT(max_rate, 0u);
  }
}

// Bands only move towards incompressible as the cardinality grows.
TEST(PropertyTest, RegionMonotonicity) {
  for (auto [q, n] : {std::pair{2, 2}, {3, 2}, {2, 3}, {4, 2}, {2, 4}}) {
    for (FunctionKind f : {FunctionKind::kIdentity, FunctionKind::kBitwiseOr}) {
      for (RegionKind kind : {RegionKind::kBits, RegionKind::kInformants}) {
        const RegionTable t = region_table(make_space(q, n), f, kind);
        for (std::size_t i = 1; i < t.rows.size(); ++i) {
          EXPECT_LE(static_cast<int>(t.rows[i - 1].label), static_cast<int>(t.rows[i].label))
              << t.space << " " << to_string(kind) << " m=" << t.rows[i].cardinality;
          EXPECT_LE(t.rows[i - 1].exists_incompressible, t.rows[i].exists_incompressible);
          EXPECT_LE(t.rows[i - 1].all_incompressible, t.rows[i].all_incompressible);
        }
      }
    }
  }
}

TEST(PropertyTest, CanonicalFormIsOrbitInvariantAndWorstCasePreserved) {
  std::mt19937_64 rng(99);
  const SampleSpace space = make_space(3, 2);
  for (int round = 0; round < 200; ++round) {
    CellMask mask = 0;
    while (mask == 0) mask = rng() & space.full_mask();
    const SupportSet s = SupportSet::from_mask(space, mask);
    const SupportSet image = apply_symmetry(s, random_relabeling(space, rng, true));
    const SupportSet canon = canonical_form(s);
    ASSERT_EQ(canon, canonical_form(image));
    ASSERT_EQ(worst_case_bits(canon, FunctionKind::kIdentity).value,
              worst_case_bits(s, FunctionKind::kIdentity).value);
  }
}

}  // namespace
}  // namespace wcc
