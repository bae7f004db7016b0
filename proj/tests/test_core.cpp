#include <algorithm>

#include "capmatch/core.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace capmatch;
using testing::make;

TEST_SUITE("core") {
  TEST_CASE("validate sorts and permutes capacities") {
    const Instance inst = make({3, 1}, {2, 4, 6, 8, 10}, {2, 5}, {1, 1, 1, 1, 1});
    CHECK(std::ranges::equal(inst.coords(Side::S), std::vector<Coord>{1, 3}));
    CHECK(std::ranges::equal(inst.caps(Side::S), std::vector<Capacity>{5, 2}));
    CHECK(std::ranges::equal(inst.origin(Side::S), std::vector<std::size_t>{1, 0}));
  }

  TEST_CASE("validate clamps capacities to the opposite set size") {
    const Instance inst = make({3, 1}, {2}, {2, 5}, {1});
    CHECK(std::ranges::equal(inst.coords(Side::S), std::vector<Coord>{1, 3}));
    CHECK(std::ranges::equal(inst.caps(Side::S), std::vector<Capacity>{1, 1}));
    CHECK(std::ranges::equal(inst.origin(Side::S), std::vector<std::size_t>{1, 0}));
  }

  TEST_CASE("validate errors") {
    auto code = [](RawInstance r) {
      try {
        validate_instance(r);
      } catch (const ValidationError& e) {
        return e.code();
      }
      FAIL("no error");
      return ValidationErrc::EmptySide;
    };
    CHECK(code(testing::raw({}, {1}, {}, {1})) == ValidationErrc::EmptySide);
    CHECK(code(testing::raw({0}, {1}, {0}, {1})) == ValidationErrc::CapacityBelowOne);
    CHECK(code(testing::raw({0}, {1}, {1, 1}, {1})) == ValidationErrc::LengthMismatch);
    CHECK(code(testing::raw({Coord{1} << 62}, {1}, {1}, {1})) == ValidationErrc::CoordinateOverflow);
  }

  TEST_CASE("partition examples") {
    auto sides_and_coords = [](const Instance& inst) {
      std::vector<std::pair<Side, std::vector<Coord>>> out;
      for (const Block& b : partition_blocks(inst).blocks) out.emplace_back(b.side, b.coords);
      return out;
    };
    using V = std::vector<std::pair<Side, std::vector<Coord>>>;
    CHECK(sides_and_coords(make_unlimited({1, 3}, {2, 5})) ==
          V{{Side::S, {1}}, {Side::T, {2}}, {Side::S, {3}}, {Side::T, {5}}});
    CHECK(sides_and_coords(make_unlimited({1, 2}, {5, 6})) == V{{Side::S, {1, 2}}, {Side::T, {5, 6}}});
    CHECK(sides_and_coords(make_unlimited({2}, {2})) == V{{Side::S, {2}}, {Side::T, {2}}});
    CHECK(sides_and_coords(make_unlimited({5}, {1, 5})) == V{{Side::T, {1}}, {Side::S, {5}}, {Side::T, {5}}});
  }

  TEST_CASE("feasible examples") {
    CHECK_FALSE(feasible(make({0}, {1, 2}, {1}, {1, 1})));
    CHECK(feasible(make({0}, {1, 2}, {2}, {1, 1})));
  }

  TEST_CASE("verify examples") {
    const Instance inst = make({0}, {1, 2}, {2}, {1, 1});
    VerifyReport ok = verify_matching(inst, Matching{{{0, 0}, {0, 1}}, 3});
    CHECK(ok.ok);
    CHECK(ok.recomputed_cost == 3);

    VerifyReport missing = verify_matching(inst, Matching{{{0, 0}}, 1});
    CHECK_FALSE(missing.ok);
    REQUIRE(missing.violations.size() == 1);
    CHECK(missing.violations[0].kind == Violation::Kind::DegreeBelowOne);
    CHECK(missing.violations[0].side == Side::T);
    CHECK(missing.violations[0].index == 1);

    VerifyReport dup = verify_matching(inst, Matching{{{0, 0}, {0, 0}}, 2});
    CHECK_FALSE(dup.ok);
    CHECK(std::ranges::any_of(dup.violations, [](const Violation& v) { return v.kind == Violation::Kind::DuplicatePair; }));

    VerifyReport wrong_cost = verify_matching(inst, Matching{{{0, 0}, {0, 1}}, 4});
    CHECK_FALSE(wrong_cost.ok);
    CHECK(wrong_cost.violations[0].kind == Violation::Kind::CostMismatch);

    const Instance tight = make({0}, {1, 2}, {1}, {1, 1});
    VerifyReport over = verify_matching(tight, Matching{{{0, 0}, {0, 1}}, 3});
    CHECK(std::ranges::any_of(over.violations, [](const Violation& v) { return v.kind == Violation::Kind::DegreeAboveCapacity; }));

    VerifyReport range = verify_matching(inst, Matching{{{0, 0}, {0, 1}, {1, 0}}, 3});
    CHECK(std::ranges::any_of(range.violations, [](const Violation& v) { return v.kind == Violation::Kind::IndexOutOfRange; }));
  }

  TEST_CASE("partition is an alternating bijection reproducing the merged order") {
    for (std::uint64_t seed = 1; seed <= 300; ++seed) {
      const Instance inst = validate_instance(testing::random_raw(seed, 9, 20, 3, false));
      const BlockPartition part = partition_blocks(inst);
      std::size_t total = 0;
      std::vector<Coord> concat;
      for (std::size_t w = 0; w < part.blocks.size(); ++w) {
        const Block& b = part.blocks[w];
        total += b.size;
        if (w > 0) CHECK(b.side != part.blocks[w - 1].side);
        concat.insert(concat.end(), b.coords.begin(), b.coords.end());
        for (std::size_t j = 0; j < b.size; ++j) {
          const PointRef p = inst.order()[b.global_first + j];
          CHECK(p.side == b.side);
          CHECK(p.index == b.first + j);
          CHECK(part.block_of[b.global_first + j] == w);
        }
      }
      CHECK(total == inst.total());
      std::vector<Coord> merged;
      for (PointRef p : inst.order()) merged.push_back(inst.coord(p));
      CHECK(concat == merged);
      CHECK(std::ranges::is_sorted(merged));
      for (std::size_t g = 1; g < inst.order().size(); ++g) {
        const PointRef a = inst.order()[g - 1], b = inst.order()[g];
        if (inst.coord(a) == inst.coord(b) && a.side != b.side) CHECK(a.side == Side::S);
      }
    }
  }

  TEST_CASE("offsets prefix sums") {
    for (std::uint64_t seed = 1; seed <= 200; ++seed) {
      const Instance inst = validate_instance(testing::random_raw(seed, 8, 50, 4, false));
      const BlockPartition part = partition_blocks(inst);
      for (std::size_t w = 0; w + 1 < part.blocks.size(); ++w) {
        const BlockOffsets off = block_offsets(inst, part, w);
        CHECK(off.f(1) == 0);
        for (std::size_t i = 1; i <= off.s(); ++i) {
          CHECK(off.e(i) >= 0);
          if (i > 1) CHECK(off.e(i) <= off.e(i - 1));
          CHECK(off.e_prefix()[i] - off.e_prefix()[i - 1] == off.e(i));
          CHECK(off.sum_alpha_e(i, i) == off.e(i) * inst.caps(part.blocks[w].side)[part.blocks[w].first + i - 1]);
        }
        for (std::size_t i = 1; i <= off.t(); ++i) {
          CHECK(off.f(i) >= 0);
          if (i > 1) CHECK(off.f(i) >= off.f(i - 1));
          CHECK(off.f_prefix()[i] - off.f_prefix()[i - 1] == off.f(i));
        }
        CHECK(off.sum_e(1, off.s()) == off.e_prefix()[off.s()]);
        CHECK(off.sum_e(3, 2) == 0);
      }
    }
  }

  TEST_CASE("verify recomputes cost pair by pair") {
    std::mt19937_64 rng(99);
    for (std::uint64_t seed = 1; seed <= 200; ++seed) {
      const Instance inst = validate_instance(testing::random_raw(seed, 6, 100, 3, false));
      Matching m;
      for (std::uint32_t i = 0; i < inst.size(Side::S); ++i) {
        for (std::uint32_t j = 0; j < inst.size(Side::T); ++j) {
          if (rng() % 3 == 0) m.pairs.emplace_back(i, j);
        }
      }
      m.cost = testing::pair_sum(inst, m);
      const VerifyReport rep = verify_matching(inst, m);
      CHECK(rep.recomputed_cost == m.cost);
      CHECK(matching_cost(inst, m.pairs) == m.cost);
    }
  }
}
