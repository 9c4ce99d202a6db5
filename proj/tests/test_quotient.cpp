#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <stdexcept>
#include <vector>

#include "ngg/enumerate.hpp"
#include "ngg/group.hpp"
#include "ngg/partition.hpp"
#include "ngg/quotient.hpp"
#include "ngg/transform.hpp"

using ngg::all_transformations;
using ngg::compose;
using ngg::induced_map;
using ngg::InducedMap;
using ngg::is_idempotent;
using ngg::is_induced_bijective;
using ngg::is_induced_identity;
using ngg::kernel_partition;
using ngg::membership_condition;
using ngg::Partition;
using ngg::Transformation;

namespace {
Transformation t(std::vector<int> images) { return Transformation(images); }
}

TEST_CASE("partition canonical form and validation") {
  const Partition p = Partition::from_blocks({{3}, {2, 1}}, 3);
  CHECK(p.to_string() == "{{1,2},{3}}");
  CHECK(p.degree() == 3);
  CHECK(p.block_count() == 2);
  CHECK(p.block_of(2) == std::vector<int>{1, 2});
  CHECK(p.block_index_of(3) == 1);
  CHECK_THROWS_AS(p.block_of(0), std::out_of_range);
  CHECK_THROWS_AS(p.block_index_of(4), std::out_of_range);

  CHECK(Partition::discrete(3).to_string() == "{{1},{2},{3}}");
  CHECK(Partition::from_blocks({{1, 2, 3}}, 3).block_count() == 1);

  CHECK_THROWS_AS(Partition::from_blocks({{1, 2}, {2, 3}}, 3), std::invalid_argument);
  CHECK_THROWS_AS(Partition::from_blocks({{1, 2}}, 3), std::invalid_argument);
  CHECK_THROWS_AS(Partition::from_blocks({{1, 2}, {}}, 2), std::invalid_argument);
  CHECK_THROWS_AS(Partition::from_blocks({{1, 4}, {2, 3}}, 3), std::invalid_argument);
}

TEST_CASE("induced maps over the kernel partition") {
  const Partition kernel = kernel_partition(t({1, 1, 3}));
  REQUIRE(kernel.to_string() == "{{1,2},{3}}");

  const InducedMap e = induced_map(t({1, 1, 3}), kernel);
  CHECK(e.is_identity());
  CHECK(e.is_bijection());
  CHECK(e.targets() == std::vector<int>{0, 1});

  const InducedMap swap = induced_map(t({3, 3, 1}), kernel);
  CHECK(!swap.is_identity());
  CHECK(swap.is_bijection());
  CHECK(swap.targets() == std::vector<int>{1, 0});
  CHECK(swap.target(0) == 1);

  // Block composition follows the same g-first convention.
  CHECK(compose(swap, swap) == e);
  CHECK(compose(swap, e) == swap);
  CHECK_THROWS_AS(compose(e, induced_map(t({1, 2, 3}), Partition::discrete(3))),
                  std::invalid_argument);
}

TEST_CASE("ill-defined blocks are reported, not guessed") {
  const Partition p = Partition::from_blocks({{1, 2}, {3}}, 3);
  const InducedMap m = induced_map(t({1, 3, 2}), p);  // f scatters {1,2}
  CHECK(!m.well_defined());
  CHECK(m.ill_defined_blocks() == std::vector<int>{0});
  CHECK(!m.target(0).has_value());
  CHECK(m.target(1) == 0);
  CHECK(!m.is_injective());
  CHECK(!m.is_surjective());

  // Ill-definedness propagates through composition.
  const InducedMap still_bad = compose(induced_map(t({1, 1, 3}), p), m);
  CHECK(!still_bad.well_defined());

  CHECK_THROWS_AS(induced_map(t({1, 2}), p), std::invalid_argument);
  CHECK_THROWS_AS(InducedMap(p, {0}), std::invalid_argument);
  CHECK_THROWS_AS(InducedMap(p, {0, 2}), std::invalid_argument);
}

TEST_CASE("every map is well-defined over its own kernel") {
  for (int n = 1; n <= 4; ++n)
    for (const Transformation& f : all_transformations(n))
      REQUIRE(induced_map(f, kernel_partition(f)).well_defined());
}

TEST_CASE("idempotent iff induced identity") {
  for (int n = 1; n <= 4; ++n)
    for (const Transformation& f : all_transformations(n))
      REQUIRE(is_idempotent(f) == is_induced_identity(f));
}

TEST_CASE("membership criterion iff induced bijectivity") {
  for (int n = 1; n <= 4; ++n)
    for (const Transformation& f : all_transformations(n))
      REQUIRE(membership_condition(f) == is_induced_bijective(f));
}

TEST_CASE("induced identity and bijectivity spot checks") {
  CHECK(is_induced_identity(t({1, 1, 3})));
  CHECK(!is_induced_identity(t({3, 3, 1})));
  CHECK(is_induced_bijective(t({3, 3, 1})));
  CHECK(!is_induced_bijective(t({1, 1, 2})));
}
