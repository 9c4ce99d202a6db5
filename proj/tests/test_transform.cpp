#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <sstream>
#include <stdexcept>
#include <unordered_set>
#include <vector>

#include "ngg/enumerate.hpp"
#include "ngg/transform.hpp"

using ngg::all_transformations;
using ngg::compose;
using ngg::ImageSet;
using ngg::image;
using ngg::is_bijective;
using ngg::is_idempotent;
using ngg::kernel_partition;
using ngg::Partition;
using ngg::power;
using ngg::Transformation;

namespace {

Transformation t(std::vector<int> images) { return Transformation(images); }

// Pointwise oracle, no shared code with the kernel path.
Transformation naive_compose(const Transformation& f, const Transformation& g) {
  std::vector<int> images(static_cast<std::size_t>(f.degree()));
  for (int x = 1; x <= f.degree(); ++x)
    images[static_cast<std::size_t>(x - 1)] = f(g(x));
  return Transformation(images);
}

Transformation random_map(std::mt19937& rng, int degree) {
  std::uniform_int_distribution<int> dist(1, degree);
  std::vector<int> images(static_cast<std::size_t>(degree));
  for (int& v : images) v = dist(rng);
  return Transformation(images);
}

}  // namespace

TEST_CASE("construction and accessors") {
  const Transformation f = t({2, 1, 2});
  CHECK(f.degree() == 3);
  CHECK(f(1) == 2);
  CHECK(f(2) == 1);
  CHECK(f(3) == 2);
  CHECK(f.images() == std::vector<int>{2, 1, 2});
  CHECK_THROWS_AS(f(0), std::out_of_range);
  CHECK_THROWS_AS(f(4), std::out_of_range);

  CHECK(Transformation::identity(3) == t({1, 2, 3}));
  CHECK_THROWS_AS(t({}), std::invalid_argument);
  CHECK_THROWS_AS(t({0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(t({1, 3}), std::invalid_argument);
  CHECK_THROWS_AS(Transformation(std::vector<int>(256, 1)), std::invalid_argument);

  // Padded identity tail behind the live entries.
  CHECK(f.raw().size() == 16);
  for (std::size_t i = 3; i < 16; ++i) CHECK(f.raw()[i] == i);
}

TEST_CASE("composition applies the right factor first") {
  CHECK(compose(t({2, 1, 2}), t({2, 1, 2})) == t({1, 2, 1}));
  // fg means g first: here g collapses everything to 1, then f sends 1 to 3.
  const Transformation f = t({3, 2, 1});
  const Transformation g = t({1, 1, 1});
  CHECK(compose(f, g) == t({3, 3, 3}));
  CHECK(compose(g, f) == t({1, 1, 1}));
  CHECK_THROWS_AS(compose(t({1, 2}), t({1, 2, 3})), std::invalid_argument);
}

TEST_CASE("composition matches the pointwise oracle exhaustively at degree 3") {
  const auto maps = all_transformations(3);
  for (const Transformation& f : maps)
    for (const Transformation& g : maps)
      REQUIRE(compose(f, g) == naive_compose(f, g));
}

TEST_CASE("composition matches the pointwise oracle at large degrees") {
  std::mt19937 rng(97);
  for (int degree : {17, 40, 255}) {
    for (int trial = 0; trial < 25; ++trial) {
      const Transformation f = random_map(rng, degree);
      const Transformation g = random_map(rng, degree);
      REQUIRE(compose(f, g) == naive_compose(f, g));
    }
  }
}

TEST_CASE("composition is associative") {
  const auto maps = all_transformations(2);
  for (const Transformation& f : maps)
    for (const Transformation& g : maps)
      for (const Transformation& h : maps)
        REQUIRE(compose(compose(f, g), h) == compose(f, compose(g, h)));

  std::mt19937 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const Transformation f = random_map(rng, 9);
    const Transformation g = random_map(rng, 9);
    const Transformation h = random_map(rng, 9);
    REQUIRE(compose(compose(f, g), h) == compose(f, compose(g, h)));
  }
}

TEST_CASE("powers") {
  CHECK(power(t({3, 3, 1}), 1) == t({3, 3, 1}));
  CHECK(power(t({3, 3, 1}), 2) == t({1, 1, 3}));
  CHECK(power(t({3, 3, 1}), 3) == t({3, 3, 1}));
  CHECK_THROWS_AS(power(t({1, 2}), 0), std::invalid_argument);

  std::mt19937 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    const Transformation f = random_map(rng, 6);
    const int a = 1 + trial % 4, b = 1 + trial % 3;
    REQUIRE(power(f, a + b) == compose(power(f, a), power(f, b)));
  }
}

TEST_CASE("image, kernel, idempotence, bijectivity") {
  CHECK(image(t({3, 3, 1})) == ImageSet({1, 3}));
  CHECK(image(t({3, 3, 1})).to_string() == "{1,3}");
  CHECK(image(t({1, 1, 1})).size() == 1);
  CHECK(image(t({2, 3, 1})).size() == 3);

  CHECK(kernel_partition(t({1, 1, 3})).to_string() == "{{1,2},{3}}");
  CHECK(kernel_partition(t({1, 2, 3})).to_string() == "{{1},{2},{3}}");
  CHECK(kernel_partition(t({2, 2, 2})).to_string() == "{{1,2,3}}");

  CHECK(is_idempotent(t({1, 1, 3})));
  CHECK(!is_idempotent(t({3, 3, 1})));
  CHECK(is_bijective(t({2, 3, 1})));
  CHECK(!is_bijective(t({1, 1, 3})));

  // Kernel blocks are exactly the fibers.
  const Transformation f = t({2, 1, 2, 2});
  const Partition fibers = kernel_partition(f);
  const auto& blocks = fibers.blocks();
  REQUIRE(blocks.size() == 2);
  CHECK(blocks[0] == std::vector<int>{1, 3, 4});
  CHECK(blocks[1] == std::vector<int>{2});
}

TEST_CASE("text form round-trips") {
  CHECK(t({1, 1, 3}).to_string() == "(1,1,3)");
  CHECK(Transformation::parse("(1,1,3)") == t({1, 1, 3}));
  CHECK(Transformation::parse(" ( 1 , 1 , 3 ) ") == t({1, 1, 3}));
  for (const Transformation& f : all_transformations(3))
    REQUIRE(Transformation::parse(f.to_string()) == f);

  std::ostringstream os;
  os << t({2, 1, 2});
  CHECK(os.str() == "(2,1,2)");

  for (const char* bad : {"", "()", "(1,2", "1,2)", "(1,,2)", "(a)", "(0)",
                          "(4,1,2)", "(1,2),(2,1)", "(1 2)"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(Transformation::parse(bad), std::invalid_argument);
  }
}

TEST_CASE("ordering and hashing") {
  CHECK(t({1, 1, 3}) < t({1, 2, 1}));
  CHECK(t({1, 2, 1}) < t({2, 1, 2}));
  CHECK(t({1, 2}) < t({1, 1, 1}));  // degree dominates

  std::unordered_set<Transformation> set;
  for (const Transformation& f : all_transformations(3)) set.insert(f);
  CHECK(set.size() == 27);
  for (const Transformation& f : all_transformations(3)) set.insert(f);
  CHECK(set.size() == 27);
}

TEST_CASE("identity laws") {
  std::mt19937 rng(3);
  for (int degree : {1, 5, 31, 255}) {
    const Transformation id = Transformation::identity(degree);
    const Transformation f = random_map(rng, degree);
    CHECK(compose(f, id) == f);
    CHECK(compose(id, f) == f);
    CHECK(is_idempotent(id));
    CHECK(is_bijective(id));
  }
}
