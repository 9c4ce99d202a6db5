#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <array>
#include <cstdint>
#include <random>
#include <vector>

#include "ngg/kernels.hpp"

using ngg::kernel::available;
using ngg::kernel::by_name;
using ngg::kernel::Kernels;
using ngg::kernel::slot_width;

namespace {

// Independent reference: plain loop over the padded width.
std::vector<std::uint8_t> naive_compose(const std::vector<std::uint8_t>& f,
                                        const std::vector<std::uint8_t>& g) {
  std::vector<std::uint8_t> dst(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) dst[i] = f[g[i]];
  return dst;
}

std::vector<std::uint8_t> padded(const std::vector<std::uint8_t>& images) {
  const std::size_t width = slot_width(images.size());
  std::vector<std::uint8_t> buf(width);
  for (std::size_t i = 0; i < width; ++i)
    buf[i] = i < images.size() ? images[i] : static_cast<std::uint8_t>(i);
  return buf;
}

// All degree-n maps as padded buffers, lexicographic.
std::vector<std::vector<std::uint8_t>> all_padded(int n) {
  std::vector<std::vector<std::uint8_t>> out;
  std::vector<std::uint8_t> current(static_cast<std::size_t>(n), 0);
  for (;;) {
    out.push_back(padded(current));
    int pos = n - 1;
    while (pos >= 0 && current[static_cast<std::size_t>(pos)] ==
                           static_cast<std::uint8_t>(n - 1)) {
      current[static_cast<std::size_t>(pos)] = 0;
      --pos;
    }
    if (pos < 0) break;
    ++current[static_cast<std::size_t>(pos)];
  }
  return out;
}

std::vector<std::uint8_t> random_map(std::mt19937& rng, std::size_t degree) {
  std::uniform_int_distribution<int> dist(0, static_cast<int>(degree) - 1);
  std::vector<std::uint8_t> images(degree);
  for (auto& b : images) b = static_cast<std::uint8_t>(dist(rng));
  return padded(images);
}

}  // namespace

TEST_CASE("backend discovery") {
  REQUIRE(!available().empty());
  CHECK(available().front()->name == "scalar");
  CHECK(by_name("scalar") == available().front());
  CHECK(by_name("no-such-backend") == nullptr);
  for (const Kernels* k : available()) {
    CHECK(by_name(k->name) == k);
    CHECK(k->compose != nullptr);
    CHECK(k->idempotent_scan != nullptr);
  }
  // active() is one of the usable backends.
  const Kernels& chosen = ngg::kernel::active();
  bool found = false;
  for (const Kernels* k : available()) found = found || k == &chosen;
  CHECK(found);
}

TEST_CASE("all backends match the naive loop on every small pair") {
  for (int n = 1; n <= 4; ++n) {
    const auto maps = all_padded(n);
    const std::size_t width = slot_width(static_cast<std::size_t>(n));
    std::vector<std::uint8_t> dst(width);
    for (const Kernels* k : available()) {
      CAPTURE(k->name);
      for (const auto& f : maps) {
        for (const auto& g : maps) {
          k->compose(dst.data(), f.data(), g.data(), width);
          REQUIRE(dst == naive_compose(f, g));
        }
      }
    }
  }
}

TEST_CASE("all backends match the naive loop across widths") {
  std::mt19937 rng(20240817);
  for (std::size_t degree : {std::size_t{5}, std::size_t{16}, std::size_t{17},
                             std::size_t{25}, std::size_t{31}, std::size_t{32},
                             std::size_t{33}, std::size_t{100}, std::size_t{255}}) {
    const std::size_t width = slot_width(degree);
    std::vector<std::uint8_t> dst(width);
    for (int trial = 0; trial < 40; ++trial) {
      const auto f = random_map(rng, degree);
      const auto g = random_map(rng, degree);
      const auto expected = naive_compose(f, g);
      for (const Kernels* k : available()) {
        INFO("backend " << k->name << ", degree " << degree << ", trial " << trial);
        k->compose(dst.data(), f.data(), g.data(), width);
        REQUIRE(dst == expected);
        // Identity tails must survive composition.
        for (std::size_t i = degree; i < width; ++i)
          REQUIRE(dst[i] == static_cast<std::uint8_t>(i));
      }
    }
  }
}

TEST_CASE("idempotent scans agree with the definition") {
  for (int n : {3, 4, 5}) {
    const auto maps = all_padded(n);
    std::vector<std::uint8_t> slots;
    slots.reserve(maps.size() * 16);
    for (const auto& m : maps) slots.insert(slots.end(), m.begin(), m.end());

    std::vector<std::uint8_t> expected(maps.size());
    for (std::size_t s = 0; s < maps.size(); ++s) {
      const auto& m = maps[s];
      bool idem = true;
      for (int i = 0; i < 16; ++i) idem = idem && m[m[static_cast<std::size_t>(i)]] ==
                                                      m[static_cast<std::size_t>(i)];
      expected[s] = idem ? 1 : 0;
    }

    for (const Kernels* k : available()) {
      INFO("backend " << k->name << ", n " << n);
      std::vector<std::uint8_t> flags(maps.size(), 0xCC);
      k->idempotent_scan(flags.data(), slots.data(), maps.size());
      REQUIRE(flags == expected);
    }
  }
}

TEST_CASE("idempotent scans handle ragged counts") {
  const auto maps = all_padded(3);  // 27 slots: odd, not a multiple of 2 or 4
  std::vector<std::uint8_t> slots;
  for (const auto& m : maps) slots.insert(slots.end(), m.begin(), m.end());
  const auto* reference = available().front();
  for (std::size_t count : {std::size_t{1}, std::size_t{2}, std::size_t{3},
                            std::size_t{5}, std::size_t{8}, std::size_t{27}}) {
    std::vector<std::uint8_t> want(count, 0xCC);
    reference->idempotent_scan(want.data(), slots.data(), count);
    for (const Kernels* k : available()) {
      INFO("backend " << k->name << ", count " << count);
      std::vector<std::uint8_t> got(count, 0x55);
      k->idempotent_scan(got.data(), slots.data(), count);
      REQUIRE(got == want);
    }
  }
}
