#include "ngg/enumerate.hpp"

#include <algorithm>
#include <cstring>
#include <set>
#include <stdexcept>
#include <string>

#include "ngg/kernels.hpp"

namespace ngg {
namespace {

long pow_ll(int base, int exp) {
  long r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

void check_stream_degree(int n) {
  if (n < 1 || n > kMaxStreamDegree) {
    throw std::invalid_argument("degree " + std::to_string(n) +
                                " outside exhaustive range [1, " +
                                std::to_string(kMaxStreamDegree) + "]");
  }
}

// All n^n maps as consecutive 16-byte slots (zero-indexed images,
// identity-padded tails), in lexicographic order of image tuples. This is
// the layout the idempotent-scan kernels operate on.
std::vector<std::uint8_t> packed_all_maps(int n) {
  const long total = pow_ll(n, n);
  std::vector<std::uint8_t> slots(static_cast<std::size_t>(total) * 16);
  std::uint8_t current[16];
  for (int i = 0; i < 16; ++i)
    current[i] = static_cast<std::uint8_t>(i < n ? 0 : i);
  for (long s = 0; s < total; ++s) {
    std::memcpy(slots.data() + s * 16, current, 16);
    // Odometer increment: rightmost image first, so tuple order stays
    // lexicographic.
    for (int pos = n - 1; pos >= 0; --pos) {
      if (++current[pos] < n) break;
      current[pos] = 0;
    }
  }
  return slots;
}

long factorial(int k) {
  long r = 1;
  for (int i = 2; i <= k; ++i) r *= i;
  return r;
}

// Composition table of a closed set, as indices into `elems`.
std::vector<std::vector<int>> index_table(const std::vector<Transformation>& elems) {
  const int m = static_cast<int>(elems.size());
  std::vector<std::vector<int>> table(m, std::vector<int>(m, -1));
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      const Transformation p = compose(elems[i], elems[j]);
      const auto it = std::lower_bound(elems.begin(), elems.end(), p);
      if (it == elems.end() || *it != p)
        throw std::logic_error("index_table: set not closed");
      table[i][j] = static_cast<int>(it - elems.begin());
    }
  }
  return table;
}

}  // namespace

std::vector<Transformation> all_transformations(int n) {
  check_stream_degree(n);
  const auto slots = packed_all_maps(n);
  const long total = pow_ll(n, n);
  std::vector<Transformation> out;
  out.reserve(static_cast<std::size_t>(total));
  for (long s = 0; s < total; ++s) {
    out.push_back(Transformation::from_zero_indexed(
        {slots.data() + s * 16, static_cast<std::size_t>(n)}));
  }
  return out;
}

std::vector<Transformation> idempotents(int n) {
  check_stream_degree(n);
  const auto slots = packed_all_maps(n);
  const long total = pow_ll(n, n);
  std::vector<std::uint8_t> flags(static_cast<std::size_t>(total));
  kernel::active().idempotent_scan(flags.data(), slots.data(),
                                   static_cast<std::size_t>(total));
  std::vector<Transformation> out;
  for (long s = 0; s < total; ++s) {
    if (flags[static_cast<std::size_t>(s)]) {
      out.push_back(Transformation::from_zero_indexed(
          {slots.data() + s * 16, static_cast<std::size_t>(n)}));
    }
  }
  return out;
}

std::vector<Transformation> maximal_group_at(const Transformation& e) {
  if (!is_idempotent(e))
    throw std::invalid_argument("maximal_group_at: map is not idempotent");
  const int n = e.degree();
  check_stream_degree(n);

  const Partition ker = kernel_partition(e);
  const ImageSet img = image(e);
  std::vector<Transformation> members;
  for (const Transformation& f : all_transformations(n)) {
    if (image(f) == img && kernel_partition(f) == ker) members.push_back(f);
  }

  // Certified, not assumed: H(e) must be a group with identity e and order
  // rank(e)!.
  const NGCertificate cert = verify_group(members);
  const long expected = factorial(static_cast<int>(img.size()));
  if (!cert.is_group || cert.identity != e ||
      static_cast<long>(cert.order) != expected) {
    throw std::logic_error("maximal_group_at: certification failed");
  }
  return cert.elements;
}

EnumerationReport enumerate_groups_of_order(int n, int k) {
  if (n < 1 || n > kMaxGroupEnumDegree) {
    throw std::invalid_argument("group enumeration supports degrees 1 to " +
                                std::to_string(kMaxGroupEnumDegree));
  }
  if (k < 1) throw std::invalid_argument("group order must be positive");

  EnumerationReport report;
  report.degree = n;
  report.order = k;
  report.idempotents = idempotents(n);

  std::set<std::vector<Transformation>> seen;
  for (const Transformation& e : report.idempotents) {
    const std::vector<Transformation> h = maximal_group_at(e);
    const int m = static_cast<int>(h.size());
    if (k > m || m % k != 0) continue;  // Lagrange

    const auto table = index_table(h);
    const int e_idx = static_cast<int>(
        std::lower_bound(h.begin(), h.end(), e) - h.begin());

    // Every group inside H(e) contains e (its identity must be an
    // idempotent, and e is the only one in H). So search (k-1)-subsets of
    // H \ {e} and adjoin e.
    std::vector<int> pool;
    for (int i = 0; i < m; ++i)
      if (i != e_idx) pool.push_back(i);

    std::vector<int> pick(static_cast<std::size_t>(k - 1));
    for (int i = 0; i < k - 1; ++i) pick[static_cast<std::size_t>(i)] = i;
    const int pool_size = static_cast<int>(pool.size());

    while (true) {
      std::uint32_t mask = 1u << e_idx;
      int chosen[25];
      chosen[0] = e_idx;
      for (int i = 0; i < k - 1; ++i) {
        chosen[i + 1] = pool[static_cast<std::size_t>(pick[static_cast<std::size_t>(i)])];
        mask |= 1u << chosen[i + 1];
      }

      bool ok = true;
      for (int a = 0; a < k && ok; ++a) {
        for (int b = 0; b < k; ++b) {
          if (!(mask >> table[chosen[a]][chosen[b]] & 1u)) {
            ok = false;
            break;
          }
        }
      }
      if (ok) {
        // Inverses relative to e.
        for (int a = 0; a < k && ok; ++a) {
          bool has = false;
          for (int b = 0; b < k; ++b) {
            if (table[chosen[a]][chosen[b]] == e_idx &&
                table[chosen[b]][chosen[a]] == e_idx) {
              has = true;
              break;
            }
          }
          ok = has;
        }
      }
      if (ok) {
        std::vector<Transformation> candidate;
        candidate.reserve(static_cast<std::size_t>(k));
        for (int a = 0; a < k; ++a) candidate.push_back(h[chosen[a]]);
        std::sort(candidate.begin(), candidate.end());
        seen.insert(std::move(candidate));
      }

      // Next (k-1)-combination of pool indices.
      int i = k - 2;
      while (i >= 0 && pick[static_cast<std::size_t>(i)] == pool_size - (k - 1) + i) --i;
      if (i < 0) break;
      ++pick[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < k - 1; ++j)
        pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
    }
  }

  for (const std::vector<Transformation>& elems : seen) {
    NGCertificate cert = verify_group(elems);
    if (!cert.is_group)
      throw std::logic_error("enumerate_groups_of_order: candidate failed certification");
    if (cert.is_symmetric_subset) ++report.symmetric_count;
    report.groups.push_back(std::move(cert));
  }
  report.count = static_cast<int>(report.groups.size());
  return report;
}

std::vector<std::vector<Transformation>> enumerate_groups_brute_force(int n, int k) {
  if (n < 1 || n > kMaxBruteForceDegree) {
    throw std::invalid_argument("direct subset search supports degrees 1 to " +
                                std::to_string(kMaxBruteForceDegree));
  }
  if (k < 1) throw std::invalid_argument("group order must be positive");

  const std::vector<Transformation> all = all_transformations(n);
  const int total = static_cast<int>(all.size());  // n^n <= 27
  std::vector<std::vector<Transformation>> found;
  if (k > total) return found;

  const auto table = index_table(all);

  std::vector<int> pick(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) pick[static_cast<std::size_t>(i)] = i;

  while (true) {
    std::uint32_t mask = 0;
    for (int i = 0; i < k; ++i) mask |= 1u << pick[static_cast<std::size_t>(i)];

    bool closed = true;
    for (int a = 0; a < k && closed; ++a) {
      for (int b = 0; b < k; ++b) {
        if (!(mask >> table[pick[static_cast<std::size_t>(a)]][pick[static_cast<std::size_t>(b)]] & 1u)) {
          closed = false;
          break;
        }
      }
    }

    if (closed) {
      int identity = -1;
      for (int a = 0; a < k && identity < 0; ++a) {
        bool is_id = true;
        for (int b = 0; b < k; ++b) {
          const int ia = pick[static_cast<std::size_t>(a)];
          const int ib = pick[static_cast<std::size_t>(b)];
          if (table[ia][ib] != ib || table[ib][ia] != ib) {
            is_id = false;
            break;
          }
        }
        if (is_id) identity = pick[static_cast<std::size_t>(a)];
      }

      bool is_group = identity >= 0;
      for (int a = 0; a < k && is_group; ++a) {
        bool has = false;
        for (int b = 0; b < k; ++b) {
          const int ia = pick[static_cast<std::size_t>(a)];
          const int ib = pick[static_cast<std::size_t>(b)];
          if (table[ia][ib] == identity && table[ib][ia] == identity) {
            has = true;
            break;
          }
        }
        is_group = has;
      }

      if (is_group) {
        std::vector<Transformation> elems;
        elems.reserve(static_cast<std::size_t>(k));
        for (int i = 0; i < k; ++i) elems.push_back(all[pick[static_cast<std::size_t>(i)]]);
        found.push_back(std::move(elems));  // picks ascend, so already sorted
      }
    }

    int i = k - 1;
    while (i >= 0 && pick[static_cast<std::size_t>(i)] == total - k + i) --i;
    if (i < 0) break;
    ++pick[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j)
      pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
  }

  std::sort(found.begin(), found.end());
  return found;
}

}  // namespace ngg
