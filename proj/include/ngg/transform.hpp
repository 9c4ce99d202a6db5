#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ngg/partition.hpp"

namespace ngg {

/// A total map {1..n} -> {1..n} in one-line image notation: entry x holds
/// f(x). Not necessarily injective or surjective. Values are immutable;
/// all operations on them are pure.
///
/// All public I/O is 1-indexed to match the tuple notation. Internally the
/// images live in a zero-indexed byte buffer padded to a kernel slot width
/// (see ngg/kernels.hpp), which is why the degree is capped at 255.
class Transformation {
 public:
  static constexpr int max_degree = 255;

  /// Degree-0 map; placeholder state for report structs.
  Transformation() = default;

  /// From 1-indexed images; throws std::invalid_argument if empty, longer
  /// than max_degree, or any entry falls outside {1..n}.
  explicit Transformation(const std::vector<int>& images);

  static Transformation identity(int degree);

  /// From the internal zero-indexed representation (no padding expected).
  static Transformation from_zero_indexed(std::span<const std::uint8_t> images);

  int degree() const noexcept { return degree_; }

  /// f(x), 1-indexed. Throws std::out_of_range unless 1 <= x <= degree.
  int operator()(int x) const;

  /// The 1-indexed image tuple.
  std::vector<int> images() const;

  /// Zero-indexed, identity-padded to slot_width(degree()); kernel input.
  std::span<const std::uint8_t> raw() const noexcept { return buf_; }

  bool operator==(const Transformation& other) const noexcept {
    return degree_ == other.degree_ && buf_ == other.buf_;
  }

  /// Degree first, then lexicographic on the image tuple.
  std::strong_ordering operator<=>(const Transformation& other) const noexcept;

  /// Exactly "(a1,a2,...,an)" with no spaces; parse() round-trips it.
  std::string to_string() const;

  /// Accepts the text form with optional whitespace anywhere.
  /// Throws std::invalid_argument on malformed input.
  static Transformation parse(std::string_view text);

 private:
  friend Transformation compose(const Transformation& f, const Transformation& g);

  int degree_ = 0;
  std::vector<std::uint8_t> buf_;
};

std::ostream& operator<<(std::ostream& os, const Transformation& f);

/// Sorted image point set of a transformation; value type for Im(f).
class ImageSet {
 public:
  ImageSet() = default;
  explicit ImageSet(std::vector<int> sorted_points);

  const std::vector<int>& points() const noexcept { return points_; }
  int size() const noexcept { return static_cast<int>(points_.size()); }
  bool contains(int x) const;

  bool operator==(const ImageSet&) const = default;

  std::string to_string() const;  // e.g. "{1,3}"

 private:
  std::vector<int> points_;
};

/// (f g)(x) = f(g(x)): g applies first. Degrees must match.
Transformation compose(const Transformation& f, const Transformation& g);

/// f composed with itself k times, k >= 1.
Transformation power(const Transformation& f, int k);

ImageSet image(const Transformation& f);

/// The partition of {1..n} into fibers of f: x ~ y iff f(x) = f(y).
Partition kernel_partition(const Transformation& f);

/// f composed with itself equals f.
bool is_idempotent(const Transformation& f);

/// |Im(f)| = n.
bool is_bijective(const Transformation& f);

}  // namespace ngg

template <>
struct std::hash<ngg::Transformation> {
  std::size_t operator()(const ngg::Transformation& f) const noexcept {
    // FNV-1a over the padded buffer; degrees differ => widths differ.
    std::size_t h = 1469598103934665603ull;
    for (std::uint8_t b : f.raw()) {
      h = (h ^ b) * 1099511628211ull;
    }
    return h ^ static_cast<std::size_t>(f.degree());
  }
};
