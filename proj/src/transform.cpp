#include "ngg/transform.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <ostream>
#include <stdexcept>

#include "ngg/kernels.hpp"

namespace ngg {
namespace {

std::vector<std::uint8_t> padded_buffer(int degree) {
  std::vector<std::uint8_t> buf(kernel::slot_width(static_cast<std::size_t>(degree)));
  for (std::size_t i = 0; i < buf.size(); ++i) {
    buf[i] = static_cast<std::uint8_t>(i);
  }
  return buf;
}

void check_same_degree(const Transformation& f, const Transformation& g) {
  if (f.degree() != g.degree()) {
    throw std::invalid_argument("degree mismatch: " + std::to_string(f.degree()) +
                                " vs " + std::to_string(g.degree()));
  }
}

}  // namespace

Transformation::Transformation(const std::vector<int>& images) {
  if (images.empty()) {
    throw std::invalid_argument("transformation must have positive degree");
  }
  if (images.size() > static_cast<std::size_t>(max_degree)) {
    throw std::invalid_argument("degree cap exceeded: " + std::to_string(images.size()) +
                                " > " + std::to_string(max_degree));
  }
  degree_ = static_cast<int>(images.size());
  buf_ = padded_buffer(degree_);
  for (int x = 0; x < degree_; ++x) {
    int v = images[static_cast<std::size_t>(x)];
    if (v < 1 || v > degree_) {
      throw std::invalid_argument("image value " + std::to_string(v) +
                                  " outside {1.." + std::to_string(degree_) + "}");
    }
    buf_[static_cast<std::size_t>(x)] = static_cast<std::uint8_t>(v - 1);
  }
}

Transformation Transformation::identity(int degree) {
  if (degree < 1 || degree > max_degree) {
    throw std::invalid_argument("degree out of range");
  }
  Transformation f;
  f.degree_ = degree;
  f.buf_ = padded_buffer(degree);
  return f;
}

Transformation Transformation::from_zero_indexed(std::span<const std::uint8_t> images) {
  if (images.empty() || images.size() > static_cast<std::size_t>(max_degree)) {
    throw std::invalid_argument("degree out of range");
  }
  Transformation f;
  f.degree_ = static_cast<int>(images.size());
  f.buf_ = padded_buffer(f.degree_);
  for (std::size_t x = 0; x < images.size(); ++x) {
    if (images[x] >= images.size()) {
      throw std::invalid_argument("image value out of range");
    }
    f.buf_[x] = images[x];
  }
  return f;
}

int Transformation::operator()(int x) const {
  if (x < 1 || x > degree_) {
    throw std::out_of_range("point out of range for transformation");
  }
  return buf_[static_cast<std::size_t>(x - 1)] + 1;
}

std::vector<int> Transformation::images() const {
  std::vector<int> out(static_cast<std::size_t>(degree_));
  for (int x = 0; x < degree_; ++x) {
    out[static_cast<std::size_t>(x)] = buf_[static_cast<std::size_t>(x)] + 1;
  }
  return out;
}

std::strong_ordering Transformation::operator<=>(const Transformation& other) const noexcept {
  if (auto c = degree_ <=> other.degree_; c != 0) {
    return c;
  }
  // Same degree implies same padded width and identical tails.
  return std::lexicographical_compare_three_way(buf_.begin(), buf_.end(),
                                                other.buf_.begin(), other.buf_.end());
}

std::string Transformation::to_string() const {
  std::string out = "(";
  for (int x = 0; x < degree_; ++x) {
    if (x > 0) {
      out += ',';
    }
    out += std::to_string(buf_[static_cast<std::size_t>(x)] + 1);
  }
  out += ')';
  return out;
}

Transformation Transformation::parse(std::string_view text) {
  std::string compact;
  compact.reserve(text.size());
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) {
      compact += c;
    }
  }
  if (compact.size() < 3 || compact.front() != '(' || compact.back() != ')') {
    throw std::invalid_argument("expected transformation literal like (1,2,3), got '" +
                                std::string(text) + "'");
  }
  std::vector<int> images;
  const char* p = compact.data() + 1;
  const char* end = compact.data() + compact.size() - 1;
  while (p < end) {
    int value = 0;
    auto [next, ec] = std::from_chars(p, end, value);
    if (ec != std::errc{} || next == p) {
      throw std::invalid_argument("bad integer in transformation literal '" +
                                  std::string(text) + "'");
    }
    images.push_back(value);
    p = next;
    if (p < end) {
      if (*p != ',') {
        throw std::invalid_argument("expected ',' in transformation literal '" +
                                    std::string(text) + "'");
      }
      ++p;
      if (p == end) {
        throw std::invalid_argument("trailing ',' in transformation literal '" +
                                    std::string(text) + "'");
      }
    }
  }
  return Transformation(images);
}

std::ostream& operator<<(std::ostream& os, const Transformation& f) {
  return os << f.to_string();
}

ImageSet::ImageSet(std::vector<int> sorted_points) : points_(std::move(sorted_points)) {
  if (!std::is_sorted(points_.begin(), points_.end()) ||
      std::adjacent_find(points_.begin(), points_.end()) != points_.end()) {
    throw std::invalid_argument("image set must be strictly ascending");
  }
}

bool ImageSet::contains(int x) const {
  return std::binary_search(points_.begin(), points_.end(), x);
}

std::string ImageSet::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (i > 0) {
      out += ',';
    }
    out += std::to_string(points_[i]);
  }
  out += '}';
  return out;
}

Transformation compose(const Transformation& f, const Transformation& g) {
  check_same_degree(f, g);
  Transformation out;
  out.degree_ = f.degree_;
  out.buf_.resize(f.buf_.size());
  kernel::active().compose(out.buf_.data(), f.buf_.data(), g.buf_.data(), f.buf_.size());
  return out;
}

Transformation power(const Transformation& f, int k) {
  if (k < 1) {
    throw std::invalid_argument("power requires k >= 1");
  }
  Transformation acc = f;
  for (int i = 1; i < k; ++i) {
    acc = compose(acc, f);
  }
  return acc;
}

ImageSet image(const Transformation& f) {
  std::vector<bool> seen(static_cast<std::size_t>(f.degree()), false);
  for (int x = 0; x < f.degree(); ++x) {
    seen[f.raw()[static_cast<std::size_t>(x)]] = true;
  }
  std::vector<int> points;
  for (int v = 0; v < f.degree(); ++v) {
    if (seen[static_cast<std::size_t>(v)]) {
      points.push_back(v + 1);
    }
  }
  return ImageSet(std::move(points));
}

Partition kernel_partition(const Transformation& f) {
  std::vector<std::vector<int>> fibers(static_cast<std::size_t>(f.degree()));
  for (int x = 0; x < f.degree(); ++x) {
    fibers[f.raw()[static_cast<std::size_t>(x)]].push_back(x + 1);
  }
  std::vector<std::vector<int>> blocks;
  for (auto& fiber : fibers) {
    if (!fiber.empty()) {
      blocks.push_back(std::move(fiber));
    }
  }
  return Partition::from_blocks(std::move(blocks), f.degree());
}

bool is_idempotent(const Transformation& f) {
  return power(f, 2) == f;
}

bool is_bijective(const Transformation& f) {
  return image(f).size() == f.degree();
}

}  // namespace ngg
