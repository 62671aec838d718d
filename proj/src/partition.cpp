#include "lppqs/partition.hpp"

#include <algorithm>
#include <numeric>

#include "lppqs/errors.hpp"

namespace lppqs {

namespace {

void strip_zeros(std::vector<int>& v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
}

}  // namespace

Partition::Partition(std::initializer_list<int> parts)
    : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  strip_zeros(parts_);
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0) throw DomainError("partition has a negative part");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw DomainError("partition parts must be weakly decreasing: " + to_string());
  }
}

Partition Partition::from_parts(std::span<const int> parts) {
  std::vector<int> v(parts.begin(), parts.end());
  if (std::any_of(v.begin(), v.end(), [](int p) { return p < 0; }))
    throw DomainError("partition has a negative part");
  std::sort(v.begin(), v.end(), std::greater<>());
  return Partition(std::move(v));
}

int Partition::size() const noexcept {
  return std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::vector<int> Partition::padded(std::size_t len) const {
  std::vector<int> v = parts_;
  v.resize(std::max(len, parts_.size()), 0);
  return v;
}

bool Partition::contains(const Partition& other) const noexcept {
  if (other.length() > length()) return false;
  for (std::size_t i = 1; i <= other.length(); ++i)
    if (other.part(i) > part(i)) return false;
  return true;
}

bool Partition::all_parts_even() const noexcept {
  return std::all_of(parts_.begin(), parts_.end(), [](int p) { return p % 2 == 0; });
}

std::string Partition::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts_[i]);
  }
  return s + ")";
}

Partition rectangle(int value, std::size_t rows) {
  return Partition(std::vector<int>(value > 0 ? rows : 0, value));
}

bool interlaces(const Partition& mu, const Partition& lambda, bool dual) noexcept {
  const std::size_t len = std::max(mu.length(), lambda.length()) + 1;
  for (std::size_t i = 1; i <= len; ++i) {
    const int l = lambda.part(i), m = mu.part(i);
    if (dual) {
      if (l - m != 0 && l - m != 1) return false;
    } else if (!(l >= m && m >= lambda.part(i + 1))) {
      return false;
    }
  }
  return true;
}

std::vector<Partition> partitions_in_box(std::size_t rows, int max_part) {
  std::vector<Partition> out;
  std::vector<int> cur(rows, 0);
  // cur is built from the last row upward so that emission order is colex.
  auto rec = [&](auto&& self, std::size_t idx, int lo) -> void {
    if (idx == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int v = lo; v <= max_part; ++v) {
      cur[idx - 1] = v;
      self(self, idx - 1, v);
    }
  };
  if (rows == 0 || max_part < 0) {
    out.emplace_back();
    return out;
  }
  rec(rec, rows, 0);
  return out;
}

std::vector<Partition> interlacing_below(const Partition& lambda, std::size_t max_length) {
  std::vector<Partition> out;
  if (lambda.length() > max_length + 1) return out;
  const std::size_t len = std::min(max_length, lambda.length());
  std::vector<int> cur(len, 0);
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == len) {
      out.emplace_back(cur);
      return;
    }
    for (int v = lambda.part(i + 2); v <= lambda.part(i + 1); ++v) {
      cur[i] = v;
      self(self, i + 1);
    }
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace lppqs
