#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace lppqs {

/// Integer partition stored without trailing zeros.
///
/// Parts are 1-based through part(i); indices past length() read as 0, so
/// (2,1) and (2,1,0) compare equal.
class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<int> parts);
  explicit Partition(std::vector<int> parts);

  /// Builds a partition from a possibly unsorted or zero-padded sequence.
  /// Throws DomainError on negative or increasing entries.
  static Partition from_parts(std::span<const int> parts);

  int part(std::size_t i) const noexcept {
    return (i >= 1 && i <= parts_.size()) ? parts_[i - 1] : 0;
  }
  std::size_t length() const noexcept { return parts_.size(); }
  int size() const noexcept;
  bool empty() const noexcept { return parts_.empty(); }
  const std::vector<int>& parts() const noexcept { return parts_; }

  /// Parts padded with zeros to exactly `len` entries (len >= length()).
  std::vector<int> padded(std::size_t len) const;

  bool contains(const Partition& other) const noexcept;
  bool all_parts_even() const noexcept;

  /// "(4,1)" / "()"
  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

/// Rectangle (value^rows), e.g. v^n.
Partition rectangle(int value, std::size_t rows);

/// mu ≺ lambda: lambda_i >= mu_i >= lambda_{i+1} for all i.
/// With dual=true: mu ⊆ lambda and lambda_i - mu_i ∈ {0,1}.
bool interlaces(const Partition& mu, const Partition& lambda, bool dual = false) noexcept;

/// All partitions fitting in a rows × max_part box, in colex order
/// (compare (λ_rows, ..., λ_1) lexicographically).
std::vector<Partition> partitions_in_box(std::size_t rows, int max_part);

/// All mu with mu ≺ lambda and length(mu) <= max_length, sorted ascending.
std::vector<Partition> interlacing_below(const Partition& lambda, std::size_t max_length);

}  // namespace lppqs
