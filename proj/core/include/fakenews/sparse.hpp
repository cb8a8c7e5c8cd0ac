#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace fakenews {

struct SparseEntry {
  std::size_t index = 0;
  double value = 0.0;

  friend bool operator==(const SparseEntry&, const SparseEntry&) = default;
};

// Entries sorted strictly ascending by index, no stored zeros.
class SparseVector {
 public:
  SparseVector() = default;
  // Throws ConfigError if entries are unsorted, duplicated or contain zeros.
  explicit SparseVector(std::vector<SparseEntry> entries);

  const std::vector<SparseEntry>& entries() const noexcept { return entries_; }
  std::size_t nnz() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }
  auto begin() const noexcept { return entries_.begin(); }
  auto end() const noexcept { return entries_.end(); }

  // One past the largest stored index (0 when empty).
  std::size_t min_dimension() const noexcept {
    return entries_.empty() ? 0 : entries_.back().index + 1;
  }

  double squared_norm() const noexcept;
  double sum() const noexcept;
  bool all_finite() const noexcept;

  double dot(std::span<const double> dense) const noexcept;
  // dense += scale * this
  void axpy_into(double scale, std::span<double> dense) const noexcept;

  friend bool operator==(const SparseVector&, const SparseVector&) = default;

 private:
  std::vector<SparseEntry> entries_;
};

}  // namespace fakenews
