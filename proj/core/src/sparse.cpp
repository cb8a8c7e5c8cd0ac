#include "fakenews/sparse.hpp"

#include <cmath>

#include "fakenews/error.hpp"

namespace fakenews {

SparseVector::SparseVector(std::vector<SparseEntry> entries) : entries_(std::move(entries)) {
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i].value == 0.0) throw ConfigError("sparse vector stores an explicit zero");
    if (i > 0 && entries_[i].index <= entries_[i - 1].index) {
      throw ConfigError("sparse vector indices must be strictly ascending");
    }
  }
}

double SparseVector::squared_norm() const noexcept {
  double s = 0.0;
  for (const auto& e : entries_) s += e.value * e.value;
  return s;
}

double SparseVector::sum() const noexcept {
  double s = 0.0;
  for (const auto& e : entries_) s += e.value;
  return s;
}

bool SparseVector::all_finite() const noexcept {
  for (const auto& e : entries_) {
    if (!std::isfinite(e.value)) return false;
  }
  return true;
}

double SparseVector::dot(std::span<const double> dense) const noexcept {
  double s = 0.0;
  for (const auto& e : entries_) s += e.value * dense[e.index];
  return s;
}

void SparseVector::axpy_into(double scale, std::span<double> dense) const noexcept {
  for (const auto& e : entries_) dense[e.index] += scale * e.value;
}

}  // namespace fakenews
