// Copyright 2026 The BeliefRisk Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef BELIEFRISK_FRAME_H_
#define BELIEFRISK_FRAME_H_

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include "absl/strings/string_view.h"
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"

namespace beliefrisk {

// Largest frame for which set functions over 2^X are materialized densely.
inline constexpr int kMaxFrame = 24;

// Absolute tolerance for sums and transform round trips.
inline constexpr double kTolSum = 1e-9;

// A subset of a finite frame. Bit i is set iff element i belongs to the
// subset. The owning frame is not stored; callers check association.
class SubsetMask {
 public:
  using Bits = std::uint32_t;

  constexpr SubsetMask() = default;
  constexpr explicit SubsetMask(Bits bits) : bits_(bits) {}

  static constexpr SubsetMask Empty() { return SubsetMask(); }
  static constexpr SubsetMask Singleton(int element) {
    return SubsetMask(Bits{1} << element);
  }
  // The first `size` elements, i.e. the full set of a frame of that size.
  static constexpr SubsetMask FirstN(int size) {
    return size >= 32 ? SubsetMask(~Bits{0})
                      : SubsetMask((Bits{1} << size) - 1);
  }

  constexpr Bits bits() const { return bits_; }
  // Position of this subset in a dense set-function array.
  constexpr std::size_t index() const { return bits_; }

  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool contains(int element) const {
    return (bits_ >> element) & 1u;
  }
  constexpr bool IsSubsetOf(SubsetMask other) const {
    return (bits_ & ~other.bits_) == 0;
  }

  constexpr SubsetMask With(int element) const {
    return SubsetMask(bits_ | (Bits{1} << element));
  }
  constexpr SubsetMask Without(int element) const {
    return SubsetMask(bits_ & ~(Bits{1} << element));
  }

  // Elements in increasing order.
  std::vector<int> Elements() const;

  friend constexpr SubsetMask operator|(SubsetMask a, SubsetMask b) {
    return SubsetMask(a.bits_ | b.bits_);
  }
  friend constexpr SubsetMask operator&(SubsetMask a, SubsetMask b) {
    return SubsetMask(a.bits_ & b.bits_);
  }
  // Set difference.
  friend constexpr SubsetMask operator-(SubsetMask a, SubsetMask b) {
    return SubsetMask(a.bits_ & ~b.bits_);
  }
  friend constexpr auto operator<=>(SubsetMask, SubsetMask) = default;

 private:
  Bits bits_ = 0;
};

// Finite frame of discernment: an ordered list of unique element labels.
class Frame {
 public:
  // Labels must be unique and at most kMaxFrame of them.
  static absl::StatusOr<Frame> Create(std::vector<std::string> labels);
  // Frame with labels prefix0 .. prefix{size-1}.
  static absl::StatusOr<Frame> Indexed(int size, absl::string_view prefix = "x");

  int size() const { return static_cast<int>(labels_.size()); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int element) const { return labels_[element]; }
  std::optional<int> IndexOf(absl::string_view label) const;

  SubsetMask Full() const { return SubsetMask::FirstN(size()); }
  // Number of subsets, 2^size.
  std::size_t PowersetSize() const { return std::size_t{1} << size(); }
  bool Owns(SubsetMask subset) const { return subset.IsSubsetOf(Full()); }

  absl::StatusOr<SubsetMask> SubsetOf(
      std::span<const std::string> labels) const;
  std::vector<std::string> LabelsOf(SubsetMask subset) const;
  // "{a,b,c}" rendering used in diagnostics.
  std::string Describe(SubsetMask subset) const;

  friend bool operator==(const Frame&, const Frame&) = default;

 private:
  explicit Frame(std::vector<std::string> labels)
      : labels_(std::move(labels)) {}

  std::vector<std::string> labels_;
};

// Fails with ResourceExhausted when a dense lattice over `size` elements
// would exceed kMaxFrame.
absl::Status CheckDenseCapacity(int size);

// All 2^size subsets of a frame in increasing bit-pattern order.
class Powerset {
 public:
  class Iterator {
   public:
    using value_type = SubsetMask;
    using difference_type = std::ptrdiff_t;

    Iterator() = default;
    explicit Iterator(std::uint64_t position) : position_(position) {}
    SubsetMask operator*() const {
      return SubsetMask(static_cast<SubsetMask::Bits>(position_));
    }
    Iterator& operator++() {
      ++position_;
      return *this;
    }
    Iterator operator++(int) {
      Iterator copy = *this;
      ++position_;
      return copy;
    }
    friend bool operator==(const Iterator&, const Iterator&) = default;

   private:
    std::uint64_t position_ = 0;
  };

  static absl::StatusOr<Powerset> Of(int size);
  static Powerset Of(const Frame& frame) { return Powerset(frame.size()); }

  Iterator begin() const { return Iterator(0); }
  Iterator end() const { return Iterator(std::uint64_t{1} << size_); }
  std::size_t count() const { return std::size_t{1} << size_; }

 private:
  explicit Powerset(int size) : size_(size) {}
  int size_;
};

// Log2 of a dense set-function length; InvalidArgument unless the length is
// 2^n with n <= kMaxFrame.
absl::StatusOr<int> LatticeOrder(std::size_t length);

// Subset-sum (zeta) transform: out[A] = sum over B subset of A of values[B].
absl::StatusOr<std::vector<double>> ZetaTransform(
    std::span<const double> values);
// Inverse of ZetaTransform:
// out[A] = sum over B subset of A of (-1)^{|A|-|B|} values[B].
absl::StatusOr<std::vector<double>> MobiusTransform(
    std::span<const double> values);

// Superset-sum transform: out[A] = sum over B superset of A of values[B].
absl::StatusOr<std::vector<double>> SupersetZetaTransform(
    std::span<const double> values);
absl::StatusOr<std::vector<double>> SupersetMobiusTransform(
    std::span<const double> values);

// In-place variants. The span length must be a power of two; these do not
// re-validate and are the building blocks of the functions above.
void ZetaInPlace(std::span<double> values);
void MobiusInPlace(std::span<double> values);
void SupersetZetaInPlace(std::span<double> values);
void SupersetMobiusInPlace(std::span<double> values);

}  // namespace beliefrisk

#endif  // BELIEFRISK_FRAME_H_
