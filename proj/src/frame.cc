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

#include "beliefrisk/frame.h"

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "absl/strings/str_cat.h"
#include "absl/strings/str_join.h"

namespace beliefrisk {

std::vector<int> SubsetMask::Elements() const {
  std::vector<int> out;
  out.reserve(size());
  for (Bits rest = bits_; rest != 0; rest &= rest - 1) {
    out.push_back(std::countr_zero(rest));
  }
  return out;
}

absl::Status CheckDenseCapacity(int size) {
  if (size < 0) {
    return absl::InvalidArgumentError(
        absl::StrCat("negative frame size ", size));
  }
  if (size > kMaxFrame) {
    return absl::ResourceExhaustedError(
        absl::StrCat("frame of ", size, " elements exceeds the dense limit of ",
                     kMaxFrame));
  }
  return absl::OkStatus();
}

absl::StatusOr<Frame> Frame::Create(std::vector<std::string> labels) {
  if (labels.empty()) {
    return absl::InvalidArgumentError("a frame needs at least one element");
  }
  if (absl::Status s = CheckDenseCapacity(static_cast<int>(labels.size()));
      !s.ok()) {
    return s;
  }
  std::set<absl::string_view> seen;
  for (const std::string& label : labels) {
    if (!seen.insert(label).second) {
      return absl::InvalidArgumentError(
          absl::StrCat("duplicate frame label '", label, "'"));
    }
  }
  return Frame(std::move(labels));
}

absl::StatusOr<Frame> Frame::Indexed(int size, absl::string_view prefix) {
  if (size < 1) {
    return absl::InvalidArgumentError("a frame needs at least one element");
  }
  if (absl::Status s = CheckDenseCapacity(size); !s.ok()) return s;
  std::vector<std::string> labels;
  labels.reserve(size);
  for (int i = 0; i < size; ++i) labels.push_back(absl::StrCat(prefix, i));
  return Frame(std::move(labels));
}

std::optional<int> Frame::IndexOf(absl::string_view label) const {
  for (int i = 0; i < size(); ++i) {
    if (labels_[i] == label) return i;
  }
  return std::nullopt;
}

absl::StatusOr<SubsetMask> Frame::SubsetOf(
    std::span<const std::string> labels) const {
  SubsetMask out;
  for (const std::string& label : labels) {
    std::optional<int> index = IndexOf(label);
    if (!index.has_value()) {
      return absl::InvalidArgumentError(
          absl::StrCat("label '", label, "' is not in the frame"));
    }
    out = out.With(*index);
  }
  return out;
}

std::vector<std::string> Frame::LabelsOf(SubsetMask subset) const {
  std::vector<std::string> out;
  for (int element : subset.Elements()) out.push_back(labels_[element]);
  return out;
}

std::string Frame::Describe(SubsetMask subset) const {
  return absl::StrCat("{", absl::StrJoin(LabelsOf(subset), ","), "}");
}

absl::StatusOr<Powerset> Powerset::Of(int size) {
  if (absl::Status s = CheckDenseCapacity(size); !s.ok()) return s;
  return Powerset(size);
}

absl::StatusOr<int> LatticeOrder(std::size_t length) {
  if (length == 0 || !std::has_single_bit(length)) {
    return absl::InvalidArgumentError(absl::StrCat(
        "set function of length ", length, " is not indexed by a powerset"));
  }
  int order = std::countr_zero(length);
  if (absl::Status s = CheckDenseCapacity(order); !s.ok()) return s;
  return order;
}

// The four sweeps below are the standard O(n 2^n) butterflies over the
// subset lattice, one bit dimension at a time.

void ZetaInPlace(std::span<double> values) {
  const std::size_t n = values.size();
  for (std::size_t bit = 1; bit < n; bit <<= 1) {
    for (std::size_t a = 0; a < n; ++a) {
      if (a & bit) values[a] += values[a ^ bit];
    }
  }
}

void MobiusInPlace(std::span<double> values) {
  const std::size_t n = values.size();
  for (std::size_t bit = 1; bit < n; bit <<= 1) {
    for (std::size_t a = 0; a < n; ++a) {
      if (a & bit) values[a] -= values[a ^ bit];
    }
  }
}

void SupersetZetaInPlace(std::span<double> values) {
  const std::size_t n = values.size();
  for (std::size_t bit = 1; bit < n; bit <<= 1) {
    for (std::size_t a = 0; a < n; ++a) {
      if (!(a & bit)) values[a] += values[a | bit];
    }
  }
}

void SupersetMobiusInPlace(std::span<double> values) {
  const std::size_t n = values.size();
  for (std::size_t bit = 1; bit < n; bit <<= 1) {
    for (std::size_t a = 0; a < n; ++a) {
      if (!(a & bit)) values[a] -= values[a | bit];
    }
  }
}

namespace {

template <typename Sweep>
absl::StatusOr<std::vector<double>> Transformed(std::span<const double> values,
                                                Sweep sweep) {
  if (absl::StatusOr<int> order = LatticeOrder(values.size()); !order.ok()) {
    return order.status();
  }
  std::vector<double> out(values.begin(), values.end());
  sweep(std::span<double>(out));
  return out;
}

}  // namespace

absl::StatusOr<std::vector<double>> ZetaTransform(
    std::span<const double> values) {
  return Transformed(values, ZetaInPlace);
}

absl::StatusOr<std::vector<double>> MobiusTransform(
    std::span<const double> values) {
  return Transformed(values, MobiusInPlace);
}

absl::StatusOr<std::vector<double>> SupersetZetaTransform(
    std::span<const double> values) {
  return Transformed(values, SupersetZetaInPlace);
}

absl::StatusOr<std::vector<double>> SupersetMobiusTransform(
    std::span<const double> values) {
  return Transformed(values, SupersetMobiusInPlace);
}

}  // namespace beliefrisk
