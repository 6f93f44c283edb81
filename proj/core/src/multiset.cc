// Copyright 2026 The patternlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "patternlab/multiset.h"

#include <algorithm>
#include <string>

#include "patternlab/errors.h"

namespace patternlab {

Multiset::Multiset(std::vector<Index> items) : items_(std::move(items)) {
  std::sort(items_.begin(), items_.end());
}

Multiset Multiset::FromCounts(std::span<const std::uint32_t> counts) {
  std::vector<Index> items;
  for (Index i = 0; i < counts.size(); ++i) {
    items.insert(items.end(), counts[i], i);
  }
  Multiset out;
  out.items_ = std::move(items);
  return out;
}

std::uint32_t Multiset::count(Index i) const {
  auto [lo, hi] = std::equal_range(items_.begin(), items_.end(), i);
  return static_cast<std::uint32_t>(hi - lo);
}

std::vector<std::uint32_t> Multiset::Counts(std::size_t m) const {
  std::vector<std::uint32_t> counts(m, 0);
  for (Index i : items_) ++counts[i];
  return counts;
}

std::vector<std::pair<Index, std::uint32_t>> Multiset::Runs() const {
  std::vector<std::pair<Index, std::uint32_t>> runs;
  for (Index i : items_) {
    if (!runs.empty() && runs.back().first == i) {
      ++runs.back().second;
    } else {
      runs.emplace_back(i, 1);
    }
  }
  return runs;
}

std::string Multiset::ToString() const {
  std::string out = "<";
  for (std::size_t k = 0; k < items_.size(); ++k) {
    if (k > 0) out += ",";
    out += std::to_string(items_[k] + 1);
  }
  return out + ">";
}

std::uint32_t Multiplicity(const Multiset& e, Index i, std::size_t m) {
  if (i >= m) {
    throw InputError("index " + std::to_string(i + 1) + " outside [1, " +
                     std::to_string(m) + "]");
  }
  return e.count(i);
}

std::vector<Multiset> EnumerateMultisets(std::size_t m, std::size_t s) {
  std::vector<Multiset> out;
  if (m == 0) {
    if (s == 0) out.emplace_back();
    return out;
  }
  // Nondecreasing sequences of length s over [0, m), odometer style.
  std::vector<Index> current(s, 0);
  while (true) {
    out.emplace_back(current);
    std::size_t pos = s;
    while (pos > 0 && current[pos - 1] == m - 1) --pos;
    if (pos == 0) break;
    Index next = current[pos - 1] + 1;
    for (std::size_t k = pos - 1; k < s; ++k) current[k] = next;
  }
  return out;
}

namespace {

void CompositionsRec(std::vector<std::uint32_t>& counts, std::size_t pos,
                     std::uint32_t remaining,
                     const std::function<void(std::span<const std::uint32_t>)>& visit) {
  if (pos + 1 == counts.size()) {
    counts[pos] = remaining;
    visit(counts);
    return;
  }
  for (std::uint32_t c = 0; c <= remaining; ++c) {
    counts[pos] = c;
    CompositionsRec(counts, pos + 1, remaining - c, visit);
  }
}

}  // namespace

void ForEachComposition(std::size_t parts, std::uint32_t total,
                        const std::function<void(std::span<const std::uint32_t>)>& visit) {
  if (parts == 0) return;
  std::vector<std::uint32_t> counts(parts, 0);
  CompositionsRec(counts, 0, total, visit);
}

}  // namespace patternlab
