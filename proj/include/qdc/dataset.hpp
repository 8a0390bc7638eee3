// Copyright 2026 The qdc Authors
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

#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace qdc {

using FeatureVector = std::vector<double>;

/// What has been done to a dataset's rows since ingest.
struct Provenance {
  int feature_map_copies = 1;
  bool standardized = false;
  bool normalized = false;
  bool padded = false;

  bool operator==(const Provenance&) const = default;
};

/// Rows with binary labels in {-1, +1}.
struct LabeledDataset {
  std::vector<FeatureVector> rows;
  std::vector<int> labels;
  std::string name;
  /// Original class name -> label.
  std::map<std::string, int> class_map;
  Provenance provenance;

  std::size_t size() const { return rows.size(); }
  std::size_t dimension() const { return rows.empty() ? 0 : rows.front().size(); }

  /// Throws ArgumentError unless rows/labels agree in length, all rows share
  /// one dimension, every entry is finite and every label is -1 or +1.
  void validate() const;

  bool operator==(const LabeledDataset&) const = default;
};

}  // namespace qdc
