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

#include "qdc/dataset.hpp"

#include <cmath>
#include <string>

#include "qdc/error.hpp"

namespace qdc {

void LabeledDataset::validate() const {
  if (rows.size() != labels.size()) {
    throw ArgumentError("dataset has " + std::to_string(rows.size()) +
                        " rows but " + std::to_string(labels.size()) +
                        " labels");
  }
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != rows.front().size()) {
      throw ArgumentError("row " + std::to_string(r) + " has dimension " +
                          std::to_string(rows[r].size()) + ", expected " +
                          std::to_string(rows.front().size()));
    }
    for (double x : rows[r]) {
      if (!std::isfinite(x)) {
        throw ArgumentError("row " + std::to_string(r) +
                            " has a non-finite entry");
      }
    }
    if (labels[r] != -1 && labels[r] != 1) {
      throw ArgumentError("label " + std::to_string(labels[r]) +
                          " is not -1 or +1");
    }
  }
}

}  // namespace qdc
