// Copyright 2026 The g2s Authors
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

// Entanglement across straight cuts of CZ grid states: for each grid size
// and each vertical cut, print crossing edges and entropy in bits.
//
//   area_law_scan [max_rows] [max_cols]     defaults 3 4

#include <cstdio>
#include <cstdlib>

#include "g2s/g2s.hpp"

int main(int argc, char** argv) {
  const std::size_t max_rows = argc > 1 ? std::strtoul(argv[1], nullptr, 10) : 3;
  const std::size_t max_cols = argc > 2 ? std::strtoul(argv[2], nullptr, 10) : 4;
  const auto spec = g2s::EncodingSpec::with_defaults(g2s::family::CZ{});

  std::printf("%-6s %-4s %-9s %-8s %s\n", "grid", "cut", "crossing", "bits", "ratio");
  try {
    for (std::size_t rows = 1; rows <= max_rows; ++rows) {
      for (std::size_t cols = 2; cols <= max_cols; ++cols) {
        const g2s::Graph g = g2s::Graph::grid(rows, cols);
        const auto es = g2s::encode(spec, g);
        for (std::size_t cut = 1; cut < cols; ++cut) {
          std::vector<std::size_t> left;
          for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cut; ++c) left.push_back(r * cols + c);
          const auto report = g2s::area_law_report(es, g, left);
          std::printf("%zux%-4zu %-4zu %-9zu %-8.4f %.4f\n", rows, cols, cut,
                      report.crossing, report.entropy_bits,
                      report.ratio.value_or(0.0));
        }
      }
    }
  } catch (const g2s::Error& e) {
    std::fprintf(stderr, "area_law_scan: %s\n", e.what());
    return 1;
  }
  return 0;
}
