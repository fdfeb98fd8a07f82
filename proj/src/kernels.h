// Copyright 2026 The QWCP Authors
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

#ifndef QWCP_SRC_KERNELS_H
#define QWCP_SRC_KERNELS_H

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "qwcp/gates.h"

namespace qwcp::detail {

/// Calls fn(index) for every index < dim whose bits under fixed_mask equal
/// fixed_value, in ascending order.
template <class Fn>
void for_each_masked(uint64_t dim, uint64_t fixed_mask, uint64_t fixed_value, Fn &&fn) {
    const uint64_t free = (dim - 1) & ~fixed_mask;
    uint64_t s = 0;
    do {
        fn(s | fixed_value);
        s = (s - free) & free;
    } while (s != 0);
}

/// Exchanges amplitudes at base|a and base|b for every base matching the
/// fixed bits with the group bits cleared. a and b lie inside group_mask.
inline void swap_group(
    std::span<Amplitude> amps, uint64_t fixed_mask, uint64_t fixed_value, uint64_t group_mask, uint64_t a,
    uint64_t b) {
    if (a == b) {
        return;
    }
    for_each_masked(amps.size(), fixed_mask | group_mask, fixed_value, [&](uint64_t base) {
        std::swap(amps[base | a], amps[base | b]);
    });
}

/// Applies u to the span of {base|patterns[r]} for every matching base.
inline void apply_group(
    std::span<Amplitude> amps, uint64_t fixed_mask, uint64_t fixed_value, uint64_t group_mask,
    std::span<const uint64_t> patterns, const Matrix &u) {
    const auto m = static_cast<Eigen::Index>(patterns.size());
    Eigen::VectorXcd in(m);
    Eigen::VectorXcd out(m);
    for_each_masked(amps.size(), fixed_mask | group_mask, fixed_value, [&](uint64_t base) {
        bool any = false;
        for (Eigen::Index r = 0; r < m; ++r) {
            in[r] = amps[base | patterns[r]];
            any = any || in[r] != Amplitude(0);
        }
        if (!any) {
            return;
        }
        out.noalias() = u * in;
        for (Eigen::Index r = 0; r < m; ++r) {
            amps[base | patterns[r]] = out[r];
        }
    });
}

/// Index bits for value r spread over target masks (targets[0] receives the
/// most significant bit of r).
inline std::vector<uint64_t> spread_patterns(const std::vector<uint64_t> &target_masks) {
    const size_t m = target_masks.size();
    std::vector<uint64_t> out(size_t{1} << m, 0);
    for (size_t r = 0; r < out.size(); ++r) {
        for (size_t t = 0; t < m; ++t) {
            if ((r >> (m - 1 - t)) & 1) {
                out[r] |= target_masks[t];
            }
        }
    }
    return out;
}

}  // namespace qwcp::detail

#endif
