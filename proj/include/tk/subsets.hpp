// subsets.hpp -- lexicographic combination iteration helpers

#pragma once

#include <array>

#include "tk/tournament.hpp"

namespace tk::detail {

/// Calls f(idx) for every k-combination of {0..n-1}, idx a pointer to k
/// increasing ints, in lexicographic order.  f may return void, or bool
/// where false stops the iteration; the function returns false iff stopped.
template <class F>
bool for_each_combination(int n, int k, F&& f) {
    std::array<int, kMaxVertices> idx{};
    if (k > n) return true;
    for (int i = 0; i < k; ++i) idx[i] = i;
    auto invoke = [&]() -> bool {
        if constexpr (std::is_void_v<decltype(f(idx.data()))>) {
            f(idx.data());
            return true;
        } else {
            return f(idx.data());
        }
    };
    if (k == 0) return invoke();
    while (true) {
        if (!invoke()) return false;
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i) --i;
        if (i < 0) return true;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

/// As above, but combinations are drawn from the given pool (increasing
/// pool order).
template <class F>
bool for_each_combination_of(const int* pool, int pool_size, int k, F&& f) {
    std::array<int, kMaxVertices> chosen{};
    return for_each_combination(pool_size, k, [&](const int* idx) {
        for (int i = 0; i < k; ++i) chosen[i] = pool[idx[i]];
        if constexpr (std::is_void_v<decltype(f(chosen.data()))>) {
            f(chosen.data());
            return true;
        } else {
            return f(chosen.data());
        }
    });
}

}  // namespace tk::detail
