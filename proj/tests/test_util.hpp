#pragma once

#include <functional>
#include <vector>

// Calls fn with every label vector in {0..k-1}^n, base-k counter order.
inline void for_each_allocation(
    long n, int k, const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> labels(n, 0);
    while (true) {
        fn(labels);
        long j = 0;
        for (; j < n; ++j) {
            if (++labels[j] < k) break;
            labels[j] = 0;
        }
        if (j == n) break;
    }
}
