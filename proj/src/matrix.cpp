#include "capelli/matrix.hpp"

namespace capelli {

MultiIndex double_index(const MultiIndex& I) {
    MultiIndex out;
    for (auto i : I) {
        out.push_back(2 * i);
        out.push_back(2 * i + 1);
    }
    return out;
}

std::vector<MultiIndex> subsets(std::size_t n, std::size_t r) {
    std::vector<MultiIndex> out;
    if (r > n) return out;
    MultiIndex cur(r);
    std::iota(cur.begin(), cur.end(), std::size_t(0));
    while (true) {
        out.push_back(cur);
        std::size_t k = r;
        while (k > 0 && cur[k - 1] == n - r + k - 1) --k;
        if (k == 0) break;
        ++cur[k - 1];
        for (std::size_t j = k; j < r; ++j) cur[j] = cur[j - 1] + 1;
    }
    return out;
}

} // namespace capelli
