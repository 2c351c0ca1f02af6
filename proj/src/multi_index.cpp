#include "linfty/multi_index.hpp"

namespace linfty {

unsigned long long factorial(int n) {
    if (n < 0) throw domain_error("factorial of negative integer");
    unsigned long long r = 1;
    for (int k = 2; k <= n; ++k) r *= static_cast<unsigned long long>(k);
    return r;
}

unsigned long long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    unsigned long long r = 1;
    for (int i = 1; i <= k; ++i) {
        r = r * static_cast<unsigned long long>(n - k + i) / static_cast<unsigned long long>(i);
    }
    return r;
}

unsigned long long MultiIndex::factorial_value() const {
    if (!valid()) throw domain_error("invalid multi-index " + str());
    return factorial(i1) * factorial(i2) * factorial(i3);
}

std::vector<MultiIndex> enumerate_monomials(int n) {
    if (n <= 0) throw domain_error("empty word degree");
    std::vector<MultiIndex> out;
    out.reserve(static_cast<size_t>(2 * n + 1));
    for (int p = n; p >= 0; --p) out.push_back(MultiIndex{0, p, n - p});
    for (int q = 0; q <= n - 1; ++q) out.push_back(MultiIndex{1, q, n - q - 1});
    return out;
}

} // namespace linfty
