#include "linfty/cochain.hpp"

namespace linfty {

int BasisCochain::basis_position() const {
    if (!valid()) throw domain_error("invalid basis cochain");
    int n = degree();
    // Even block sizes: n (j=1), n+1 (j=2), n+1 (j=3); odd block: n, n, n+1.
    if (parity() == Parity::Even) {
        if (target == 1) return index.i2;                     // q ascending
        if (target == 2) return n + (n - index.i2);           // p descending
        return n + (n + 1) + (n - index.i2);                  // j == 3
    }
    int base = 3 * n + 2;
    if (target == 2) return base + index.i2;                  // q ascending
    if (target == 3) return base + n + index.i2;
    return base + 2 * n + (n - index.i2);                     // j == 1, p descending
}

std::vector<BasisCochain> basis_cochains(int n) {
    auto even = basis_cochains(n, Parity::Even);
    auto odd = basis_cochains(n, Parity::Odd);
    even.insert(even.end(), odd.begin(), odd.end());
    return even;
}

std::vector<BasisCochain> basis_cochains(int n, Parity parity) {
    if (n <= 0) throw domain_error("empty word degree");
    std::vector<BasisCochain> out;
    if (parity == Parity::Even) {
        out.reserve(static_cast<size_t>(3 * n + 2));
        for (int q = 0; q <= n - 1; ++q) out.push_back({MultiIndex{1, q, n - q - 1}, 1});
        for (int p = n; p >= 0; --p) out.push_back({MultiIndex{0, p, n - p}, 2});
        for (int p = n; p >= 0; --p) out.push_back({MultiIndex{0, p, n - p}, 3});
    } else {
        out.reserve(static_cast<size_t>(3 * n + 1));
        for (int q = 0; q <= n - 1; ++q) out.push_back({MultiIndex{1, q, n - q - 1}, 2});
        for (int q = 0; q <= n - 1; ++q) out.push_back({MultiIndex{1, q, n - q - 1}, 3});
        for (int p = n; p >= 0; --p) out.push_back({MultiIndex{0, p, n - p}, 1});
    }
    return out;
}

} // namespace linfty
