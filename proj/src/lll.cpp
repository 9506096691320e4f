#include "mahler/lll.hpp"

#include <stdexcept>

namespace mahler {

namespace {

Integer dot(const std::vector<Integer>& a, const std::vector<Integer>& b) {
    Integer s(0);
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

// Lovasz parameter delta = 99/100 in integer form.
constexpr long kDeltaNum = 99;
constexpr long kDeltaDen = 100;

}  // namespace

void lll_reduce(std::vector<std::vector<Integer>>& basis) {
    const long n = static_cast<long>(basis.size());
    if (n <= 1) return;
    const std::size_t width = basis[0].size();
    for (const auto& row : basis)
        if (row.size() != width) throw std::invalid_argument("ragged lattice basis");

    // D[i] = Gramian of the first i rows (D[0] = 1);
    // lam[i][j] = D[j+1] * mu_{i,j} for j < i. All integers.
    std::vector<Integer> D(static_cast<std::size_t>(n) + 1);
    D[0] = 1;
    std::vector<std::vector<Integer>> lam(static_cast<std::size_t>(n));
    for (long i = 0; i < n; ++i) lam[static_cast<std::size_t>(i)].resize(static_cast<std::size_t>(i));

    long kmax = -1;

    auto gram_step = [&](long k) {
        for (long j = 0; j <= k; ++j) {
            Integer u = dot(basis[static_cast<std::size_t>(k)], basis[static_cast<std::size_t>(j)]);
            for (long i = 0; i < j; ++i)
                u = (D[static_cast<std::size_t>(i) + 1] * u -
                     lam[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)] *
                         lam[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)]) /
                    D[static_cast<std::size_t>(i)];
            if (j < k)
                lam[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)] = u;
            else {
                if (u == 0) throw std::invalid_argument("lattice basis is not full rank");
                D[static_cast<std::size_t>(k) + 1] = u;
            }
        }
    };

    auto red = [&](long k, long l) {
        Integer twice = 2 * lam[static_cast<std::size_t>(k)][static_cast<std::size_t>(l)];
        if (twice > D[static_cast<std::size_t>(l) + 1] ||
            -twice > D[static_cast<std::size_t>(l) + 1]) {
            Rational ratio(lam[static_cast<std::size_t>(k)][static_cast<std::size_t>(l)],
                           D[static_cast<std::size_t>(l) + 1]);
            ratio.canonicalize();
            Integer q = round_to_integer(ratio);
            auto& bk = basis[static_cast<std::size_t>(k)];
            const auto& bl = basis[static_cast<std::size_t>(l)];
            for (std::size_t c = 0; c < width; ++c) bk[c] -= q * bl[c];
            lam[static_cast<std::size_t>(k)][static_cast<std::size_t>(l)] -=
                q * D[static_cast<std::size_t>(l) + 1];
            for (long i = 0; i < l; ++i)
                lam[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)] -=
                    q * lam[static_cast<std::size_t>(l)][static_cast<std::size_t>(i)];
        }
    };

    auto swap_step = [&](long k) {
        std::swap(basis[static_cast<std::size_t>(k)], basis[static_cast<std::size_t>(k) - 1]);
        for (long j = 0; j < k - 1; ++j)
            std::swap(lam[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)],
                      lam[static_cast<std::size_t>(k) - 1][static_cast<std::size_t>(j)]);
        Integer lambda = lam[static_cast<std::size_t>(k)][static_cast<std::size_t>(k) - 1];
        Integer B = (D[static_cast<std::size_t>(k) - 1] * D[static_cast<std::size_t>(k) + 1] +
                     lambda * lambda) /
                    D[static_cast<std::size_t>(k)];
        for (long i = k + 1; i <= kmax; ++i) {
            Integer t = lam[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)];
            lam[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] =
                (D[static_cast<std::size_t>(k) + 1] *
                     lam[static_cast<std::size_t>(i)][static_cast<std::size_t>(k) - 1] -
                 lambda * t) /
                D[static_cast<std::size_t>(k)];
            lam[static_cast<std::size_t>(i)][static_cast<std::size_t>(k) - 1] =
                (B * t + lambda * lam[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)]) /
                D[static_cast<std::size_t>(k) + 1];
        }
        D[static_cast<std::size_t>(k)] = B;
    };

    long k = 1;
    while (k < n) {
        if (k > kmax) {
            kmax = k;
            if (kmax == 1) gram_step(0);
            gram_step(k);
        }
        red(k, k - 1);
        const Integer& lkk = lam[static_cast<std::size_t>(k)][static_cast<std::size_t>(k) - 1];
        Integer lhs = kDeltaDen * (D[static_cast<std::size_t>(k) + 1] *
                                       D[static_cast<std::size_t>(k) - 1] +
                                   lkk * lkk);
        Integer rhs = kDeltaNum * D[static_cast<std::size_t>(k)] * D[static_cast<std::size_t>(k)];
        if (lhs < rhs) {
            swap_step(k);
            k = std::max(1L, k - 1);
        } else {
            for (long l = k - 2; l >= 0; --l) red(k, l);
            ++k;
        }
    }
}

}  // namespace mahler
