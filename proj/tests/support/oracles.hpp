#ifndef ROGUE_TESTS_ORACLES_HPP
#define ROGUE_TESTS_ORACLES_HPP

// Independent reference implementations used only by the tests.

#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include "rogue/complex.hpp"
#include "rogue/eps_series.hpp"

namespace oracle {

/// Order-1 closed form at zero parameters.
inline std::complex<double> peregrine(double x, double t) {
    const std::complex<double> i(0.0, 1.0);
    return (1.0 - 4.0 * (1.0 + 4.0 * i * t) / (1.0 + 4.0 * x * x + 16.0 * t * t)) * std::exp(2.0 * i * t);
}

/// Laplace expansion along the first row; fine up to 7x7.
template <class R>
rogue::Complex<R> cofactor_det(const std::vector<std::vector<rogue::Complex<R>>>& m) {
    const size_t n = m.size();
    if (n == 0) return rogue::Complex<R>(R(1));
    if (n == 1) return m[0][0];
    rogue::Complex<R> acc(R(0));
    for (size_t col = 0; col < n; ++col) {
        std::vector<std::vector<rogue::Complex<R>>> minor;
        for (size_t r = 1; r < n; ++r) {
            std::vector<rogue::Complex<R>> row;
            for (size_t c = 0; c < n; ++c) {
                if (c != col) row.push_back(m[r][c]);
            }
            minor.push_back(std::move(row));
        }
        rogue::Complex<R> term = m[0][col] * cofactor_det(minor);
        acc = (col % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

/// Plain Cauchy product of two coefficient windows starting at eps^0.
template <class R>
std::vector<rogue::Complex<R>> convolve(const std::vector<rogue::Complex<R>>& a, const std::vector<rogue::Complex<R>>& b,
                                        size_t n) {
    std::vector<rogue::Complex<R>> out(n, rogue::Complex<R>(R(0)));
    for (size_t i = 0; i < a.size() && i < n; ++i) {
        for (size_t j = 0; j < b.size() && i + j < n; ++j) out[i + j] = out[i + j] + a[i] * b[j];
    }
    return out;
}

/// Finite-difference weights for the m-th derivative at z0 on arbitrary nodes.
template <class R>
std::vector<R> fd_weights(const R& z0, const std::vector<R>& nodes, int m) {
    const int n = static_cast<int>(nodes.size()) - 1;
    std::vector<std::vector<R>> c(static_cast<size_t>(n + 1), std::vector<R>(static_cast<size_t>(m + 1), R(0)));
    R c1(1);
    R c4 = nodes[0] - z0;
    c[0][0] = R(1);
    for (int i = 1; i <= n; ++i) {
        int mn = std::min(i, m);
        R c2(1);
        R c5 = c4;
        c4 = nodes[static_cast<size_t>(i)] - z0;
        for (int j = 0; j < i; ++j) {
            R c3 = nodes[static_cast<size_t>(i)] - nodes[static_cast<size_t>(j)];
            c2 = c2 * c3;
            if (j == i - 1) {
                for (int k = mn; k >= 1; --k) {
                    c[static_cast<size_t>(i)][static_cast<size_t>(k)] =
                        c1 * (R(k) * c[static_cast<size_t>(i - 1)][static_cast<size_t>(k - 1)] -
                              c5 * c[static_cast<size_t>(i - 1)][static_cast<size_t>(k)]) /
                        c2;
                }
                c[static_cast<size_t>(i)][0] = -c1 * c5 * c[static_cast<size_t>(i - 1)][0] / c2;
            }
            for (int k = mn; k >= 1; --k) {
                c[static_cast<size_t>(j)][static_cast<size_t>(k)] =
                    (c4 * c[static_cast<size_t>(j)][static_cast<size_t>(k)] -
                     R(k) * c[static_cast<size_t>(j)][static_cast<size_t>(k - 1)]) /
                    c3;
            }
            c[static_cast<size_t>(j)][0] = c4 * c[static_cast<size_t>(j)][0] / c3;
        }
        c1 = c2;
    }
    std::vector<R> w;
    for (int i = 0; i <= n; ++i) w.push_back(c[static_cast<size_t>(i)][static_cast<size_t>(m)]);
    return w;
}

/// Random series with complex coefficients in [-1, 1]^2.
template <class R>
rogue::EpsSeries<R> random_series(std::mt19937_64& gen, int valuation, int order, bool nonzero_lead = true) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<rogue::Complex<R>> c;
    for (int p = valuation; p < order; ++p) c.emplace_back(R(u(gen)), R(u(gen)));
    if (nonzero_lead) c[0] = c[0] + rogue::Complex<R>(R(2));
    return rogue::EpsSeries<R>::from_coefficients(valuation, std::move(c));
}

/// Largest coefficient gap over the shared window.
template <class R>
double series_gap(const rogue::EpsSeries<R>& a, const rogue::EpsSeries<R>& b) {
    const int lo = std::min(a.valuation(), b.valuation());
    const int hi = std::min(a.order(), b.order());
    double worst = 0.0;
    for (int p = lo; p < hi; ++p) worst = std::max(worst, rogue::to_double(abs(a.coeff(p) - b.coeff(p))));
    return worst;
}

}  // namespace oracle

#endif  // ROGUE_TESTS_ORACLES_HPP
