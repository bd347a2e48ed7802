#ifndef MHRES_MATRIX_HPP
#define MHRES_MATRIX_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "mhres/errors.hpp"
#include "mhres/polynomial.hpp"

namespace mhres {

// Dense matrix with basis labels on both sides; entries live in a coefficient
// domain (exact rationals, or polynomials in coefficient indeterminates).
template <class D>
struct LabeledMatrix {
    using Value = typename D::Value;

    std::vector<std::string> row_labels;
    std::vector<std::string> col_labels;
    std::vector<Value> entries;  // row-major

    LabeledMatrix() = default;
    LabeledMatrix(std::vector<std::string> rl, std::vector<std::string> cl)
        : row_labels(std::move(rl)), col_labels(std::move(cl)) {
        entries.assign(row_labels.size() * col_labels.size(), D::zero());
    }

    std::size_t rows() const { return row_labels.size(); }
    std::size_t cols() const { return col_labels.size(); }
    Value& at(std::size_t i, std::size_t j) { return entries[i * cols() + j]; }
    const Value& at(std::size_t i, std::size_t j) const { return entries[i * cols() + j]; }
};

namespace detail {

// Laplace expansion with shared minors over column subsets; preferred for the
// small Cayley-style matrices with polynomial entries.
template <class D>
typename D::Value det_minor_expansion(const std::vector<typename D::Value>& a, std::size_t n) {
    using V = typename D::Value;
    std::vector<V> cur(1, D::one());             // minors over k-subsets of columns
    std::vector<std::uint32_t> cur_masks(1, 0);  // parallel bitmasks
    for (std::size_t row = 0; row < n; ++row) {
        std::vector<V> nxt;
        std::vector<std::uint32_t> nxt_masks;
        std::vector<int> where(1u << n, -1);
        for (std::size_t idx = 0; idx < cur.size(); ++idx) {
            std::uint32_t mask = cur_masks[idx];
            if (D::is_zero(cur[idx])) continue;
            for (std::size_t j = 0; j < n; ++j) {
                if (mask & (1u << j)) continue;
                const V& e = a[row * n + j];
                if (D::is_zero(e)) continue;
                int pos = __builtin_popcount(mask & ((1u << j) - 1));
                V contrib = D::mul(cur[idx], e);
                if ((row + pos) & 1) contrib = D::neg(contrib);
                std::uint32_t nm = mask | (1u << j);
                if (where[nm] < 0) {
                    where[nm] = static_cast<int>(nxt.size());
                    nxt.push_back(std::move(contrib));
                    nxt_masks.push_back(nm);
                } else {
                    nxt[where[nm]] = D::add(nxt[where[nm]], std::move(contrib));
                }
            }
        }
        cur = std::move(nxt);
        cur_masks = std::move(nxt_masks);
        if (cur.empty()) return D::zero();
    }
    return cur.empty() ? D::zero() : cur[0];
}

template <class D>
typename D::Value det_bareiss(std::vector<typename D::Value> a, std::size_t n) {
    using V = typename D::Value;
    bool negate = false;
    V prev = D::one();
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t pivot = k;
        while (pivot < n && D::is_zero(a[pivot * n + k])) ++pivot;
        if (pivot == n) return D::zero();
        if (pivot != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a[k * n + j], a[pivot * n + j]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                V num = D::add(D::mul(a[i * n + j], a[k * n + k]),
                               D::neg(D::mul(a[i * n + k], a[k * n + j])));
                a[i * n + j] = D::exact_div(num, prev);
            }
            a[i * n + k] = D::zero();
        }
        prev = a[k * n + k];
    }
    V det = a[n * n - 1];
    return negate ? D::neg(det) : det;
}

}  // namespace detail

// Exact determinant without true fractions: memoized minor expansion up to
// 6x6, Bareiss elimination beyond that.
template <class D>
typename D::Value det_fraction_free(const LabeledMatrix<D>& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
    std::size_t n = m.rows();
    if (n == 0) return D::one();
    if (n <= 6) return detail::det_minor_expansion<D>(m.entries, n);
    return detail::det_bareiss<D>(m.entries, n);
}

// ---- modular linear algebra (for randomized rank tests) ----

// Largest prime below 2^62; fixed so rank tests are reproducible.
inline constexpr std::uint64_t kRankTestPrime = 4611686018427387847ULL;

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

inline std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

inline std::uint64_t invmod(std::uint64_t a, std::uint64_t p) { return powmod(a % p, p - 2, p); }

inline std::size_t rank_mod_p(std::vector<std::uint64_t> a, std::size_t rows, std::size_t cols,
                              std::uint64_t p) {
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && a[pivot * cols + col] == 0) ++pivot;
        if (pivot == rows) continue;
        if (pivot != rank)
            for (std::size_t j = col; j < cols; ++j)
                std::swap(a[pivot * cols + j], a[rank * cols + j]);
        std::uint64_t inv = invmod(a[rank * cols + col], p);
        for (std::size_t i = rank + 1; i < rows; ++i) {
            std::uint64_t f = a[i * cols + col];
            if (f == 0) continue;
            std::uint64_t scale = mulmod(f, inv, p);
            for (std::size_t j = col; j < cols; ++j) {
                std::uint64_t sub = mulmod(scale, a[rank * cols + j], p);
                std::uint64_t& cell = a[i * cols + j];
                cell = (cell >= sub) ? cell - sub : cell + p - sub;
            }
        }
        ++rank;
    }
    return rank;
}

}  // namespace mhres

#endif
