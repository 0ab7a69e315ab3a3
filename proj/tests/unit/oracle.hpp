#pragma once

// Test-only oracles.  Deliberately independent of the library's elimination
// code: plain dense Gauss-Jordan over raw mpq_class / integers mod p, and Hom
// dimensions from the Kronecker form of the intertwiner equations.

#include <cstdint>
#include <random>
#include <type_traits>
#include <vector>

#include <gmpxx.h>

#include "repdim/module.hpp"

namespace oracle {

using QMat = std::vector<std::vector<mpq_class>>;

inline std::size_t rank_q(QMat a)
{
    std::size_t r = 0;
    const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a[p][c] == 0)
            ++p;
        if (p == rows)
            continue;
        std::swap(a[p], a[r]);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c] == 0)
                continue;
            const mpq_class f = a[i][c] / a[r][c];
            for (std::size_t k = c; k < cols; ++k)
                a[i][k] -= f * a[r][k];
        }
        ++r;
    }
    return r;
}

inline std::size_t rank_p(std::vector<std::vector<std::uint64_t>> a, std::uint64_t p)
{
    auto pw = [p](std::uint64_t b, std::uint64_t e) {
        std::uint64_t r = 1;
        for (b %= p; e; e >>= 1, b = b * b % p)
            if (e & 1)
                r = r * b % p;
        return r;
    };
    std::size_t r = 0;
    const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t q = r;
        while (q < rows && a[q][c] % p == 0)
            ++q;
        if (q == rows)
            continue;
        std::swap(a[q], a[r]);
        const std::uint64_t inv = pw(a[r][c], p - 2);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c] % p == 0)
                continue;
            const std::uint64_t f = a[i][c] % p * inv % p;
            for (std::size_t k = c; k < cols; ++k)
                a[i][k] = (a[i][k] + p - f * (a[r][k] % p) % p) % p;
        }
        ++r;
    }
    return r;
}

inline mpq_class to_q(const repdim::Rational& x) { return x.to_mpq(); }

template <class K>
std::size_t rank(const repdim::Matrix<K>& m)
{
    if constexpr (std::is_same_v<K, repdim::Rationals>) {
        QMat a(m.rows(), std::vector<mpq_class>(m.cols()));
        for (std::size_t r = 0; r < m.rows(); ++r)
            for (std::size_t c = 0; c < m.cols(); ++c)
                a[r][c] = to_q(m(r, c));
        return rank_q(a);
    } else {
        std::vector<std::vector<std::uint64_t>> a(m.rows(), std::vector<std::uint64_t>(m.cols()));
        for (std::size_t r = 0; r < m.rows(); ++r)
            for (std::size_t c = 0; c < m.cols(); ++c)
                a[r][c] = m(r, c);
        return rank_p(a, m.field().characteristic());
    }
}

// dim Hom(S, T): nullity of [A_s^T (x) I - I (x) A_t] stacked over x and y,
// acting on column-major vec(phi).
template <class K>
std::size_t hom_dim(const repdim::Module<K>& s, const repdim::Module<K>& t)
{
    const std::size_t n = s.dim(), m = t.dim();
    const K& f = s.field();
    repdim::Matrix<K> sys(f, 2 * n * m, n * m);
    for (int letter = 0; letter < 2; ++letter) {
        const auto& as = letter ? s.y() : s.x();
        const auto& at = letter ? t.y() : t.x();
        // (phi A_s - A_t phi)(r, c) = sum_k phi(r,k) A_s(k,c) - sum_k A_t(r,k) phi(k,c)
        for (std::size_t r = 0; r < m; ++r)
            for (std::size_t c = 0; c < n; ++c) {
                const std::size_t eq = letter * n * m + c * m + r;
                for (std::size_t k = 0; k < n; ++k)
                    sys(eq, k * m + r) = f.add(sys(eq, k * m + r), as(k, c));
                for (std::size_t k = 0; k < m; ++k)
                    sys(eq, c * m + k) = f.sub(sys(eq, c * m + k), at(r, k));
            }
    }
    return n * m - oracle::rank(sys);
}

// Random string-shaped diagram: grows a tree one vertex at a time along x or
// y arrows in either direction, keeping in/out degree <= 1 per letter.
inline repdim::Diagram random_string_diagram(std::mt19937_64& rng, int vertices)
{
    repdim::Diagram d;
    d.add_vertex("v0");
    std::uniform_int_distribution<int> coin(0, 1);
    for (int attempt = 0; d.size() < vertices && attempt < 200; ++attempt) {
        const int v = std::uniform_int_distribution<int>(0, d.size() - 1)(rng);
        const char letter = coin(rng) ? 'x' : 'y';
        const bool outgoing = coin(rng);
        if (outgoing ? d.has_out_edge(v, letter) : d.has_in_edge(v, letter))
            continue;
        const int w = d.add_vertex("v" + std::to_string(d.size()));
        auto& edges = letter == 'x' ? d.x_edges : d.y_edges;
        edges.emplace_back(outgoing ? v : w, outgoing ? w : v);
    }
    return d;
}

// Random string module over `alg`, retrying until the relations hold.
template <class K>
repdim::Module<K> random_string_module(std::mt19937_64& rng, const K& f, const repdim::MonomialAlgebra& alg,
                                        int max_vertices)
{
    for (;;) {
        const int size = std::uniform_int_distribution<int>(1, max_vertices)(rng);
        try {
            return repdim::from_diagram(f, random_string_diagram(rng, size), alg);
        } catch (const repdim::RelationViolation&) {
        }
    }
}

template <class K>
repdim::Matrix<K> random_matrix(std::mt19937_64& rng, const K& f, std::size_t r, std::size_t c, int density = 2)
{
    repdim::Matrix<K> m(f, r, c);
    std::uniform_int_distribution<int> pick(0, density);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j)
            if (pick(rng) == 0)
                m(i, j) = f.from_int(std::uniform_int_distribution<long>(-3, 3)(rng));
    return m;
}

template <class K>
repdim::Matrix<K> random_invertible(std::mt19937_64& rng, const K& f, std::size_t n)
{
    for (;;) {
        auto m = random_matrix(rng, f, n, n, 1);
        if (oracle::rank(m) == n)
            return m;
    }
}

} // namespace oracle
