#pragma once

// Sparse rows and an incremental echelon basis.  The intertwiner systems
// behind every Hom computation have at most a handful of nonzeros per
// equation, and spans of composed maps are built one vector at a time, so
// both go through this structure rather than a dense elimination.

#include <algorithm>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "repdim/linalg/matrix.hpp"

namespace repdim {

template <class K>
using SparseRow = std::vector<std::pair<std::uint32_t, typename K::Element>>;

template <class K>
SparseRow<K> to_sparse(const K& f, const Vec<K>& v)
{
    SparseRow<K> row;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!f.is_zero(v[i]))
            row.emplace_back(static_cast<std::uint32_t>(i), v[i]);
    return row;
}

template <class K>
SparseRow<K> to_sparse(const Matrix<K>& m)
{
    return to_sparse(m.field(), m.data());
}

// Rows are kept with leading coefficient 1 and pairwise distinct leading
// columns.  Insertion reduces only leading entries; `finalize` back-substitutes
// to fully reduced form.
template <class K>
class SparseEchelon {
public:
    using Element = typename K::Element;

    SparseEchelon(K field, std::size_t ncols) : field_(std::move(field)), ncols_(ncols) {}

    std::size_t cols() const { return ncols_; }
    std::size_t rank() const { return rows_.size(); }

    // Returns true when the row was independent of the rows already present.
    bool insert(SparseRow<K> row)
    {
        reduce_leading(row);
        if (row.empty())
            return false;
        const Element inv = field_.inv(row.front().second);
        for (auto& [c, v] : row)
            v = field_.mul(v, inv);
        const auto lead = row.front().first;
        rows_.emplace(lead, std::move(row));
        reduced_ = false;
        return true;
    }

    bool insert(const Vec<K>& v) { return insert(to_sparse(field_, v)); }

    bool contains(SparseRow<K> row) const
    {
        reduce_leading(row);
        return row.empty();
    }
    bool contains(const Vec<K>& v) const { return contains(to_sparse(field_, v)); }

    // Fully reduced form: every pivot column is zero outside its own row.
    void finalize()
    {
        if (reduced_)
            return;
        // Descending pivot order; each row only needs pivots to its right.
        for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) {
            SparseRow<K>& row = it->second;
            bool changed = true;
            while (changed) {
                changed = false;
                for (std::size_t k = 1; k < row.size(); ++k) {
                    auto piv = rows_.find(row[k].first);
                    if (piv == rows_.end())
                        continue;
                    const Element factor = row[k].second;
                    row = axpy(row, factor, piv->second);
                    changed = true;
                    break;
                }
            }
        }
        reduced_ = true;
    }

    std::vector<std::uint32_t> pivots() const
    {
        std::vector<std::uint32_t> p;
        for (const auto& [c, r] : rows_)
            p.push_back(c);
        return p;
    }

    // Kernel basis of the accumulated equations, normalized like `nullspace`.
    std::vector<Vec<K>> nullspace()
    {
        finalize();
        std::vector<bool> is_pivot(ncols_, false);
        for (const auto& [c, r] : rows_)
            is_pivot[c] = true;
        std::vector<std::size_t> free_index(ncols_, 0);
        std::vector<std::size_t> frees;
        for (std::size_t c = 0; c < ncols_; ++c)
            if (!is_pivot[c]) {
                free_index[c] = frees.size();
                frees.push_back(c);
            }
        std::vector<Vec<K>> basis(frees.size(), Vec<K>(ncols_, field_.zero()));
        for (std::size_t k = 0; k < frees.size(); ++k)
            basis[k][frees[k]] = field_.one();
        for (const auto& [pc, row] : rows_)
            for (std::size_t k = 1; k < row.size(); ++k)
                basis[free_index[row[k].first]][pc] = field_.neg(row[k].second);
        return basis;
    }

    // Basis rows as dense vectors, in pivot order (reduced form).
    std::vector<Vec<K>> basis()
    {
        finalize();
        std::vector<Vec<K>> out;
        for (const auto& [c, row] : rows_) {
            Vec<K> v(ncols_, field_.zero());
            for (const auto& [j, e] : row)
                v[j] = e;
            out.push_back(std::move(v));
        }
        return out;
    }

private:
    SparseRow<K> axpy(const SparseRow<K>& a, const Element& factor, const SparseRow<K>& b) const
    {
        // a - factor * b
        SparseRow<K> out;
        out.reserve(a.size() + b.size());
        std::size_t i = 0, j = 0;
        while (i < a.size() || j < b.size()) {
            if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
                out.push_back(a[i++]);
            } else if (i == a.size() || b[j].first < a[i].first) {
                out.emplace_back(b[j].first, field_.neg(field_.mul(factor, b[j].second)));
                ++j;
            } else {
                Element v = a[i].second;
                field_.submul(v, factor, b[j].second);
                if (!field_.is_zero(v))
                    out.emplace_back(a[i].first, std::move(v));
                ++i;
                ++j;
            }
        }
        return out;
    }

    void reduce_leading(SparseRow<K>& row) const
    {
        while (!row.empty()) {
            auto piv = rows_.find(row.front().first);
            if (piv == rows_.end())
                return;
            const Element factor = row.front().second;
            row = axpy(row, factor, piv->second);
        }
    }

    K field_;
    std::size_t ncols_;
    std::map<std::uint32_t, SparseRow<K>> rows_;
    bool reduced_ = true;
};

// Rank of a list of vectors.
template <class K>
std::size_t span_rank(const K& f, std::size_t len, const std::vector<Vec<K>>& vectors)
{
    SparseEchelon<K> e(f, len);
    for (const auto& v : vectors)
        e.insert(v);
    return e.rank();
}

} // namespace repdim
