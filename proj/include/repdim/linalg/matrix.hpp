#pragma once

// Dense matrices over an exact field, row-major.  Sizes in this project stay
// small (module dimensions well below a hundred), so the dense kernel skips
// zero entries instead of switching representation.

#include <cstddef>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "repdim/linalg/field.hpp"

namespace repdim {

template <class K>
using Vec = std::vector<typename K::Element>;

template <class K>
class Matrix {
public:
    using Element = typename K::Element;

    Matrix() = default;
    Matrix(K field, std::size_t rows, std::size_t cols)
        : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, field_.zero())
    {
    }

    static Matrix identity(const K& field, std::size_t n)
    {
        Matrix m(field, n, n);
        for (std::size_t i = 0; i < n; ++i)
            m(i, i) = field.one();
        return m;
    }

    // Columns given as vectors of equal length.
    static Matrix from_columns(const K& field, std::size_t rows, const std::vector<Vec<K>>& columns)
    {
        Matrix m(field, rows, columns.size());
        for (std::size_t c = 0; c < columns.size(); ++c) {
            if (columns[c].size() != rows)
                throw std::invalid_argument("from_columns: column length mismatch");
            for (std::size_t r = 0; r < rows; ++r)
                m(r, c) = columns[c][r];
        }
        return m;
    }

    static Matrix from_ints(const K& field, const std::vector<std::vector<long>>& rows)
    {
        const std::size_t nc = rows.empty() ? 0 : rows.front().size();
        Matrix m(field, rows.size(), nc);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (rows[r].size() != nc)
                throw std::invalid_argument("from_ints: ragged rows");
            for (std::size_t c = 0; c < nc; ++c)
                m(r, c) = field.from_int(rows[r][c]);
        }
        return m;
    }

    const K& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Element& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Element& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    const std::vector<Element>& data() const { return data_; }

    Vec<K> column(std::size_t c) const
    {
        Vec<K> v(rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            v[r] = (*this)(r, c);
        return v;
    }

    bool is_zero() const
    {
        for (const auto& e : data_)
            if (!field_.is_zero(e))
                return false;
        return true;
    }

    bool is_identity() const
    {
        if (!is_square())
            return false;
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c)
                if (r == c ? !field_.is_one((*this)(r, c)) : !field_.is_zero((*this)(r, c)))
                    return false;
        return true;
    }

    bool operator==(const Matrix& o) const
    {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            return false;
        for (std::size_t i = 0; i < data_.size(); ++i)
            if (!field_.equal(data_[i], o.data_[i]))
                return false;
        return true;
    }
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    Matrix operator*(const Matrix& o) const
    {
        if (cols_ != o.rows_)
            throw std::invalid_argument("matrix product: shape mismatch");
        Matrix out(field_, rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const Element& a = (*this)(i, k);
                if (field_.is_zero(a))
                    continue;
                for (std::size_t j = 0; j < o.cols_; ++j) {
                    const Element& b = o(k, j);
                    if (!field_.is_zero(b))
                        field_.addmul(out(i, j), a, b);
                }
            }
        return out;
    }

    Vec<K> operator*(const Vec<K>& v) const
    {
        if (v.size() != cols_)
            throw std::invalid_argument("matrix-vector product: shape mismatch");
        Vec<K> out(rows_, field_.zero());
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k)
                if (!field_.is_zero((*this)(i, k)) && !field_.is_zero(v[k]))
                    field_.addmul(out[i], (*this)(i, k), v[k]);
        return out;
    }

    Matrix operator+(const Matrix& o) const { return combine(o, false); }
    Matrix operator-(const Matrix& o) const { return combine(o, true); }

    Matrix scaled(const Element& s) const
    {
        Matrix out(*this);
        for (auto& e : out.data_)
            e = field_.mul(e, s);
        return out;
    }

    Matrix transpose() const
    {
        Matrix out(field_, cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c)
                out(c, r) = (*this)(r, c);
        return out;
    }

    Matrix power(std::size_t e) const
    {
        if (!is_square())
            throw std::invalid_argument("power of non-square matrix");
        Matrix result = identity(field_, rows_);
        for (std::size_t i = 0; i < e; ++i)
            result = result * (*this);
        return result;
    }

    // Copies `block` into this matrix with its top-left corner at (r0, c0).
    void set_block(std::size_t r0, std::size_t c0, const Matrix& block)
    {
        if (r0 + block.rows_ > rows_ || c0 + block.cols_ > cols_)
            throw std::out_of_range("set_block out of range");
        for (std::size_t r = 0; r < block.rows_; ++r)
            for (std::size_t c = 0; c < block.cols_; ++c)
                (*this)(r0 + r, c0 + c) = block(r, c);
    }

    Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const
    {
        if (r0 + nr > rows_ || c0 + nc > cols_)
            throw std::out_of_range("block out of range");
        Matrix out(field_, nr, nc);
        for (std::size_t r = 0; r < nr; ++r)
            for (std::size_t c = 0; c < nc; ++c)
                out(r, c) = (*this)(r0 + r, c0 + c);
        return out;
    }

    std::string to_string() const
    {
        std::ostringstream os;
        for (std::size_t r = 0; r < rows_; ++r) {
            os << '[';
            for (std::size_t c = 0; c < cols_; ++c)
                os << (c ? " " : "") << field_.to_string((*this)(r, c));
            os << "]\n";
        }
        return os.str();
    }

private:
    Matrix combine(const Matrix& o, bool subtract) const
    {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw std::invalid_argument("matrix sum: shape mismatch");
        Matrix out(*this);
        for (std::size_t i = 0; i < data_.size(); ++i)
            out.data_[i] = subtract ? field_.sub(data_[i], o.data_[i]) : field_.add(data_[i], o.data_[i]);
        return out;
    }

    K field_{};
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Element> data_;
};

template <class K>
struct RrefResult {
    Matrix<K> matrix;
    std::vector<std::size_t> pivots;
    std::size_t rank = 0;
};

template <class K>
RrefResult<K> rref(Matrix<K> m)
{
    const K& f = m.field();
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    std::vector<std::size_t> nz; // nonzero columns of the pivot row
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t sel = row;
        while (sel < m.rows() && f.is_zero(m(sel, col)))
            ++sel;
        if (sel == m.rows())
            continue;
        if (sel != row)
            for (std::size_t c = 0; c < m.cols(); ++c)
                std::swap(m(sel, c), m(row, c));
        const auto inv = f.inv(m(row, col));
        nz.clear();
        for (std::size_t c = col; c < m.cols(); ++c)
            if (!f.is_zero(m(row, c))) {
                m(row, c) = f.mul(m(row, c), inv);
                nz.push_back(c);
            }
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == row || f.is_zero(m(r, col)))
                continue;
            const auto factor = m(r, col);
            for (std::size_t c : nz)
                f.submul(m(r, c), factor, m(row, c));
        }
        pivots.push_back(col);
        ++row;
    }
    return {std::move(m), pivots, pivots.size()};
}

template <class K>
std::size_t rank(const Matrix<K>& m)
{
    return rref(m).rank;
}

// Kernel basis.  Vector k has a 1 at the k-th free column and 0 at every
// other free column, so coordinates of a kernel vector are read off the free
// positions.
template <class K>
std::vector<Vec<K>> nullspace(const Matrix<K>& m)
{
    const K& f = m.field();
    const auto red = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : red.pivots)
        is_pivot[p] = true;
    std::vector<Vec<K>> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free])
            continue;
        Vec<K> v(m.cols(), f.zero());
        v[free] = f.one();
        for (std::size_t r = 0; r < red.rank; ++r)
            v[red.pivots[r]] = f.neg(red.matrix(r, free));
        basis.push_back(std::move(v));
    }
    return basis;
}

// std::nullopt signals a singular input.
template <class K>
std::optional<Matrix<K>> invert(const Matrix<K>& m)
{
    if (!m.is_square())
        throw std::invalid_argument("invert: matrix is not square");
    const std::size_t n = m.rows();
    Matrix<K> aug(m.field(), n, 2 * n);
    aug.set_block(0, 0, m);
    aug.set_block(0, n, Matrix<K>::identity(m.field(), n));
    const auto red = rref(aug);
    if (red.rank < n || (n > 0 && red.pivots[n - 1] != n - 1))
        return std::nullopt;
    return red.matrix.block(0, n, n, n);
}

template <class K>
std::ostream& operator<<(std::ostream& os, const Matrix<K>& m)
{
    return os << m.to_string();
}

} // namespace repdim
