#pragma once

// Finite-dimensional modules over a monomial algebra k[x,y]/I, stored as the
// pair of action matrices (X, Y) on column vectors.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "repdim/algebra.hpp"
#include "repdim/diagram.hpp"
#include "repdim/errors.hpp"
#include "repdim/linalg/matrix.hpp"
#include "repdim/linalg/sparse.hpp"

namespace repdim {

template <class K>
class Module {
public:
    Module(MonomialAlgebra algebra, Matrix<K> x, Matrix<K> y)
        : algebra_(std::move(algebra)), x_(std::move(x)), y_(std::move(y))
    {
        if (!x_.is_square() || !y_.is_square() || x_.rows() != y_.rows())
            throw std::invalid_argument("module actions must be square matrices of equal size");
    }

    static Module zero(const K& field, MonomialAlgebra algebra)
    {
        return Module(std::move(algebra), Matrix<K>(field, 0, 0), Matrix<K>(field, 0, 0));
    }

    const MonomialAlgebra& algebra() const { return algebra_; }
    const K& field() const { return x_.field(); }
    std::size_t dim() const { return x_.rows(); }
    const Matrix<K>& x() const { return x_; }
    const Matrix<K>& y() const { return y_; }

    // Matrix of x^a y^b.
    Matrix<K> act(const Monomial& m) const
    {
        return x_.power(static_cast<std::size_t>(m.first)) * y_.power(static_cast<std::size_t>(m.second));
    }

    // First failing relation, if any.
    std::optional<std::string> relation_violation() const
    {
        if (x_ * y_ != y_ * x_)
            return std::string("xy - yx");
        for (const auto& rel : algebra_.relations())
            if (!act(rel).is_zero())
                return monomial_string(rel);
        return std::nullopt;
    }

    // Throws RelationViolation naming the failing monomial.
    const Module& validate() const
    {
        if (auto bad = relation_violation())
            throw RelationViolation("relation " + *bad + " does not act as zero over " + algebra_.name());
        return *this;
    }

    // Same matrices over another algebra (checked).
    Module over(MonomialAlgebra other) const
    {
        Module m(std::move(other), x_, y_);
        m.validate();
        return m;
    }

private:
    MonomialAlgebra algebra_;
    Matrix<K> x_;
    Matrix<K> y_;
};

// Module map together with the module it connects to the parent: for a
// submodule `map` is the inclusion (parent x sub), for a quotient the
// projection (quotient x parent).
template <class K>
struct Connected {
    Module<K> module;
    Matrix<K> map;
};

template <class K>
Module<K> from_diagram(const K& field, const Diagram& d, const MonomialAlgebra& algebra)
{
    const std::size_t n = d.vertices.size();
    Matrix<K> x(field, n, n), y(field, n, n);
    for (const auto& [s, t] : d.x_edges)
        x(t, s) = field.one();
    for (const auto& [s, t] : d.y_edges)
        y(t, s) = field.one();
    Module<K> m(algebra, std::move(x), std::move(y));
    m.validate();
    return m;
}

// Inverse of from_diagram for 0/1 actions with at most one 1 per column.
template <class K>
Diagram to_diagram(const Module<K>& m)
{
    const K& f = m.field();
    Diagram d;
    for (std::size_t v = 0; v < m.dim(); ++v)
        d.add_vertex("v" + std::to_string(v));
    for (const auto* which : {&m.x(), &m.y()}) {
        auto& edges = which == &m.x() ? d.x_edges : d.y_edges;
        for (std::size_t s = 0; s < m.dim(); ++s) {
            int target = -1;
            for (std::size_t t = 0; t < m.dim(); ++t) {
                const auto& e = (*which)(t, s);
                if (f.is_zero(e))
                    continue;
                if (!f.is_one(e) || target >= 0)
                    throw std::invalid_argument("module is not given by a diagram (non 0/1 action)");
                target = static_cast<int>(t);
            }
            if (target >= 0)
                edges.emplace_back(static_cast<int>(s), target);
        }
    }
    return d;
}

template <class K>
std::string render_module(const Module<K>& m)
{
    return render_diagram(to_diagram(m));
}

// Regular module in the monomial basis of the algebra.
template <class K>
Module<K> regular_module(const K& field, const MonomialAlgebra& algebra)
{
    const auto& basis = algebra.basis();
    const std::size_t n = basis.size();
    Matrix<K> x(field, n, n), y(field, n, n);
    for (std::size_t s = 0; s < n; ++s) {
        if (auto t = algebra.index_of({basis[s].first + 1, basis[s].second}))
            x(*t, s) = field.one();
        if (auto t = algebra.index_of({basis[s].first, basis[s].second + 1}))
            y(*t, s) = field.one();
    }
    Module<K> m(algebra, std::move(x), std::move(y));
    m.validate();
    return m;
}

namespace detail {

inline void check_pair_indices(const char* name, int i, int j, const MonomialAlgebra& algebra)
{
    if (i < 0 || j < 0 || (algebra.n() >= 0 && i + j > algebra.n()))
        throw std::out_of_range(std::string(name) + "[" + std::to_string(i) + "," + std::to_string(j) +
                                "]: need i, j >= 0 and i + j <= n over " + algebra.name());
}

} // namespace detail

template <class K>
Module<K> u_module(const K& field, int i, const MonomialAlgebra& algebra)
{
    const int top = algebra.n() >= 0 ? algebra.n() + 1 : algebra.y_bound() - 1;
    if (i < 0 || i > top)
        throw std::out_of_range("U[" + std::to_string(i) + "]: index out of range over " + algebra.name());
    return from_diagram(field, u_diagram(i), algebra);
}

template <class K>
Module<K> x_module(const K& field, const MonomialAlgebra& algebra)
{
    return from_diagram(field, x_diagram(), algebra);
}

template <class K>
Module<K> a_module(const K& field, int i, int j, const MonomialAlgebra& algebra)
{
    detail::check_pair_indices("A", i, j, algebra);
    return from_diagram(field, a_diagram(i, j), algebra);
}

template <class K>
Module<K> da_module(const K& field, int i, int j, const MonomialAlgebra& algebra)
{
    detail::check_pair_indices("DA", i, j, algebra);
    return from_diagram(field, da_diagram(i, j), algebra);
}

template <class K>
Module<K> zigzag_module(const K& field, int length, const MonomialAlgebra& algebra)
{
    return from_diagram(field, zigzag_diagram(length), algebra);
}

template <class K>
Module<K> x_chain_module(const K& field, int length, const MonomialAlgebra& algebra)
{
    return from_diagram(field, x_chain_diagram(length), algebra);
}

// k-linear dual; the algebra is commutative so the transposed actions define a
// module over the same algebra.
template <class K>
Module<K> dual(const Module<K>& m)
{
    return Module<K>(m.algebra(), m.x().transpose(), m.y().transpose());
}

template <class K>
struct DirectSum {
    Module<K> module;
    std::vector<std::size_t> offsets; // start of each block
};

template <class K>
DirectSum<K> direct_sum(const K& field, const MonomialAlgebra& algebra, const std::vector<Module<K>>& parts)
{
    std::size_t total = 0;
    std::vector<std::size_t> offsets;
    for (const auto& p : parts) {
        if (p.algebra() != algebra)
            throw std::invalid_argument("direct_sum: summands over different algebras");
        offsets.push_back(total);
        total += p.dim();
    }
    Matrix<K> x(field, total, total), y(field, total, total);
    for (std::size_t k = 0; k < parts.size(); ++k) {
        x.set_block(offsets[k], offsets[k], parts[k].x());
        y.set_block(offsets[k], offsets[k], parts[k].y());
    }
    return {Module<K>(algebra, std::move(x), std::move(y)), std::move(offsets)};
}

// Submodule spanned by `vectors` (which must span an invariant subspace).
template <class K>
Connected<K> submodule(const Module<K>& m, const std::vector<Vec<K>>& vectors)
{
    const K& f = m.field();
    SparseEchelon<K> ech(f, m.dim());
    for (const auto& v : vectors)
        ech.insert(v);
    const auto basis = ech.basis();
    const auto pivots = ech.pivots();
    const std::size_t d = basis.size();

    // Coordinates of a vector in the span are its entries at the pivots.
    auto restrict_action = [&](const Matrix<K>& action) {
        Matrix<K> out(f, d, d);
        for (std::size_t c = 0; c < d; ++c) {
            const Vec<K> image = action * basis[c];
            Vec<K> rebuilt(m.dim(), f.zero());
            for (std::size_t r = 0; r < d; ++r) {
                out(r, c) = image[pivots[r]];
                if (!f.is_zero(out(r, c)))
                    for (std::size_t k = 0; k < m.dim(); ++k)
                        f.addmul(rebuilt[k], out(r, c), basis[r][k]);
            }
            for (std::size_t k = 0; k < m.dim(); ++k)
                if (!f.equal(rebuilt[k], image[k]))
                    throw std::logic_error("submodule: subspace is not invariant");
        }
        return out;
    };
    Module<K> sub(m.algebra(), restrict_action(m.x()), restrict_action(m.y()));
    Matrix<K> inclusion = Matrix<K>::from_columns(f, m.dim(), basis);
    return {std::move(sub), std::move(inclusion)};
}

// Quotient by the invariant subspace spanned by `vectors`.  The quotient
// basis is the images of the standard vectors at non-pivot positions.
template <class K>
Connected<K> quotient(const Module<K>& m, const std::vector<Vec<K>>& vectors)
{
    const K& f = m.field();
    SparseEchelon<K> ech(f, m.dim());
    for (const auto& v : vectors)
        ech.insert(v);
    const auto basis = ech.basis();
    const auto pivots = ech.pivots();
    std::vector<bool> is_pivot(m.dim(), false);
    for (auto p : pivots)
        is_pivot[p] = true;
    std::vector<std::size_t> rest;
    for (std::size_t k = 0; k < m.dim(); ++k)
        if (!is_pivot[k])
            rest.push_back(k);

    auto project = [&](Vec<K> v) {
        for (std::size_t r = 0; r < basis.size(); ++r) {
            const auto c = v[pivots[r]];
            if (f.is_zero(c))
                continue;
            for (std::size_t k = 0; k < m.dim(); ++k)
                if (!f.is_zero(basis[r][k]))
                    f.submul(v[k], c, basis[r][k]);
        }
        Vec<K> out(rest.size());
        for (std::size_t k = 0; k < rest.size(); ++k)
            out[k] = v[rest[k]];
        return out;
    };

    Matrix<K> projection(f, rest.size(), m.dim());
    for (std::size_t c = 0; c < m.dim(); ++c) {
        Vec<K> e(m.dim(), f.zero());
        e[c] = f.one();
        const auto col = project(std::move(e));
        for (std::size_t r = 0; r < rest.size(); ++r)
            projection(r, c) = col[r];
    }
    auto induced = [&](const Matrix<K>& action) {
        Matrix<K> out(f, rest.size(), rest.size());
        for (std::size_t c = 0; c < rest.size(); ++c) {
            const auto col = project(action.column(rest[c]));
            for (std::size_t r = 0; r < rest.size(); ++r)
                out(r, c) = col[r];
        }
        return out;
    };
    Module<K> q(m.algebra(), induced(m.x()), induced(m.y()));
    if (projection * m.x() != q.x() * projection || projection * m.y() != q.y() * projection)
        throw std::logic_error("quotient: subspace is not invariant");
    return {std::move(q), std::move(projection)};
}

template <class K>
std::vector<Vec<K>> columns_of(const Matrix<K>& m)
{
    std::vector<Vec<K>> cols;
    for (std::size_t c = 0; c < m.cols(); ++c)
        cols.push_back(m.column(c));
    return cols;
}

// rad m = xm + ym
template <class K>
Connected<K> radical(const Module<K>& m)
{
    auto gens = columns_of(m.x());
    auto more = columns_of(m.y());
    gens.insert(gens.end(), more.begin(), more.end());
    return submodule(m, gens);
}

// soc m = {v : xv = yv = 0}
template <class K>
Connected<K> socle(const Module<K>& m)
{
    Matrix<K> stacked(m.field(), 2 * m.dim(), m.dim());
    stacked.set_block(0, 0, m.x());
    stacked.set_block(m.dim(), 0, m.y());
    return submodule(m, nullspace(stacked));
}

// top m = m / rad m
template <class K>
Connected<K> top(const Module<K>& m)
{
    auto gens = columns_of(m.x());
    auto more = columns_of(m.y());
    gens.insert(gens.end(), more.begin(), more.end());
    return quotient(m, gens);
}

// A_n-module viewed as a Lambda_n-module.
template <class K>
Module<K> inflate(const Module<K>& m)
{
    if (m.algebra().kind() != MonomialAlgebra::Kind::An)
        throw std::invalid_argument("inflate: expected a module over A_n, got " + m.algebra().name());
    return m.over(lambda_algebra(m.algebra().n()));
}

} // namespace repdim
