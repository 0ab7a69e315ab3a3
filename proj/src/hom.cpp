#include "repdim/hom.hpp"

#include <algorithm>
#include <map>
#include <random>

namespace repdim {

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b)
{
    // splitmix64 over the packed inputs
    std::uint64_t z = seed ^ (a * 0x9E3779B97F4A7C15ull) ^ (b * 0xC2B2AE3D27D4EB4Full);
    z += 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

template <class K>
Vec<K> HomSpace<K>::coordinates(const Matrix<K>& phi) const
{
    Vec<K> c;
    c.reserve(positions.size());
    for (auto p : positions)
        c.push_back(phi.data()[p]);
    return c;
}

template <class K>
Matrix<K> HomSpace<K>::combine(const Vec<K>& coeffs) const
{
    if (basis.empty())
        throw std::logic_error("combine: empty Hom space has no field context");
    const K& f = basis.front().field();
    Matrix<K> out(f, target_dim, source_dim);
    for (std::size_t k = 0; k < basis.size(); ++k)
        if (!f.is_zero(coeffs[k]))
            out = out + basis[k].scaled(coeffs[k]);
    return out;
}

template <class K>
HomSpace<K> hom_basis(const Module<K>& source, const Module<K>& target)
{
    if (source.algebra() != target.algebra())
        throw std::invalid_argument("hom_basis: modules over different algebras");
    const K& f = source.field();
    const std::size_t s = source.dim(), t = target.dim();
    HomSpace<K> hom;
    hom.source_dim = s;
    hom.target_dim = t;
    if (s == 0 || t == 0)
        return hom;

    // Unknown phi(r, c) has index r * s + c.  Equations phi A_s - A_t phi = 0.
    SparseEchelon<K> system(f, t * s);
    for (int letter = 0; letter < 2; ++letter) {
        const Matrix<K>& as = letter == 0 ? source.x() : source.y();
        const Matrix<K>& at = letter == 0 ? target.x() : target.y();
        std::vector<std::vector<std::pair<std::size_t, typename K::Element>>> col_nz(s), row_nz(t);
        for (std::size_t k = 0; k < s; ++k)
            for (std::size_t c = 0; c < s; ++c)
                if (!f.is_zero(as(k, c)))
                    col_nz[c].emplace_back(k, as(k, c));
        for (std::size_t r = 0; r < t; ++r)
            for (std::size_t k = 0; k < t; ++k)
                if (!f.is_zero(at(r, k)))
                    row_nz[r].emplace_back(k, at(r, k));
        for (std::size_t r = 0; r < t; ++r)
            for (std::size_t c = 0; c < s; ++c) {
                if (col_nz[c].empty() && row_nz[r].empty())
                    continue;
                std::map<std::uint32_t, typename K::Element> acc;
                for (const auto& [k, v] : col_nz[c]) {
                    auto [it, fresh] = acc.try_emplace(static_cast<std::uint32_t>(r * s + k), f.zero());
                    it->second = f.add(it->second, v);
                }
                for (const auto& [k, v] : row_nz[r]) {
                    auto [it, fresh] = acc.try_emplace(static_cast<std::uint32_t>(k * s + c), f.zero());
                    it->second = f.sub(it->second, v);
                }
                SparseRow<K> row;
                for (auto& [idx, v] : acc)
                    if (!f.is_zero(v))
                        row.emplace_back(idx, std::move(v));
                if (!row.empty())
                    system.insert(std::move(row));
            }
    }

    std::vector<bool> is_pivot(t * s, false);
    for (auto p : system.pivots())
        is_pivot[p] = true;
    for (std::uint32_t idx = 0; idx < t * s; ++idx)
        if (!is_pivot[idx])
            hom.positions.push_back(idx);
    for (auto& v : system.nullspace()) {
        Matrix<K> phi(f, t, s);
        for (std::size_t idx = 0; idx < v.size(); ++idx)
            phi(idx / s, idx % s) = std::move(v[idx]);
        hom.basis.push_back(std::move(phi));
    }
    return hom;
}

template <class K>
bool is_homomorphism(const Module<K>& source, const Module<K>& target, const Matrix<K>& f)
{
    if (f.rows() != target.dim() || f.cols() != source.dim())
        return false;
    return f * source.x() == target.x() * f && f * source.y() == target.y() * f;
}

template <class K>
Connected<K> kernel_of(const Module<K>& source, const Matrix<K>& f)
{
    return submodule(source, nullspace(f));
}

template <class K>
Connected<K> image_of(const Module<K>& target, const Matrix<K>& f)
{
    return submodule(target, columns_of(f));
}

template <class K>
Connected<K> cokernel_of(const Module<K>& target, const Matrix<K>& f)
{
    return quotient(target, columns_of(f));
}

template <class K>
EndoAlgebra<K> endo_algebra(const Module<K>& m)
{
    EndoAlgebra<K> e;
    e.hom = hom_basis(m, m);
    const std::size_t r = e.hom.dim();
    e.structure.assign(r, std::vector<Vec<K>>(r));
    for (std::size_t a = 0; a < r; ++a)
        for (std::size_t b = 0; b < r; ++b)
            e.structure[a][b] = e.hom.coordinates(e.hom.basis[a] * e.hom.basis[b]);
    return e;
}

namespace {

// Kernel of the trace form (a, b) -> tr(L_a L_b).
std::vector<Vec<Rationals>> radical_impl(const EndoAlgebra<Rationals>& e)
{
    const Rationals f;
    const std::size_t r = e.dim();
    Matrix<Rationals> gram(f, r, r);
    for (std::size_t a = 0; a < r; ++a)
        for (std::size_t b = a; b < r; ++b) {
            Rational tr;
            for (std::size_t k = 0; k < r; ++k)
                for (std::size_t l = 0; l < r; ++l)
                    f.addmul(tr, e.structure[a][l][k], e.structure[b][k][l]);
            gram(a, b) = tr;
            gram(b, a) = tr;
        }
    return nullspace(gram);
}

// g_i(z) = tr(lift(z)^(p^i)) / p^i  mod p
std::uint32_t p_power_trace(const Matrix<PrimeField>& z, std::uint64_t p, unsigned i)
{
    const std::size_t d = z.rows();
    std::uint64_t pi = 1;
    for (unsigned k = 0; k < i; ++k)
        pi *= p;
    const std::uint64_t mod = pi * p;
    // Entries stay below mod; sums of d products fit in 64 bits when
    // mod^2 * d < 2^64, otherwise fall back to 128-bit accumulation.
    const bool narrow = mod < (1ull << 26) && d < (1ull << 12);
    std::vector<std::uint64_t> cur(d * d), tmp(d * d);
    for (std::size_t k = 0; k < d * d; ++k)
        cur[k] = z.data()[k] % mod;
    auto mult = [&](const std::vector<std::uint64_t>& l, const std::vector<std::uint64_t>& r) {
        std::fill(tmp.begin(), tmp.end(), 0);
        for (std::size_t a = 0; a < d; ++a)
            for (std::size_t c = 0; c < d; ++c) {
                const std::uint64_t lac = l[a * d + c];
                if (lac == 0)
                    continue;
                for (std::size_t b = 0; b < d; ++b) {
                    if (r[c * d + b] == 0)
                        continue;
                    if (narrow)
                        tmp[a * d + b] = (tmp[a * d + b] + lac * r[c * d + b]) % mod;
                    else
                        tmp[a * d + b] = static_cast<std::uint64_t>(
                            (static_cast<unsigned __int128>(lac) * r[c * d + b] + tmp[a * d + b]) % mod);
                }
            }
        return tmp;
    };
    // z^(p^i) by i rounds of p-th powers.
    for (unsigned round = 0; round < i; ++round) {
        std::vector<std::uint64_t> base = cur;
        for (std::uint64_t e = 1; e < p; ++e)
            cur = mult(cur, base);
    }
    std::uint64_t tr = 0;
    for (std::size_t k = 0; k < d; ++k)
        tr = (tr + cur[k * d + k]) % mod;
    if (tr % pi != 0)
        throw std::logic_error("p-power trace not divisible by p^i: element outside the previous ideal");
    return static_cast<std::uint32_t>((tr / pi) % p);
}

// Iterated p-power trace refinement: I_{-1} = A and
// I_i = {a in I_{i-1} : g_i(ab) = 0 for all b in A}; rad A = I_l with
// l = floor(log_p(matrix size)).
std::vector<Vec<PrimeField>> radical_impl(const EndoAlgebra<PrimeField>& e)
{
    const std::size_t r = e.dim();
    if (r == 0)
        return {};
    const PrimeField& f = e.hom.basis.front().field();
    const std::uint64_t p = f.characteristic();
    const std::size_t d = e.hom.source_dim;
    unsigned levels = 0;
    for (std::uint64_t pw = p; pw <= d; pw *= p)
        ++levels;

    std::vector<Vec<PrimeField>> ideal;
    for (std::size_t k = 0; k < r; ++k) {
        Vec<PrimeField> v(r, f.zero());
        v[k] = f.one();
        ideal.push_back(std::move(v));
    }
    for (unsigned i = 0; i <= levels && !ideal.empty(); ++i) {
        std::vector<Matrix<PrimeField>> elems;
        for (const auto& c : ideal)
            elems.push_back(e.hom.combine(c));
        Matrix<PrimeField> g(f, r, ideal.size());
        for (std::size_t m = 0; m < r; ++m)
            for (std::size_t k = 0; k < ideal.size(); ++k)
                g(m, k) = p_power_trace(elems[k] * e.hom.basis[m], p, i);
        std::vector<Vec<PrimeField>> next;
        for (const auto& c : nullspace(g)) {
            Vec<PrimeField> v(r, f.zero());
            for (std::size_t k = 0; k < ideal.size(); ++k)
                for (std::size_t q = 0; q < r; ++q)
                    f.addmul(v[q], c[k], ideal[k][q]);
            next.push_back(std::move(v));
        }
        ideal = std::move(next);
    }
    return ideal;
}

} // namespace

template <class K>
std::vector<Vec<K>> algebra_radical(const EndoAlgebra<K>& e)
{
    if (e.dim() == 0)
        return {};
    const K& f = e.hom.basis.front().field();
    SparseEchelon<K> ech(f, e.dim());
    for (const auto& v : radical_impl(e))
        ech.insert(v);
    return ech.basis();
}

template <class K>
std::optional<std::size_t> radical_nilpotency_index(const EndoAlgebra<K>& e, const std::vector<Vec<K>>& radical)
{
    if (radical.empty())
        return 1;
    const K& f = e.hom.basis.front().field();
    const std::size_t r = e.dim();
    auto product = [&](const Vec<K>& a, const Vec<K>& b) {
        Vec<K> out(r, f.zero());
        for (std::size_t x = 0; x < r; ++x) {
            if (f.is_zero(a[x]))
                continue;
            for (std::size_t y = 0; y < r; ++y) {
                if (f.is_zero(b[y]))
                    continue;
                const auto xy = f.mul(a[x], b[y]);
                for (std::size_t k = 0; k < r; ++k)
                    if (!f.is_zero(e.structure[x][y][k]))
                        f.addmul(out[k], xy, e.structure[x][y][k]);
            }
        }
        return out;
    };
    std::vector<Vec<K>> power = radical;
    for (std::size_t k = 1; k <= r + 1; ++k) {
        if (power.empty())
            return k;
        SparseEchelon<K> next(f, r);
        for (const auto& a : power)
            for (const auto& b : radical)
                next.insert(product(a, b));
        power = next.basis();
    }
    return std::nullopt;
}

namespace {

template <class K>
bool is_fitting_splitter(const Matrix<K>& phi)
{
    const std::size_t d = phi.rows();
    const std::size_t rk = rank(phi.power(d));
    return rk > 0 && rk < d;
}

} // namespace

template <class K>
IndecomposabilityCertificate<K> is_indecomposable(const Module<K>& m, std::uint64_t seed)
{
    if (m.dim() == 0)
        throw std::invalid_argument("is_indecomposable: zero module");
    const auto e = endo_algebra(m);
    const auto rad = algebra_radical(e);
    IndecomposabilityCertificate<K> cert;
    cert.endo_dim = e.dim();
    cert.radical_codim = e.dim() - rad.size();
    if (cert.radical_codim == 1) {
        cert.indecomposable = true;
        return cert;
    }
    // Look for an endomorphism that is neither nilpotent nor invertible.
    const K& f = m.field();
    std::vector<Matrix<K>> candidates = e.hom.basis;
    for (std::size_t a = 0; a < e.dim(); ++a)
        for (std::size_t b = a + 1; b < e.dim(); ++b)
            candidates.push_back(e.hom.basis[a] - e.hom.basis[b]);
    for (const auto& c : candidates)
        if (is_fitting_splitter(c)) {
            cert.splitting_endomorphism = c;
            return cert;
        }
    std::mt19937_64 rng(seed);
    for (int attempt = 0; attempt < 200; ++attempt) {
        Vec<K> coeffs(e.dim());
        for (auto& c : coeffs)
            c = f.random(rng);
        Matrix<K> phi = e.hom.combine(coeffs);
        // Shift by the entry at a diagonal position to hit a candidate eigenvalue.
        for (std::size_t k = 0; k < m.dim(); ++k) {
            Matrix<K> shifted = phi - Matrix<K>::identity(f, m.dim()).scaled(phi(k, k));
            if (is_fitting_splitter(shifted)) {
                cert.splitting_endomorphism = shifted;
                return cert;
            }
        }
    }
    throw Undecided("End/rad has dimension " + std::to_string(cert.radical_codim) +
                    " but no splitting endomorphism was found (possibly a non-split residue field)");
}

std::string InvariantProfile::first_difference(const InvariantProfile& other) const
{
    const std::size_t n = std::min(values.size(), other.values.size());
    for (std::size_t k = 0; k < n; ++k)
        if (values[k] != other.values[k])
            return values[k].first + ": " + std::to_string(values[k].second) + " vs " +
                   std::to_string(other.values[k].second);
    if (values.size() != other.values.size())
        return "invariant list length";
    return {};
}

template <class K>
InvariantProfile invariant_profile(const Module<K>& m)
{
    InvariantProfile prof;
    prof.values.emplace_back("dim", m.dim());
    const int ymax = m.algebra().y_bound();
    const int xmax = m.algebra().x_bound();
    for (int a = 0; a < xmax; ++a)
        for (int b = 0; b <= ymax; ++b) {
            if (a + b == 0)
                continue;
            prof.values.emplace_back("rank of " + monomial_string({a, b}), rank(m.act({a, b})));
        }
    // Radical and socle series.
    for (int k = 1; k <= xmax + ymax; ++k) {
        std::vector<Vec<K>> image_cols;
        Matrix<K> stacked(m.field(), 0, m.dim());
        std::vector<Matrix<K>> acts;
        for (int a = 0; a <= k; ++a) {
            const Matrix<K> act = m.act({a, k - a});
            for (std::size_t c = 0; c < m.dim(); ++c)
                image_cols.push_back(act.column(c));
            acts.push_back(act);
        }
        Matrix<K> all(m.field(), acts.size() * m.dim(), m.dim());
        for (std::size_t q = 0; q < acts.size(); ++q)
            all.set_block(q * m.dim(), 0, acts[q]);
        prof.values.emplace_back("dim rad^" + std::to_string(k), span_rank(m.field(), m.dim(), image_cols));
        prof.values.emplace_back("dim soc^" + std::to_string(k), m.dim() - rank(all));
    }
    return prof;
}

template <class K>
IsoResult<K> find_isomorphism(const Module<K>& a, const Module<K>& b, std::uint64_t seed)
{
    if (a.algebra() != b.algebra())
        throw std::invalid_argument("find_isomorphism: modules over different algebras");
    IsoResult<K> res;
    const std::string diff = invariant_profile(a).first_difference(invariant_profile(b));
    if (!diff.empty()) {
        res.witness = "invariant mismatch (" + diff + ")";
        return res;
    }
    const K& f = a.field();
    if (a.dim() == 0) {
        res.isomorphic = true;
        res.isomorphism = Matrix<K>(f, 0, 0);
        return res;
    }
    const auto hom = hom_basis(a, b);
    if (hom.dim() == 0) {
        res.witness = "Hom(a,b) = 0";
        return res;
    }
    auto accept = [&](const Matrix<K>& phi) {
        if (rank(phi) == a.dim()) {
            res.isomorphic = true;
            res.isomorphism = phi;
            return true;
        }
        return false;
    };
    for (const auto& phi : hom.basis)
        if (accept(phi))
            return res;

    if (f.characteristic() == 2 && hom.dim() <= 16) {
        // Exhaust Hom(a,b) over F_2: Gray-code walk through all combinations.
        Matrix<K> phi(f, b.dim(), a.dim());
        const std::uint64_t total = 1ull << hom.dim();
        for (std::uint64_t g = 1; g < total; ++g) {
            const int bit = __builtin_ctzll(g);
            phi = phi + hom.basis[bit];
            if (accept(phi))
                return res;
        }
        res.witness = "no invertible element in Hom(a,b) (exhaustive over F_2, dim " + std::to_string(hom.dim()) + ")";
        return res;
    }

    std::mt19937_64 rng(seed);
    for (int attempt = 0; attempt < 200; ++attempt) {
        Vec<K> coeffs(hom.dim());
        for (auto& c : coeffs)
            c = f.random(rng);
        if (accept(hom.combine(coeffs)))
            return res;
    }

    // Certified path for split-local source: a and b are isomorphic iff some
    // composite a -> b -> a leaves rad End(a).
    const auto ea = endo_algebra(a);
    const auto rad = algebra_radical(ea);
    if (ea.dim() - rad.size() == 1) {
        SparseEchelon<K> rad_span(f, ea.dim());
        for (const auto& v : rad)
            rad_span.insert(v);
        const auto back = hom_basis(b, a);
        for (const auto& g : back.basis)
            for (const auto& phi : hom.basis)
                if (!rad_span.contains(ea.hom.coordinates(g * phi))) {
                    if (accept(phi))
                        return res;
                    throw Undecided("composite leaves the radical but the map is not invertible");
                }
        res.witness = "every composite a -> b -> a lies in rad End(a)";
        return res;
    }
    throw Undecided("isomorphism search exhausted with agreeing invariants");
}

#define REPDIM_INSTANTIATE_HOM(K)                                                                                      \
    template struct HomSpace<K>;                                                                                       \
    template HomSpace<K> hom_basis<K>(const Module<K>&, const Module<K>&);                                             \
    template bool is_homomorphism<K>(const Module<K>&, const Module<K>&, const Matrix<K>&);                            \
    template Connected<K> kernel_of<K>(const Module<K>&, const Matrix<K>&);                                            \
    template Connected<K> image_of<K>(const Module<K>&, const Matrix<K>&);                                             \
    template Connected<K> cokernel_of<K>(const Module<K>&, const Matrix<K>&);                                          \
    template EndoAlgebra<K> endo_algebra<K>(const Module<K>&);                                                         \
    template std::vector<Vec<K>> algebra_radical<K>(const EndoAlgebra<K>&);                                            \
    template std::optional<std::size_t> radical_nilpotency_index<K>(const EndoAlgebra<K>&, const std::vector<Vec<K>>&); \
    template IndecomposabilityCertificate<K> is_indecomposable<K>(const Module<K>&, std::uint64_t);                    \
    template InvariantProfile invariant_profile<K>(const Module<K>&);                                                  \
    template IsoResult<K> find_isomorphism<K>(const Module<K>&, const Module<K>&, std::uint64_t);

REPDIM_INSTANTIATE_HOM(Rationals)
REPDIM_INSTANTIATE_HOM(PrimeField)

} // namespace repdim
