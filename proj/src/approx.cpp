#include "repdim/approx.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

namespace repdim {

void parallel_for(std::size_t count, unsigned jobs, const std::function<void(std::size_t)>& fn)
{
    if (jobs <= 1 || count <= 1) {
        for (std::size_t k = 0; k < count; ++k)
            fn(k);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(count);
    auto worker = [&] {
        for (std::size_t k = next++; k < count; k = next++) {
            try {
                fn(k);
            } catch (...) {
                errors[k] = std::current_exception();
            }
        }
    };
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < std::min<std::size_t>(jobs, count); ++w)
        pool.emplace_back(worker);
    for (auto& th : pool)
        th.join();
    // Rethrow the error of the lowest index so failures are reproducible.
    for (auto& e : errors)
        if (e)
            std::rethrow_exception(e);
}

template <class K>
SummandCertificate certify_summands(const SummandSet<K>& set, std::uint64_t seed)
{
    SummandCertificate cert;
    for (std::size_t a = 0; a < set.size(); ++a) {
        const auto& s = set.items[a];
        try {
            const auto ind = is_indecomposable(s.module, mix_seed(seed, a));
            if (ind.indecomposable) {
                cert.indecomposability.push_back(s.label.str() + ": indecomposable (End dim " +
                                                  std::to_string(ind.endo_dim) + ")");
            } else {
                cert.ok = false;
                cert.indecomposability.push_back(s.label.str() + ": decomposable (End/rad dim " +
                                                  std::to_string(ind.radical_codim) + ")");
            }
        } catch (const Undecided& e) {
            cert.ok = false;
            cert.indecomposability.push_back(s.label.str() + ": undecided (" + e.what() + ")");
        }
    }
    for (std::size_t a = 0; a < set.size(); ++a)
        for (std::size_t b = a + 1; b < set.size(); ++b) {
            ++cert.pairs_checked;
            const auto& sa = set.items[a];
            const auto& sb = set.items[b];
            try {
                if (find_isomorphism(sa.module, sb.module, mix_seed(seed, a, b)).isomorphic) {
                    cert.ok = false;
                    cert.problems.push_back(sa.label.str() + " is isomorphic to " + sb.label.str());
                }
            } catch (const Undecided& e) {
                cert.ok = false;
                cert.problems.push_back(sa.label.str() + " vs " + sb.label.str() + ": undecided (" + e.what() + ")");
            }
        }
    return cert;
}

template <class K>
HomTable<K> build_hom_table(const SummandSet<K>& set, unsigned jobs)
{
    const std::size_t m = set.size();
    HomTable<K> table;
    table.hom.assign(m, std::vector<HomSpace<K>>(m));
    table.rad.assign(m, std::vector<std::vector<Matrix<K>>>(m));
    table.irreducible.assign(m, std::vector<std::vector<Matrix<K>>>(m));
    table.rad2_dim.assign(m, std::vector<std::size_t>(m, 0));

    parallel_for(m * m, jobs, [&](std::size_t idx) {
        const std::size_t i = idx / m, j = idx % m;
        if (i == j) {
            const auto e = endo_algebra(set.items[i].module);
            for (const auto& coords : algebra_radical(e))
                table.rad[i][i].push_back(e.hom.combine(coords));
            table.hom[i][i] = e.hom;
        } else {
            // Summands are pairwise non-isomorphic indecomposables, so every
            // map between distinct ones is radical.
            table.hom[i][j] = hom_basis(set.items[i].module, set.items[j].module);
            table.rad[i][j] = table.hom[i][j].basis;
        }
    });

    parallel_for(m * m, jobs, [&](std::size_t idx) {
        const std::size_t i = idx / m, j = idx % m;
        const auto& hij = table.hom[i][j];
        if (table.rad[i][j].empty())
            return;
        const K& f = set.items[i].module.field();
        SparseEchelon<K> rad2(f, hij.dim());
        for (std::size_t k = 0; k < m; ++k)
            for (const auto& g : table.rad[k][j])
                for (const auto& h : table.rad[i][k])
                    rad2.insert(hij.coordinates(g * h));
        table.rad2_dim[i][j] = rad2.rank();
        for (const auto& r : table.rad[i][j])
            if (rad2.insert(hij.coordinates(r)))
                table.irreducible[i][j].push_back(r);
    });
    return table;
}

namespace {

template <class K>
Approximation<K> assemble(const SummandSet<K>& set, std::vector<std::pair<std::size_t, Matrix<K>>> pieces,
                          std::size_t target_dim, const K& f)
{
    std::stable_sort(pieces.begin(), pieces.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    Approximation<K> app{{}, Module<K>::zero(f, set.items.front().module.algebra()), {}, Matrix<K>(f, target_dim, 0)};
    std::vector<Module<K>> parts;
    for (const auto& [idx, map] : pieces) {
        app.summands.push_back(idx);
        parts.push_back(set.items[idx].module);
    }
    auto sum = direct_sum(f, set.items.front().module.algebra(), parts);
    app.source = std::move(sum.module);
    app.offsets = std::move(sum.offsets);
    app.map = Matrix<K>(f, target_dim, app.source.dim());
    for (std::size_t k = 0; k < pieces.size(); ++k)
        app.map.set_block(0, app.offsets[k], pieces[k].second);
    return app;
}

// Approximation of `target` given its Hom spaces from every summand.
template <class K>
Approximation<K> approximate(const SummandSet<K>& set, const HomTable<K>& table, const Module<K>& target,
                             const std::vector<HomSpace<K>>& homs)
{
    const K& f = target.field();
    const std::size_t m = set.size();
    std::vector<std::pair<std::size_t, Matrix<K>>> pieces;
    for (std::size_t i = 0; i < m; ++i) {
        const auto& v = homs[i];
        if (v.dim() == 0)
            continue;
        // (V J)_i = sum_j Hom(S_j, target) o rad(S_i, S_j)
        SparseEchelon<K> vj(f, v.dim());
        for (std::size_t j = 0; j < m; ++j)
            for (const auto& h : homs[j].basis)
                for (const auto& r : table.rad[i][j])
                    vj.insert(v.coordinates(h * r));
        for (const auto& b : v.basis)
            if (vj.insert(v.coordinates(b)))
                pieces.emplace_back(i, b);
    }
    return assemble(set, std::move(pieces), target.dim(), f);
}

template <class K>
std::vector<HomSpace<K>> homs_into(const SummandSet<K>& set, const Module<K>& target)
{
    std::vector<HomSpace<K>> out;
    for (const auto& s : set.items)
        out.push_back(hom_basis(s.module, target));
    return out;
}

// Image of Hom(S_i, N) -> Hom(S_i, target) under app.map, as coordinates in `into`.
template <class K>
SparseEchelon<K> image_span(const HomTable<K>& table, const Approximation<K>& app, std::size_t i,
                            const HomSpace<K>& into, const K& f)
{
    SparseEchelon<K> span(f, into.dim());
    for (std::size_t b = 0; b < app.summands.size(); ++b) {
        const std::size_t j = app.summands[b];
        const auto& hj = table.hom[i][j];
        if (hj.dim() == 0)
            continue;
        const Matrix<K> block = app.map.block(0, app.offsets[b], app.map.rows(), hj.target_dim);
        for (const auto& h : hj.basis)
            span.insert(into.coordinates(block * h));
    }
    return span;
}

template <class K>
std::size_t count_of(const Approximation<K>& app, std::size_t i)
{
    return static_cast<std::size_t>(std::count(app.summands.begin(), app.summands.end(), i));
}

template <class K>
std::size_t hom_dim_into_sum(const HomTable<K>& table, const Approximation<K>& app, std::size_t i)
{
    std::size_t d = 0;
    for (auto j : app.summands)
        d += table.hom[i][j].dim();
    return d;
}

} // namespace

template <class K>
Approximation<K> radical_cover(const SummandSet<K>& set, const HomTable<K>& table, std::size_t t)
{
    const K& f = set.items[t].module.field();
    std::vector<std::pair<std::size_t, Matrix<K>>> pieces;
    for (std::size_t i = 0; i < set.size(); ++i)
        for (const auto& r : table.irreducible[i][t])
            pieces.emplace_back(i, r);
    return assemble(set, std::move(pieces), set.items[t].module.dim(), f);
}

template <class K>
Approximation<K> right_approximation(const SummandSet<K>& set, const HomTable<K>& table, const Module<K>& target)
{
    return approximate(set, table, target, homs_into(set, target));
}

template <class K>
ResolutionCertificate resolve_simple(const SummandSet<K>& set, const HomTable<K>& table, std::size_t t,
                                     std::size_t cap)
{
    const std::size_t m = set.size();
    const auto& st = set.items[t];
    const K& f = st.module.field();
    ResolutionCertificate cert;
    cert.target = st.label;
    const std::string who = "resolution of " + st.label.str();
    auto fail = [&](const std::string& what) { throw CheckFailure(who, what); };

    // The simple End(M)-module at t is Hom(M, S_t) / rad(M, S_t).
    std::size_t top_dim = 0;
    for (std::size_t i = 0; i < m; ++i)
        top_dim += table.hom[i][t].dim() - table.rad[i][t].size();
    if (top_dim != 1)
        fail("Hom(M,T)/rad(M,T) has dimension " + std::to_string(top_dim) + ", expected 1");
    cert.checks.push_back("simple top: dim Hom(M,T) - dim rad(M,T) = 1");

    Module<K> prev_target = st.module;
    Matrix<K> prev_inclusion = Matrix<K>::identity(f, st.module.dim()); // K_{d-1} -> N_{d-1}
    std::optional<Matrix<K>> prev_boundary;                              // N_{d-1} -> N_{d-2}
    std::vector<HomSpace<K>> homs; // Hom(S_i, K_{d-1}); for d = 1 the table column
    for (std::size_t i = 0; i < m; ++i)
        homs.push_back(table.hom[i][t]);

    for (std::size_t d = 1;; ++d) {
        if (d > cap)
            throw CapExceeded(who + ": kernel still nonzero after " + std::to_string(cap) + " steps");
        Approximation<K> app =
            d == 1 ? radical_cover(set, table, t) : approximate(set, table, prev_target, homs);
        if (app.summands.empty()) {
            if (d == 1) {
                cert.checks.push_back("rad(M,T) = 0: the simple is projective");
                cert.pd = 0;
                return cert;
            }
            fail("nonzero kernel at step " + std::to_string(d) + " with Hom(M, K) = 0");
        }
        if (!is_homomorphism(app.source, prev_target, app.map))
            fail("step " + std::to_string(d) + " map is not a module map");

        // Hom(M, N_d) -> Hom(M, K_{d-1}) hits rad(M, T) at d = 1 and everything later.
        std::vector<std::size_t> image_dims(m);
        for (std::size_t i = 0; i < m; ++i) {
            auto span = image_span(table, app, i, homs[i], f);
            image_dims[i] = span.rank();
            const std::size_t want = d == 1 ? table.rad[i][t].size() : homs[i].dim();
            if (image_dims[i] != want)
                fail("step " + std::to_string(d) + ": image in Hom(" + set.items[i].label.str() + ", K) has dim " +
                     std::to_string(image_dims[i]) + ", expected " + std::to_string(want));
            if (d == 1) {
                SparseEchelon<K> radspan(f, homs[i].dim());
                for (const auto& r : table.rad[i][t])
                    radspan.insert(homs[i].coordinates(r));
                for (const auto& v : span.basis())
                    if (!radspan.contains(v))
                        fail("first step leaves rad(M, T)");
            }
        }

        const Matrix<K> boundary = prev_inclusion * app.map; // N_d -> N_{d-1}
        if (prev_boundary && !(*prev_boundary * boundary).is_zero())
            fail("boundary composite at step " + std::to_string(d) + " is nonzero");

        auto kernel = kernel_of(app.source, app.map);
        ResolutionTerm term;
        for (auto j : app.summands)
            term.summands.push_back(set.items[j].label);
        term.kernel_dim = kernel.module.dim();
        cert.terms.push_back(term);

        std::vector<HomSpace<K>> next_homs = homs_into(set, kernel.module);
        for (std::size_t i = 0; i < m; ++i) {
            const std::size_t lhs = next_homs[i].dim();
            const std::size_t rhs = hom_dim_into_sum(table, app, i) - image_dims[i];
            if (lhs != rhs)
                fail("exactness at step " + std::to_string(d) + " for " + set.items[i].label.str() + ": " +
                     std::to_string(lhs) + " != " + std::to_string(rhs));
        }
        // Minimality (Nakayama): Hom(M, K_d) lies in rad Hom(M, N_d), whose
        // block at a summand S_j is rad(S_i, S_j).  Only j = i can fail.
        for (std::size_t i = 0; i < m; ++i) {
            if (next_homs[i].dim() == 0 || count_of(app, i) == 0)
                continue;
            SparseEchelon<K> radspan(f, table.hom[i][i].dim());
            for (const auto& r : table.rad[i][i])
                radspan.insert(table.hom[i][i].coordinates(r));
            for (const auto& h : next_homs[i].basis) {
                const Matrix<K> into_n = kernel.map * h;
                for (std::size_t b = 0; b < app.summands.size(); ++b)
                    if (app.summands[b] == i &&
                        !radspan.contains(table.hom[i][i].coordinates(
                            into_n.block(app.offsets[b], 0, set.items[i].module.dim(), into_n.cols()))))
                        fail("step " + std::to_string(d) + " is not right minimal at " + set.items[i].label.str());
            }
        }
        cert.checks.push_back("step " + std::to_string(d) + ": " + std::to_string(app.summands.size()) +
                              " summands, surjective on Hom(M,-), exact, kernel dim " +
                              std::to_string(term.kernel_dim));

        if (kernel.module.dim() == 0) {
            if (d > 1 && !(app.source.dim() == prev_target.dim() && rank(app.map) == app.source.dim()))
                fail("terminal map is not an isomorphism");
            cert.pd = d;
            return cert;
        }
        prev_boundary = boundary;
        prev_inclusion = kernel.map;
        prev_target = std::move(kernel.module);
        homs = std::move(next_homs);
    }
}

template <class K>
std::vector<ResolutionCertificate> resolve_all(const SummandSet<K>& set, const HomTable<K>& table, std::size_t cap,
                                               unsigned jobs)
{
    std::vector<ResolutionCertificate> out(set.size());
    parallel_for(set.size(), jobs, [&](std::size_t t) { out[t] = resolve_simple(set, table, t, cap); });
    return out;
}

std::size_t global_dimension(const std::vector<ResolutionCertificate>& resolutions)
{
    std::size_t g = 0;
    for (const auto& r : resolutions)
        g = std::max(g, r.pd);
    return g;
}

template <class K>
GenCogenCertificate check_generator_cogenerator(const SummandSet<K>& set, const MonomialAlgebra& algebra,
                                                std::uint64_t seed)
{
    GenCogenCertificate cert;
    const K& f = set.items.front().module.field();
    const Module<K> reg = regular_module(f, algebra);
    const Module<K> dreg = dual(reg);
    auto locate = [&](const Module<K>& target, bool& found, std::string& witness, const char* what) {
        if (!is_indecomposable(target, seed).indecomposable) {
            witness = std::string(what) + " is decomposable";
            return;
        }
        for (std::size_t k = 0; k < set.size(); ++k)
            if (find_isomorphism(target, set.items[k].module, mix_seed(seed, k)).isomorphic) {
                found = true;
                witness = set.items[k].label.str();
                return;
            }
        witness = std::string("no summand is isomorphic to the ") + what;
    };
    locate(reg, cert.generator, cert.generator_witness, "regular module");
    locate(dreg, cert.cogenerator, cert.cogenerator_witness, "dual of the regular module");
    return cert;
}

#define REPDIM_INSTANTIATE_APPROX(K)                                                                                   \
    template SummandCertificate certify_summands<K>(const SummandSet<K>&, std::uint64_t);                             \
    template HomTable<K> build_hom_table<K>(const SummandSet<K>&, unsigned);                                           \
    template Approximation<K> radical_cover<K>(const SummandSet<K>&, const HomTable<K>&, std::size_t);                 \
    template Approximation<K> right_approximation<K>(const SummandSet<K>&, const HomTable<K>&, const Module<K>&);     \
    template ResolutionCertificate resolve_simple<K>(const SummandSet<K>&, const HomTable<K>&, std::size_t,           \
                                                     std::size_t);                                                     \
    template std::vector<ResolutionCertificate> resolve_all<K>(const SummandSet<K>&, const HomTable<K>&, std::size_t, \
                                                               unsigned);                                             \
    template GenCogenCertificate check_generator_cogenerator<K>(const SummandSet<K>&, const MonomialAlgebra&,         \
                                                                std::uint64_t);

REPDIM_INSTANTIATE_APPROX(Rationals)
REPDIM_INSTANTIATE_APPROX(PrimeField)

} // namespace repdim
