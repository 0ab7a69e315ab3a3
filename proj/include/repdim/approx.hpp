#pragma once

// Minimal right add(M)-approximations and the projective resolutions of the
// simple End(M)-modules they induce.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "repdim/hom.hpp"
#include "repdim/label.hpp"

namespace repdim {

template <class K>
struct Summand {
    SummandLabel label;
    Module<K> module;
};

template <class K>
struct SummandSet {
    std::vector<Summand<K>> items;

    std::size_t size() const { return items.size(); }
    std::optional<std::size_t> index_of(const SummandLabel& label) const
    {
        for (std::size_t k = 0; k < items.size(); ++k)
            if (items[k].label == label)
                return k;
        return std::nullopt;
    }
    std::vector<SummandLabel> labels() const
    {
        std::vector<SummandLabel> out;
        for (const auto& s : items)
            out.push_back(s.label);
        return out;
    }
};

struct SummandCertificate {
    bool ok = true;
    // Per summand: "indecomposable (End dim d)" or the failure.
    std::vector<std::string> indecomposability;
    // One line per unordered pair that turned out isomorphic, or was undecided.
    std::vector<std::string> problems;
    std::size_t pairs_checked = 0;
};

// Every summand indecomposable, pairwise non-isomorphic.
template <class K>
SummandCertificate certify_summands(const SummandSet<K>& set, std::uint64_t seed = 0);

// Hom spaces between summands with their radical filtration.  hom[i][j]
// holds maps S_i -> S_j.
template <class K>
struct HomTable {
    std::vector<std::vector<HomSpace<K>>> hom;
    std::vector<std::vector<std::vector<Matrix<K>>>> rad;
    // Complement of rad^2 in rad: a basis of irreducible maps modulo rad^2.
    std::vector<std::vector<std::vector<Matrix<K>>>> irreducible;
    std::vector<std::vector<std::size_t>> rad2_dim;
};

template <class K>
HomTable<K> build_hom_table(const SummandSet<K>& set, unsigned jobs = 1);

// One step N -> K of a resolution, N a direct sum of summands.
template <class K>
struct Approximation {
    std::vector<std::size_t> summands; // indices into the SummandSet, sorted
    Module<K> source;                  // the direct sum N
    std::vector<std::size_t> offsets;  // block starts in N
    Matrix<K> map;                     // N -> K
};

// Sink map: minimal right approximation of rad(M, S_t) -> S_t.
template <class K>
Approximation<K> radical_cover(const SummandSet<K>& set, const HomTable<K>& table, std::size_t t);

// Minimal right add(M)-approximation of `target`.
template <class K>
Approximation<K> right_approximation(const SummandSet<K>& set, const HomTable<K>& table, const Module<K>& target);

struct ResolutionTerm {
    std::vector<SummandLabel> summands;
    std::size_t kernel_dim = 0; // dim of the kernel of the step
};

struct ResolutionCertificate {
    SummandLabel target;
    std::size_t pd = 0;
    // terms[d-1] is N_d, the d-th term after Hom(M, S_t).
    std::vector<ResolutionTerm> terms;
    // Soundness checks that were performed, each one line.
    std::vector<std::string> checks;
};

// Minimal projective resolution of the simple End(M)-module at summand t.
// Throws CheckFailure on a failed soundness check and CapExceeded when the
// kernel is still nonzero after `cap` steps.
template <class K>
ResolutionCertificate resolve_simple(const SummandSet<K>& set, const HomTable<K>& table, std::size_t t,
                                     std::size_t cap = 10);

// Resolutions of every simple, in summand order.  `jobs` workers; results do
// not depend on it.
template <class K>
std::vector<ResolutionCertificate> resolve_all(const SummandSet<K>& set, const HomTable<K>& table,
                                               std::size_t cap = 10, unsigned jobs = 1);

std::size_t global_dimension(const std::vector<ResolutionCertificate>& resolutions);

struct GenCogenCertificate {
    bool generator = false;
    bool cogenerator = false;
    std::string generator_witness;   // matching summand or the failure
    std::string cogenerator_witness;
    bool ok() const { return generator && cogenerator; }
};

// The regular module and its dual each occur as a summand.  Both are
// indecomposable for the local algebras used here; that is checked too.
template <class K>
GenCogenCertificate check_generator_cogenerator(const SummandSet<K>& set, const MonomialAlgebra& algebra,
                                                std::uint64_t seed = 0);

// Runs fn(0..count-1) on `jobs` threads.  fn must write only its own slot.
void parallel_for(std::size_t count, unsigned jobs, const std::function<void(std::size_t)>& fn);

} // namespace repdim
