#pragma once

// Hom spaces as intertwiner nullspaces, endomorphism algebras and their
// Jacobson radicals, and the certificates built on them (indecomposability,
// isomorphism / non-isomorphism).

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "repdim/module.hpp"

namespace repdim {

template <class K>
struct HomSpace {
    std::size_t source_dim = 0;
    std::size_t target_dim = 0;
    // target_dim x source_dim intertwiners.
    std::vector<Matrix<K>> basis;
    // Row-major entry index at which basis[k] is 1 and every other basis
    // element is 0; coordinates are read off these entries.
    std::vector<std::uint32_t> positions;

    std::size_t dim() const { return basis.size(); }
    // Coordinates of an element known to lie in the span.
    Vec<K> coordinates(const Matrix<K>& phi) const;
    Matrix<K> combine(const Vec<K>& coeffs) const;
};

template <class K>
HomSpace<K> hom_basis(const Module<K>& source, const Module<K>& target);

template <class K>
bool is_homomorphism(const Module<K>& source, const Module<K>& target, const Matrix<K>& f);

// f o g for g: A -> B, f: B -> C.
template <class K>
Matrix<K> compose(const Matrix<K>& f, const Matrix<K>& g)
{
    return f * g;
}

template <class K>
Connected<K> kernel_of(const Module<K>& source, const Matrix<K>& f);
template <class K>
Connected<K> image_of(const Module<K>& target, const Matrix<K>& f);
template <class K>
Connected<K> cokernel_of(const Module<K>& target, const Matrix<K>& f);

template <class K>
struct EndoAlgebra {
    HomSpace<K> hom;
    // structure[a][b] = coordinates of basis[a] * basis[b]
    std::vector<std::vector<Vec<K>>> structure;
    std::size_t dim() const { return hom.dim(); }
};

template <class K>
EndoAlgebra<K> endo_algebra(const Module<K>& m);

// Coordinate vectors (w.r.t. e.hom) spanning the Jacobson radical, in reduced
// echelon form.  Characteristic 0: kernel of the trace form of the left
// regular representation.  Characteristic p: iterated p-power trace
// refinement on the natural representation.
template <class K>
std::vector<Vec<K>> algebra_radical(const EndoAlgebra<K>& e);

// Smallest k with rad^k = 0, or nullopt if the span fails to be nilpotent
// within dim + 1 steps.
template <class K>
std::optional<std::size_t> radical_nilpotency_index(const EndoAlgebra<K>& e, const std::vector<Vec<K>>& radical);

template <class K>
struct IndecomposabilityCertificate {
    bool indecomposable = false;
    std::size_t endo_dim = 0;
    std::size_t radical_codim = 0;
    // For decomposable modules: an endomorphism that is neither nilpotent nor
    // invertible (Fitting splitting).
    std::optional<Matrix<K>> splitting_endomorphism;
};

// True iff End(m)/rad is one-dimensional.  Throws Undecided when the quotient
// is larger but no splitting endomorphism is found.
template <class K>
IndecomposabilityCertificate<K> is_indecomposable(const Module<K>& m, std::uint64_t seed = 0);

struct InvariantProfile {
    std::vector<std::pair<std::string, std::size_t>> values;
    // Name of the first differing invariant, or empty.
    std::string first_difference(const InvariantProfile& other) const;
};

template <class K>
InvariantProfile invariant_profile(const Module<K>& m);

template <class K>
struct IsoResult {
    bool isomorphic = false;
    std::optional<Matrix<K>> isomorphism; // source -> target, exact and invertible
    std::string witness;                  // why not isomorphic
};

// Certified isomorphism test.  Never guesses: throws Undecided if neither an
// invertible intertwiner nor a non-isomorphism witness is found.
template <class K>
IsoResult<K> find_isomorphism(const Module<K>& a, const Module<K>& b, std::uint64_t seed = 0);

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0);

} // namespace repdim
