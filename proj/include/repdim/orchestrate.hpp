#pragma once

// M_n built from its closed formula and by the vertex-on-top recipe, the
// table of expected resolutions, and the end-to-end verification runs.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "repdim/approx.hpp"

namespace repdim {

// Module named by `label` over `algebra` (Lambda means the regular module).
template <class K>
Module<K> named_module(const K& field, const SummandLabel& label, const MonomialAlgebra& algebra);

// Closed form, in canonical label order:
//   DA[i,j] (i+j <= n), A[i,j] (j > 0, i+j <= n), A[n,0], U[0..n+1], X.
std::vector<SummandLabel> mn_labels(int n);

template <class K>
SummandSet<K> build_Mn(const K& field, int n);

template <class K>
struct RecipeModule {
    Module<K> module;
    std::string origin;                 // e.g. "DA[0,0] + vertex above l0"
    std::optional<SummandLabel> label;  // matching closed-form summand, if any
};

template <class K>
struct RecipeResult {
    int n = 0;
    std::vector<RecipeModule<K>> modules;
    std::vector<std::string> rejections; // extensions that were not allowed, with the reason
    std::vector<SummandLabel> kept;      // summands of M_{n-1} carried over
    std::vector<SummandLabel> removed;   // the old projective
    std::vector<SummandLabel> added;     // new summands (extensions, new projective, its dual)
    std::vector<SummandLabel> missing;   // closed-form summands the recipe did not produce
    std::size_t unmatched = 0;           // recipe modules without a closed-form partner
    bool equal = false;                  // summand-for-summand isomorphic to build_Mn(n)
};

// Starts from the closed form of M_0 and applies the recipe n times: every
// summand of M_{k-1} gains one vertex on top along a y-arrow when that keeps
// the A_k relations (no x-arrow is added, so no square appears), duplicates
// are removed up to isomorphism, A[k-1,0] is dropped, A[k,0] and DA[k,0] are
// added.
template <class K>
RecipeResult<K> build_Mn_by_recipe(const K& field, int n, std::uint64_t seed = 0);

struct FixtureCase {
    std::string id; // "I.1" .. "I.4", "II.1" .. "II.15"
    SummandLabel target;
    std::vector<std::vector<SummandLabel>> terms; // degree 1, 2, ...
    std::string note;                             // reading adopted for this instance, if any
};

// One case per summand label of M_n.  Throws std::logic_error when the case
// predicates do not partition the labels.
std::vector<FixtureCase> expected_resolutions(int n);

struct FixtureComparison {
    std::string id;
    SummandLabel target;
    std::string status; // "match", "warning", "failure"
    std::string detail;
};

std::vector<FixtureComparison> compare_fixtures(int n, const std::vector<ResolutionCertificate>& computed);

struct WitnessReport {
    std::vector<std::size_t> dims;
    bool ok = false;
    std::string detail;
};

// Zigzag modules of length 1..count, each certified indecomposable, with
// pairwise distinct dimensions.
template <class K>
WitnessReport witness_infinite_type(const K& field, const MonomialAlgebra& algebra, int count,
                                    std::uint64_t seed = 0);

struct VerificationOptions {
    std::size_t cap = 10;
    std::uint64_t seed = 0;
    unsigned jobs = 1;
    int witness_count = 10;
    // Negative controls: drop or duplicate a summand before running.
    std::vector<SummandLabel> drop;
    std::vector<SummandLabel> duplicate;
};

struct VerificationCertificate {
    std::string kind; // "an", "lambda", "auslander"
    int n = 0;
    std::string field;
    std::vector<std::pair<SummandLabel, std::size_t>> summands;
    std::vector<ResolutionCertificate> resolutions;
    std::optional<std::size_t> global_dimension;
    std::optional<SummandLabel> attained_by; // first label with pd = global dimension

    GenCogenCertificate gen_cogen;
    SummandCertificate summand_check;
    std::vector<FixtureComparison> fixtures;
    std::optional<bool> recipe_equal;
    std::vector<std::string> recipe_notes;
    std::optional<WitnessReport> witnesses;

    std::string verdict = "failed"; // "theorem-checked", "failed", "undecided"
    std::string failure;            // first failing component
    std::uint64_t seed = 0;
    std::optional<long long> runtime_ms;
};

template <class K>
VerificationCertificate verify_An(const K& field, int n, const VerificationOptions& opt = {});

template <class K>
VerificationCertificate verify_Lambda(const K& field, int n, const VerificationOptions& opt = {});

// k[x]/(x^m) as k[x,y]/(x^m, y) with all m indecomposables C[1..m]; the
// verdict passes when gl.dim <= 2.
template <class K>
VerificationCertificate auslander_sanity(const K& field, int m, const VerificationOptions& opt = {});

// Single JSON document; ordered keys, no timing unless runtime_ms is set.
std::string certificate_json(const VerificationCertificate& cert);

} // namespace repdim
