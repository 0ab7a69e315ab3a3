#pragma once

// Names of the summands that occur in generator-cogenerators.
//
//   A[i,j]   ladder module with a j-step extension of its x-image rail
//   DA[i,j]  its injective-side counterpart
//   U[i]     uniserial y-chain with i+1 basis vectors
//   X        two-dimensional x-string
//   Lambda   regular module of Lambda_n
//   C[l]     x-chain with l basis vectors (used for k[x]/(x^m))

#include <compare>
#include <optional>
#include <string>
#include <vector>

namespace repdim {

struct SummandLabel {
    enum class Kind { A, DA, U, X, Lambda, Chain };

    Kind kind = Kind::U;
    int i = 0;
    int j = 0;

    static SummandLabel a(int i, int j) { return {Kind::A, i, j}; }
    static SummandLabel da(int i, int j) { return {Kind::DA, i, j}; }
    static SummandLabel u(int i) { return {Kind::U, i, 0}; }
    static SummandLabel x() { return {Kind::X, 0, 0}; }
    static SummandLabel lambda() { return {Kind::Lambda, 0, 0}; }
    static SummandLabel chain(int len) { return {Kind::Chain, len, 0}; }

    std::string str() const;

    auto operator<=>(const SummandLabel&) const = default;
};

// Parses the canonical grammar.  `P` resolves to A[n,0] and therefore needs n.
// Throws std::invalid_argument on malformed input.
SummandLabel parse_label(const std::string& text, std::optional<int> n = std::nullopt);

// Sorted, comma separated, e.g. "{A[0,0], U[1], X}".
std::string multiset_string(std::vector<SummandLabel> labels);

} // namespace repdim
