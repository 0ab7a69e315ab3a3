#pragma once

// Monomial quotients k[x,y]/(x^m, y^q, extra monomials).

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace repdim {

// Exponent pair (a, b) standing for x^a y^b.
using Monomial = std::pair<int, int>;

std::string monomial_string(const Monomial& m);

class MonomialAlgebra {
public:
    enum class Kind { Lambda, An, Custom };

    MonomialAlgebra(Kind kind, int n, int x_bound, int y_bound, std::set<Monomial> killed, std::string name);

    Kind kind() const { return kind_; }
    // Parameter n for Lambda_n / A_n; -1 for custom algebras.
    int n() const { return n_; }
    int x_bound() const { return x_bound_; }
    int y_bound() const { return y_bound_; }
    const std::set<Monomial>& killed() const { return killed_; }
    const std::string& name() const { return name_; }

    // Surviving monomials, graded by total degree, larger x-degree first.
    const std::vector<Monomial>& basis() const { return basis_; }
    int dim() const { return static_cast<int>(basis_.size()); }

    bool survives(const Monomial& m) const;
    std::optional<int> index_of(const Monomial& m) const;

    // Monomials generating the defining ideal: x^m, y^q and the extra ones.
    std::vector<Monomial> relations() const;

    bool operator==(const MonomialAlgebra& o) const
    {
        return x_bound_ == o.x_bound_ && y_bound_ == o.y_bound_ && killed_ == o.killed_;
    }
    bool operator!=(const MonomialAlgebra& o) const { return !(*this == o); }

private:
    Kind kind_;
    int n_;
    int x_bound_;
    int y_bound_;
    std::set<Monomial> killed_;
    std::string name_;
    std::vector<Monomial> basis_;
};

// k[x,y]/(x^2, y^{n+2})
MonomialAlgebra lambda_algebra(int n);
// lambda_algebra(n) modulo its socle x y^{n+1}
MonomialAlgebra an_algebra(int n);
// k[x,y]/(x^m, y^q, killed...)
MonomialAlgebra custom_algebra(int x_bound, int y_bound, std::set<Monomial> killed = {});

} // namespace repdim
