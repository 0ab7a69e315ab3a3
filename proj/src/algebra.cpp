#include "repdim/algebra.hpp"

#include <algorithm>
#include <stdexcept>

namespace repdim {

std::string monomial_string(const Monomial& m)
{
    if (m.first == 0 && m.second == 0)
        return "1";
    std::string s;
    if (m.first > 0)
        s += m.first == 1 ? "x" : "x^" + std::to_string(m.first);
    if (m.second > 0)
        s += m.second == 1 ? "y" : "y^" + std::to_string(m.second);
    return s;
}

MonomialAlgebra::MonomialAlgebra(Kind kind, int n, int x_bound, int y_bound, std::set<Monomial> killed,
                                 std::string name)
    : kind_(kind), n_(n), x_bound_(x_bound), y_bound_(y_bound), killed_(std::move(killed)), name_(std::move(name))
{
    if (x_bound < 1 || y_bound < 1)
        throw std::invalid_argument("monomial algebra bounds must be positive");
    for (int a = 0; a < x_bound_; ++a)
        for (int b = 0; b < y_bound_; ++b)
            if (survives({a, b}))
                basis_.emplace_back(a, b);
    std::stable_sort(basis_.begin(), basis_.end(), [](const Monomial& l, const Monomial& r) {
        const int dl = l.first + l.second, dr = r.first + r.second;
        if (dl != dr)
            return dl < dr;
        return l.first > r.first;
    });
}

bool MonomialAlgebra::survives(const Monomial& m) const
{
    if (m.first < 0 || m.second < 0 || m.first >= x_bound_ || m.second >= y_bound_)
        return false;
    for (const auto& k : killed_)
        if (m.first >= k.first && m.second >= k.second)
            return false;
    return true;
}

std::optional<int> MonomialAlgebra::index_of(const Monomial& m) const
{
    auto it = std::find(basis_.begin(), basis_.end(), m);
    if (it == basis_.end())
        return std::nullopt;
    return static_cast<int>(it - basis_.begin());
}

std::vector<Monomial> MonomialAlgebra::relations() const
{
    std::vector<Monomial> rel{{x_bound_, 0}, {0, y_bound_}};
    rel.insert(rel.end(), killed_.begin(), killed_.end());
    return rel;
}

MonomialAlgebra lambda_algebra(int n)
{
    if (n < 0)
        throw std::invalid_argument("lambda_algebra: n must be non-negative");
    return MonomialAlgebra(MonomialAlgebra::Kind::Lambda, n, 2, n + 2, {}, "Lambda_" + std::to_string(n));
}

MonomialAlgebra an_algebra(int n)
{
    if (n < 0)
        throw std::invalid_argument("an_algebra: n must be non-negative");
    return MonomialAlgebra(MonomialAlgebra::Kind::An, n, 2, n + 2, {{1, n + 1}}, "A_" + std::to_string(n));
}

MonomialAlgebra custom_algebra(int x_bound, int y_bound, std::set<Monomial> killed)
{
    std::string name = "k[x,y]/(" + monomial_string({x_bound, 0}) + "," + monomial_string({0, y_bound});
    for (const auto& k : killed)
        name += "," + monomial_string(k);
    name += ")";
    return MonomialAlgebra(MonomialAlgebra::Kind::Custom, -1, x_bound, y_bound, std::move(killed), name);
}

} // namespace repdim
