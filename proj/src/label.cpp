#include "repdim/label.hpp"

#include <algorithm>
#include <cctype>
#include <regex>
#include <stdexcept>

namespace repdim {

std::string SummandLabel::str() const
{
    switch (kind) {
    case Kind::A:
        return "A[" + std::to_string(i) + "," + std::to_string(j) + "]";
    case Kind::DA:
        return "DA[" + std::to_string(i) + "," + std::to_string(j) + "]";
    case Kind::U:
        return "U[" + std::to_string(i) + "]";
    case Kind::X:
        return "X";
    case Kind::Lambda:
        return "Lambda";
    case Kind::Chain:
        return "C[" + std::to_string(i) + "]";
    }
    return "?";
}

SummandLabel parse_label(const std::string& text, std::optional<int> n)
{
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c)))
            s += c;

    if (s == "X")
        return SummandLabel::x();
    if (s == "Lambda")
        return SummandLabel::lambda();
    if (s == "P") {
        if (!n)
            throw std::invalid_argument("label 'P' needs the algebra parameter n");
        return SummandLabel::a(*n, 0);
    }

    static const std::regex one(R"((U|C)\[(\d{1,6})\])");
    static const std::regex two(R"((A|DA)\[(\d{1,6}),(\d{1,6})\])");
    std::smatch m;
    if (std::regex_match(s, m, one)) {
        const int i = std::stoi(m[2]);
        return m[1] == "U" ? SummandLabel::u(i) : SummandLabel::chain(i);
    }
    if (std::regex_match(s, m, two)) {
        const int i = std::stoi(m[2]), j = std::stoi(m[3]);
        return m[1] == "A" ? SummandLabel::a(i, j) : SummandLabel::da(i, j);
    }
    throw std::invalid_argument("cannot parse summand label '" + text + "'");
}

std::string multiset_string(std::vector<SummandLabel> labels)
{
    std::sort(labels.begin(), labels.end());
    std::string out = "{";
    for (std::size_t k = 0; k < labels.size(); ++k)
        out += (k ? ", " : "") + labels[k].str();
    return out + "}";
}

} // namespace repdim
