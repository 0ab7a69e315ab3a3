#include "repdim/diagram.hpp"

#include <algorithm>
#include <climits>
#include <deque>
#include <map>
#include <stdexcept>

namespace repdim {

namespace {

const std::vector<Diagram::Edge>& edges_of(const Diagram& d, char letter)
{
    return letter == 'x' ? d.x_edges : d.y_edges;
}

} // namespace

bool Diagram::has_in_edge(int v, char letter) const
{
    for (const auto& [s, t] : edges_of(*this, letter))
        if (t == v)
            return true;
    return false;
}

bool Diagram::has_out_edge(int v, char letter) const
{
    return out_neighbor(v, letter) >= 0;
}

int Diagram::out_neighbor(int v, char letter) const
{
    for (const auto& [s, t] : edges_of(*this, letter))
        if (s == v)
            return t;
    return -1;
}

bool Diagram::is_string_shape() const
{
    for (char letter : {'x', 'y'}) {
        std::vector<int> in(size(), 0), out(size(), 0);
        for (const auto& [s, t] : edges_of(*this, letter)) {
            if (s < 0 || t < 0 || s >= size() || t >= size() || s == t)
                return false;
            if (++out[s] > 1 || ++in[t] > 1)
                return false;
        }
    }
    return true;
}

bool Diagram::is_connected() const
{
    if (vertices.empty())
        return true;
    std::vector<std::vector<int>> adj(size());
    for (const auto* es : {&x_edges, &y_edges})
        for (const auto& [s, t] : *es) {
            adj[s].push_back(t);
            adj[t].push_back(s);
        }
    std::vector<bool> seen(size(), false);
    std::deque<int> queue{0};
    seen[0] = true;
    int count = 1;
    while (!queue.empty()) {
        const int v = queue.front();
        queue.pop_front();
        for (int w : adj[v])
            if (!seen[w]) {
                seen[w] = true;
                ++count;
                queue.push_back(w);
            }
    }
    return count == size();
}

std::string render_diagram(const Diagram& d)
{
    if (d.vertices.empty())
        return "(zero module)\n";

    // (row, col) per vertex; y goes one row down, x one column left.
    struct Step {
        int to, dr, dc;
    };
    std::vector<std::vector<Step>> adj(d.size());
    for (const auto& [s, t] : d.y_edges) {
        adj[s].push_back({t, 1, 0});
        adj[t].push_back({s, -1, 0});
    }
    for (const auto& [s, t] : d.x_edges) {
        adj[s].push_back({t, 0, -1});
        adj[t].push_back({s, 0, 1});
    }

    std::vector<std::pair<int, int>> pos(d.size());
    std::vector<bool> placed(d.size(), false);
    int next_col = 0;
    for (int root = 0; root < d.size(); ++root) {
        if (placed[root])
            continue;
        // Lay out one component, then shift it to the right of the previous one.
        std::vector<int> component{root};
        pos[root] = {0, 0};
        placed[root] = true;
        std::deque<int> queue{root};
        while (!queue.empty()) {
            const int v = queue.front();
            queue.pop_front();
            for (const auto& st : adj[v]) {
                const std::pair<int, int> want{pos[v].first + st.dr, pos[v].second + st.dc};
                if (placed[st.to]) {
                    if (pos[st.to] != want)
                        throw std::invalid_argument("diagram does not embed in the grid");
                    continue;
                }
                pos[st.to] = want;
                placed[st.to] = true;
                component.push_back(st.to);
                queue.push_back(st.to);
            }
        }
        int min_c = INT_MAX, max_c = INT_MIN;
        for (int v : component) {
            min_c = std::min(min_c, pos[v].second);
            max_c = std::max(max_c, pos[v].second);
        }
        for (int v : component)
            pos[v].second += next_col - min_c;
        next_col += max_c - min_c + 2;
    }

    int min_r = INT_MAX, max_r = INT_MIN, max_c = 0;
    std::map<std::pair<int, int>, int> occupied;
    for (int v = 0; v < d.size(); ++v) {
        if (!occupied.emplace(pos[v], v).second)
            throw std::invalid_argument("diagram does not embed in the grid: two vertices share a cell");
        min_r = std::min(min_r, pos[v].first);
        max_r = std::max(max_r, pos[v].first);
        max_c = std::max(max_c, pos[v].second);
    }

    const int height = 2 * (max_r - min_r) + 1;
    const int width = 2 * max_c + 1;
    std::vector<std::string> grid(height, std::string(width, ' '));
    auto cell = [&](int v) { return std::pair<int, int>{2 * (pos[v].first - min_r), 2 * pos[v].second}; };
    for (int v = 0; v < d.size(); ++v) {
        auto [r, c] = cell(v);
        grid[r][c] = 'o';
    }
    for (const auto& [s, t] : d.y_edges) {
        auto [r, c] = cell(s);
        grid[r + 1][c] = '|';
    }
    for (const auto& [s, t] : d.x_edges) {
        auto [r, c] = cell(s);
        grid[r][c - 1] = '-';
    }

    std::string out;
    for (auto& line : grid) {
        line.erase(line.find_last_not_of(' ') + 1);
        out += line + "\n";
    }
    return out;
}

} // namespace repdim

namespace repdim {

Diagram u_diagram(int i)
{
    if (i < 0)
        throw std::out_of_range("U[i] needs i >= 0");
    Diagram d;
    for (int t = 0; t <= i; ++t)
        d.add_vertex("v" + std::to_string(t));
    for (int t = 0; t < i; ++t)
        d.y_edges.emplace_back(t, t + 1);
    return d;
}

Diagram x_diagram()
{
    Diagram d;
    d.add_vertex("v0");
    d.add_vertex("v1");
    d.x_edges.emplace_back(0, 1);
    return d;
}

Diagram a_diagram(int i, int j)
{
    if (i < 0 || j < 0)
        throw std::out_of_range("A[i,j] needs i, j >= 0");
    Diagram d;
    std::vector<int> w, v;
    for (int t = 0; t <= i + 1; ++t)
        w.push_back(d.add_vertex("w" + std::to_string(t)));
    for (int t = 0; t <= i + j; ++t)
        v.push_back(d.add_vertex("v" + std::to_string(t)));
    for (int t = 0; t <= i; ++t)
        d.y_edges.emplace_back(w[t], w[t + 1]);
    for (int t = 0; t < i + j; ++t)
        d.y_edges.emplace_back(v[t], v[t + 1]);
    for (int t = 0; t <= i; ++t)
        d.x_edges.emplace_back(w[t], v[j + t]);
    return d;
}

Diagram da_diagram(int i, int j)
{
    if (i < 0 || j < 0)
        throw std::out_of_range("DA[i,j] needs i, j >= 0");
    Diagram d;
    std::vector<int> r, l;
    for (int t = 0; t <= i; ++t)
        r.push_back(d.add_vertex("r" + std::to_string(t)));
    for (int t = 0; t <= i + j + 1; ++t)
        l.push_back(d.add_vertex("l" + std::to_string(t)));
    for (int t = 0; t < i; ++t)
        d.y_edges.emplace_back(r[t], r[t + 1]);
    for (int t = 0; t <= i + j; ++t)
        d.y_edges.emplace_back(l[t], l[t + 1]);
    for (int t = 0; t <= i; ++t)
        d.x_edges.emplace_back(r[t], l[j + 1 + t]);
    return d;
}

Diagram zigzag_diagram(int l)
{
    if (l < 1)
        throw std::out_of_range("zigzag needs length >= 1");
    Diagram d;
    std::vector<int> a, b;
    for (int t = 1; t <= l; ++t) {
        a.push_back(d.add_vertex("a" + std::to_string(t)));
        b.push_back(d.add_vertex("b" + std::to_string(t)));
    }
    for (int t = 0; t < l; ++t)
        d.x_edges.emplace_back(a[t], b[t]);
    for (int t = 0; t + 1 < l; ++t)
        d.y_edges.emplace_back(a[t + 1], b[t]);
    return d;
}

Diagram x_chain_diagram(int len)
{
    if (len < 1)
        throw std::out_of_range("x-chain needs length >= 1");
    Diagram d;
    for (int t = 0; t < len; ++t)
        d.add_vertex("v" + std::to_string(t));
    for (int t = 0; t + 1 < len; ++t)
        d.x_edges.emplace_back(t, t + 1);
    return d;
}

} // namespace repdim
