#pragma once

// Vertex/edge pictures of string-type modules.  Basis vectors are the
// vertices; an x-edge s -> t means x.s = t, likewise for y.  Vertices without
// an outgoing edge of a letter are killed by that letter.

#include <string>
#include <utility>
#include <vector>

namespace repdim {

struct Diagram {
    using Edge = std::pair<int, int>;

    std::vector<std::string> vertices;
    std::vector<Edge> x_edges;
    std::vector<Edge> y_edges;

    int size() const { return static_cast<int>(vertices.size()); }

    int add_vertex(std::string name)
    {
        vertices.push_back(std::move(name));
        return size() - 1;
    }

    // At most one incoming and one outgoing edge per letter at every vertex.
    bool is_string_shape() const;
    bool is_connected() const;

    bool has_in_edge(int v, char letter) const;
    bool has_out_edge(int v, char letter) const;
    // Target of the outgoing edge, or -1.
    int out_neighbor(int v, char letter) const;
};

// Deterministic ASCII picture: 'o' per vertex, '|' for y-edges (pointing
// down), '-' for x-edges (pointing left).  Throws std::invalid_argument when
// the diagram does not embed in the grid.
std::string render_diagram(const Diagram& d);

} // namespace repdim

namespace repdim {

// Named shapes.  Vertex order is fixed so that the resulting matrices are
// reproducible.

// y-chain v_0 -> ... -> v_i.
Diagram u_diagram(int i);
// x-string v_0 -> v_1.
Diagram x_diagram();
// Source rail w_0..w_{i+1} (y-chain), target rail v_0..v_{i+j} (y-chain),
// x.w_t = v_{j+t} for t <= i.  With j = 0 this is the regular module of A_i.
Diagram a_diagram(int i, int j);
// Source rail r_0..r_i, target rail l_0..l_{i+j+1}, x.r_t = l_{j+1+t}.
// With j = 0 this is the dual of the regular module of A_i.
Diagram da_diagram(int i, int j);
// a_1 -x-> b_1 <-y- a_2 -x-> b_2 <-y- ... -x-> b_l
Diagram zigzag_diagram(int l);
// x-chain with `len` vertices.
Diagram x_chain_diagram(int len);

} // namespace repdim
