#pragma once

#include <string>
#include <vector>

#include "mcg/words.hpp"

namespace mcg {

// Coxeter graph; m[i][j] = 2 for unjoined pairs and m[i][i] = 1.
struct CoxeterGraph {
    std::vector<std::string> vertices;
    std::vector<std::vector<int>> m;

    int add_vertex(const std::string& name);
    void set_label(int a, int b, int label);
    void set_label(const std::string& a, const std::string& b, int label);
    int index_of(const std::string& name) const;
    bool has(const std::string& name) const;
    int size() const { return static_cast<int>(vertices.size()); }

    // `vertices: a b c` then `edge: a b 3` lines.
    static CoxeterGraph from_text(const std::string& text);
    std::string to_text() const;
};

// Alternating word x y x ... of length m over generator ids.
Word prod_word(int x, int y, int m);

// Generators are the vertices, in order; one relator per pair.
Presentation artin_presentation(const CoxeterGraph& g);

// Vertices x0..xn, y1..y(2g-1), z (g >= 2).
CoxeterGraph gamma_g1n(int g, int n);
// gamma_g1n plus v1..v(n-1); v_i v_(i+1) labelled 3, x_i v_i labelled 4.
CoxeterGraph gamma_g0n(int g, int n);

enum class DynkinFamily { A, B, D, E6, E7, Unsupported };

struct SubgraphType {
    DynkinFamily family = DynkinFamily::Unsupported;
    int rank = 0;
    // order[i] is the graph vertex playing x_(i+1) in the standard labelling.
    std::vector<int> order;
};

std::string to_string(const SubgraphType& t);

SubgraphType classify_induced(const CoxeterGraph& g, const std::vector<int>& subset);
SubgraphType classify_induced(const CoxeterGraph& g, const std::vector<std::string>& subset);

// Delta^power over the graph's vertex ids. Even powers are powers of the
// listed Delta^2 word; odd powers are Delta * (Delta^2)^((power-1)/2).
Word fundamental_word(const SubgraphType& t, int power);

// Reduced word for the longest element, by greedy descent in the reflection
// representation; letters index into t.order.
std::vector<int> longest_element_word(const SubgraphType& t);

// Number of positive roots of the type.
int positive_root_count(const SubgraphType& t);

// Image of a power of Delta under the Perron-Vannier (or graph) representation,
// as a product of boundary twists. Stored as data only.
struct BoundaryTwistIdentity {
    std::string type;   // e.g. "A(2p+1)"
    int delta_power = 1;
    std::string image;  // e.g. "T_b1 T_b2"
    std::vector<std::string> alternative_images;  // other readings of a suspect line
    bool flagged = false;
};

std::vector<BoundaryTwistIdentity> boundary_twist_identities();

}  // namespace mcg
