#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace mcg {

using IntMatrix = std::vector<std::vector<std::int64_t>>;

// Square matrix B with an optional skew-symmetrizer D (empty means D = 1).
struct ExchangeMatrix {
    IntMatrix b;
    std::vector<std::int64_t> d;

    ExchangeMatrix() = default;
    explicit ExchangeMatrix(IntMatrix m, std::vector<std::int64_t> sym = {});

    int size() const { return static_cast<int>(b.size()); }
    std::int64_t operator()(int i, int j) const { return b[i][j]; }
    bool skew_symmetrizable() const;
    // Sum of the positive entries; the number of arrows of the quiver when B is skew-symmetric.
    std::int64_t arrow_count() const;
    bool operator==(const ExchangeMatrix& o) const { return b == o.b; }
};

// Matrix mutation at k (1-based).
ExchangeMatrix mutate_matrix(const ExchangeMatrix& m, int k);

// Mutation of an extended m x n matrix (rows below n are coefficient rows) at column k (1-based).
IntMatrix mutate_extended(const IntMatrix& m, int k);

struct Seed {
    std::vector<std::string> labels;
    ExchangeMatrix matrix;
    int size() const { return matrix.size(); }
};

// Applies mutations left to right.
Seed mutation_path(const Seed& s, const std::vector<int>& ks);

// pi with b2[pi[i]][pi[j]] == b1[i][j] for all i, j.
std::optional<std::vector<int>> seed_isomorphic(const Seed& s1, const Seed& s2);
std::vector<std::vector<int>> all_seed_isomorphisms(const Seed& s1, const Seed& s2);

// Ideal triangulation with arcs 0..m-1 and a set of notched punctures.
// Each triangle lists three sides in a fixed cyclic order (the same orientation
// for every triangle); a side is an arc index or a boundary segment (negative).
// corner[k] is the marked point where side k starts. Arcs keep their labels
// across flips.
class TaggedTriangulation {
public:
    struct Triangle {
        std::array<int, 3> side{};
        std::array<int, 3> corner{};
        bool operator==(const Triangle&) const = default;
        auto operator<=>(const Triangle&) const = default;
    };

    TaggedTriangulation() = default;
    // Builds marked points from the gluing. Boundary segments must be negative
    // and appear once; every arc must appear exactly twice.
    static TaggedTriangulation from_sides(std::vector<std::string> arc_names,
                                          const std::vector<std::array<int, 3>>& sides);

    int arc_count() const { return static_cast<int>(names_.size()); }
    const std::vector<std::string>& arc_names() const { return names_; }
    int arc_index(const std::string& name) const;
    const std::vector<Triangle>& triangles() const { return triangles_; }
    int vertex_count() const { return static_cast<int>(is_puncture_.size()); }
    bool is_puncture(int v) const { return is_puncture_[v]; }
    std::vector<int> punctures() const;
    const std::set<int>& notched() const { return notched_; }

    // Index of the self-folded triangle whose repeated side is the arc, or -1.
    int self_folded_triangle_of_radius(int arc) const;
    int self_folded_count() const;
    // pairs (radius, loop)
    std::vector<std::pair<int, int>> self_folded_pairs() const;

    // Tagged flip at arc (0-based).
    TaggedTriangulation flip(int arc) const;
    TaggedTriangulation flip(const std::string& name) const { return flip(arc_index(name)); }
    // Notches every end at the given punctures (toggling).
    TaggedTriangulation toggle_tags(const std::set<int>& punctures) const;

    // Tagged arc of each label: its endpoints with tags. A loop of a self-folded
    // triangle is the radius notched at the enclosed puncture.
    struct TaggedArc {
        int a = 0, b = 0;
        bool notched_a = false, notched_b = false;
        auto operator<=>(const TaggedArc&) const = default;
    };
    std::vector<TaggedArc> tagged_arcs() const;

    bool operator==(const TaggedTriangulation& o) const { return canonical_key() == o.canonical_key(); }
    std::vector<int> canonical_key() const;

    std::string to_json() const;
    static TaggedTriangulation from_json(const std::string& text);

private:
    std::vector<std::string> names_;
    std::vector<Triangle> triangles_;
    std::vector<bool> is_puncture_;
    std::set<int> notched_;

    void ideal_flip(int arc);
    void swap_labels(int a, int b);
    void normalise();
};

TaggedTriangulation flip(const TaggedTriangulation& t, int arc);

// Signed adjacency matrix; a radius of a self-folded triangle takes the row and
// column of its loop.
ExchangeMatrix adjacency_matrix(const TaggedTriangulation& t);
Seed seed_of(const TaggedTriangulation& t);

namespace stock {
// Fan from the first marked point of the m-gon, m >= 4.
TaggedTriangulation disk_fan(int m);
// Arcs a, b, c forming the two triangles (a, b, c).
TaggedTriangulation punctured_torus();
// Lattice-path triangulation for the step word (p letters O, q letters I),
// arc k joining outer mark x_k and inner mark y_k of the path.
TaggedTriangulation annulus(int p, int q, const std::string& steps);
TaggedTriangulation annulus(int p, int q);
// Loop l enclosing a puncture with radius r, inside the digon.
TaggedTriangulation punctured_digon_self_folded();
// Tetrahedral triangulation alpha1..alpha6 with quiver of 12 arrows.
TaggedTriangulation sphere4_maximal();
// Three self-folded triangles around one puncture, arcs 1..6.
TaggedTriangulation sphere4_three_self_folded();
}  // namespace stock

// Every triangulation reachable from t by at most depth flips.
std::vector<TaggedTriangulation> flip_orbit(const TaggedTriangulation& t, int depth);

}  // namespace mcg
