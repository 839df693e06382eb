#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "mcg/cluster.hpp"
#include "mcg/words.hpp"

namespace mcg {

// Dynnikov coordinates (a_1..a_(n-2), b_1..b_(n-2)) on the n-punctured disk.
using DiskCoordinates = std::vector<std::int64_t>;

// sigma_i^sign with 1 <= i <= n-1.
DiskCoordinates apply_braid_letter(const DiskCoordinates& c, int n, int i, int sign);

// Letters with generator id k stand for sigma_(k+1). act_word(uv, c) = act_word(u, act_word(v, c)).
DiskCoordinates act_word(const Word& w, const DiskCoordinates& c, int n);

// count vectors of length 2n-4 with entries uniform in [-range, range].
std::vector<DiskCoordinates> random_coordinates(int n, int count, std::uint64_t seed, int range = 20);

// True iff both words act identically on every sample.
bool same_action(const Word& u, const Word& v, const std::vector<DiskCoordinates>& samples, int n);

// The action above has the centre of B_n as kernel. Words in B_n are compared
// in B_(n+1), whose centre meets B_n trivially, on `count` random vectors.
bool same_braid(const Word& u, const Word& v, int n, int count, std::uint64_t seed);

enum class AnnulusMove { R1, R2, Swap };

// Triangulation of the annulus with p outer and q inner marks, seen in the
// universal cover: outer marks sit at integers x, inner marks at integers y,
// and the deck group is generated by (x, y) -> (x + p, y + q). The stored
// arcs are bridging arcs (x, y) normalised to 0 <= x < p, kept sorted.
struct AnnulusState {
    int p = 1;
    int q = 1;
    std::vector<std::pair<std::int64_t, std::int64_t>> arcs;

    // Lattice-path triangulation: start at the arc (0, y0), then 'O' advances
    // the outer end and 'I' the inner end. steps holds p letters O and q letters I.
    static AnnulusState lattice(int p, int q, const std::string& steps, std::int64_t y0 = 0);
    // All lattice-path triangulations with y0 = 0.
    static std::vector<AnnulusState> all_lattice(int p, int q);

    auto operator<=>(const AnnulusState&) const = default;
};

// r1: x -> x + 1, r2: y -> y - 1, swap: (x, y) -> (-y, -x) (requires p = q).
AnnulusState annulus_generator(AnnulusMove kind, const AnnulusState& s, bool inverse = false);

// States reachable from the lattice triangulations in at most `depth` moves
// (r1, r2, their inverses, and swap when p = q).
std::vector<AnnulusState> annulus_orbit(int p, int q, int depth);

// Bridging-arc triangulation of the annulus with arcs kept by label, matching
// stock::annulus(p, q, steps) label for label. Arc k has x + y in [0, p + q).
struct LabelledAnnulus {
    int p = 1;
    int q = 1;
    std::vector<std::pair<std::int64_t, std::int64_t>> arc;

    static LabelledAnnulus lattice(int p, int q, const std::string& steps);
    // Deck translate with x + y in [0, p + q).
    std::pair<std::int64_t, std::int64_t> normal(std::pair<std::int64_t, std::int64_t> a) const;
    // Flip of label k, or std::nullopt when the flip leaves the bridging arcs.
    std::optional<LabelledAnnulus> flip(int k) const;
    std::set<std::pair<std::int64_t, std::int64_t>> arc_set() const;
};

std::pair<std::int64_t, std::int64_t> annulus_move(AnnulusMove kind, std::pair<std::int64_t, std::int64_t> a,
                                                   bool inverse = false);

// A cluster automorphism given by the image of base: flip the arcs in path
// (0-based labels, left to right), then base arc i corresponds to arc relabel[i];
// finally change tags at the punctures in tagflips.
struct MappingClassRealization {
    TaggedTriangulation base;
    std::vector<int> path;
    std::vector<int> relabel;
    std::set<int> tagflips;

    static MappingClassRealization identity(const TaggedTriangulation& base);
    TaggedTriangulation image() const;
    // adjacency_matrix(image) read through relabel equals adjacency_matrix(base).
    bool is_automorphism() const;
    // Principal-coefficient C-matrix after path, columns ordered by relabel.
    IntMatrix signature() const;
    // Image of each base puncture, read off the triangles.
    std::vector<int> puncture_map() const;
    bool operator==(const MappingClassRealization& o) const;
};

// g o f: the path of g followed by the path of f transported through g's relabelling.
MappingClassRealization realize_compose(const MappingClassRealization& f, const MappingClassRealization& g);
MappingClassRealization realize_inverse(const MappingClassRealization& f);
MappingClassRealization realize_power(const MappingClassRealization& f, int k);

// True iff t, t^2, ..., t^K all differ from the identity.
bool infinite_order_witness(const MappingClassRealization& t, int K);

// r1, r2 or swap on stock::annulus(p, q, steps), found by breadth-first search
// over bridging flips.
MappingClassRealization annulus_realization(AnnulusMove kind, int p, int q, const std::string& steps);
MappingClassRealization annulus_realization(AnnulusMove kind, int p, int q);

}  // namespace mcg
