#pragma once

#include <string>
#include <vector>

#include "mcg/cluster.hpp"

namespace mcg {

// The maximal triangulation with the labels alpha_2 and alpha_4 exchanged, arcs beta1..beta6.
TaggedTriangulation sphere4_maximal_beta();

// Rank 6, 12 arrows, and isomorphic to the maximal quiver. Throws on other ranks.
bool is_maximal_quiver(const Seed& s);
// Maximal quiver and no self-folded triangle.
bool is_maximal_triangulation(const TaggedTriangulation& t);

// Arc sets of the non-self-folded triangles.
std::vector<std::vector<int>> triangle_arc_sets(const TaggedTriangulation& t);
// True iff pi (arc i of a -> arc pi[i] of b) sends triangles of a onto triangles of b.
bool preserves_triangles(const TaggedTriangulation& a, const TaggedTriangulation& b, const std::vector<int>& pi);

struct Mu6526Report {
    bool forward_isomorphic = false;    // mu_(6,5,2,6)(ThreeSelfFolded) ~ Maximal
    std::vector<int> witness;           // relabelling onto the Maximal seed
    bool forward_is_triangulation = false;  // the flipped triangulation has no self-folded triangle
    bool reverse_returns = false;       // then mu_(6,2,5,6) gives back the start seed
    bool maximal_path_not_maximal = false;  // flipping Maximal along (6,5,2,6) leaves the maximal triangulations
    int maximal_path_self_folded = 0;
    bool ok() const {
        return forward_isomorphic && forward_is_triangulation && reverse_returns && maximal_path_not_maximal;
    }
};
Mu6526Report verify_mu6526();

struct SigmaSwapReport {
    bool phi_is_isomorphism = false;         // alpha_i -> beta_i
    bool phi_preserves_triangles = false;
    bool sigma_phi_is_isomorphism = false;   // alpha_2 -> beta_4, alpha_4 -> beta_2
    bool sigma_phi_preserves_triangles = false;
    bool swap_squares_to_identity = false;
    // transpositions (i, j), 1-based, that are automorphisms of the maximal quiver
    std::vector<std::pair<int, int>> quiver_transpositions;
    bool ok() const;
};
SigmaSwapReport sigma_swap_check();

struct DichotomyReport {
    int triangulations = 0;
    int twelve_arrows = 0;
    int maximal = 0;
    int three_self_folded = 0;
    int violations = 0;  // 12 arrows but neither form
    bool ok() const { return violations == 0 && maximal > 0 && three_self_folded > 0; }
};
// Every tagged triangulation within flip distance depth of Maximal whose quiver
// has 12 arrows is maximal or has three self-folded triangles.
DichotomyReport twelve_arrow_dichotomy(int depth);

// Line-oriented report ("PASS|FAIL fourpunct <detail>").
std::vector<std::string> fourpunct_report();

}  // namespace mcg
