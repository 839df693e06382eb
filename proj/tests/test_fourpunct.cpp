#include <doctest.h>

#include "mcg/fourpunct.hpp"

using namespace mcg;

TEST_CASE("maximal quiver detection") {
    const Seed m = seed_of(stock::sphere4_maximal());
    CHECK(is_maximal_quiver(m));
    CHECK(is_maximal_triangulation(stock::sphere4_maximal()));
    // the three-self-folded quiver is the same quiver; the triangulation is not maximal
    CHECK(is_maximal_quiver(seed_of(stock::sphere4_three_self_folded())));
    CHECK_FALSE(is_maximal_triangulation(stock::sphere4_three_self_folded()));
    for (int k = 1; k <= 6; ++k) {
        const Seed n = mutation_path(m, {k});
        CHECK(is_maximal_quiver(n) == seed_isomorphic(n, m).has_value());
        CHECK_FALSE(is_maximal_quiver(n));
    }
    CHECK_THROWS(is_maximal_quiver(seed_of(stock::punctured_torus())));
}

TEST_CASE("mu(6,5,2,6) reaches the maximal triangulation") {
    const auto r = verify_mu6526();
    CHECK(r.forward_isomorphic);
    CHECK(r.forward_is_triangulation);
    CHECK(r.reverse_returns);
    CHECK(r.maximal_path_not_maximal);
    CHECK(r.maximal_path_self_folded == 3);
    // as seeds the same path stays in the maximal isomorphism class
    CHECK(is_maximal_quiver(mutation_path(seed_of(stock::sphere4_maximal()), {6, 5, 2, 6})));
    CHECK(r.witness.size() == 6);
    CHECK(r.ok());
}

TEST_CASE("sigma swap between the two labellings") {
    const auto r = sigma_swap_check();
    CHECK(r.phi_is_isomorphism);
    CHECK_FALSE(r.phi_preserves_triangles);
    CHECK(r.sigma_phi_is_isomorphism);
    CHECK(r.sigma_phi_preserves_triangles);
    CHECK(r.swap_squares_to_identity);
    // exactly the opposite-edge pairs of the tetrahedron
    CHECK(r.quiver_transpositions == std::vector<std::pair<int, int>>{{1, 6}, {2, 4}, {3, 5}});
    CHECK(r.ok());
}

TEST_CASE("twelve arrows means maximal or three self-folded") {
    const auto d = twelve_arrow_dichotomy(4);
    CHECK(d.violations == 0);
    CHECK(d.maximal > 0);
    CHECK(d.three_self_folded > 0);
    CHECK(d.ok());
}

TEST_CASE("report lines") {
    const auto lines = fourpunct_report();
    CHECK(lines.size() == 5);
    for (const auto& l : lines) CHECK(l.rfind("PASS fourpunct ", 0) == 0);
}
