#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "mcg/action.hpp"
#include "mcg/presentations.hpp"
#include "oracles.hpp"

using namespace mcg;

namespace {

long binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

bool has_relator(const Presentation& p, const Word& w) {
    return std::find(p.relators.begin(), p.relators.end(), w) != p.relators.end();
}

// Braid images for the genus-0 Im(pi) generators over N strands.
std::vector<Word> braid_images(const Presentation& p, int N) {
    std::vector<Word> out;
    for (const auto& name : p.generators) {
        if (name[0] == 's') {
            out.push_back(Word::gen(std::stoi(name.substr(1)) - 1));
        } else {
            const auto us = name.find('_');
            out.push_back(aij_in_braid(std::stoi(name.substr(1, us - 1)), std::stoi(name.substr(us + 1)), N));
        }
    }
    return out;
}

std::vector<MarkedSurface> genus0_grid() {
    std::vector<MarkedSurface> out;
    const std::vector<std::vector<int>> boundaries{{}, {1}, {2}, {1, 1}, {2, 2}, {1, 2}, {3}};
    for (int n = 0; n <= 4; ++n)
        for (const auto& b : boundaries) {
            MarkedSurface s(0, b, n);
            const auto k = classify(s).kind;
            if (k == SurfaceKind::Excluded || k == SurfaceKind::UnpuncturedAnnulus) continue;
            out.push_back(s);
        }
    return out;
}

}  // namespace

TEST_CASE("braid_presentation") {
    CHECK(braid_presentation(2).relators.empty());
    CHECK(braid_presentation(2).num_gens() == 1);
    const auto b3 = braid_presentation(3);
    CHECK(b3.to_text() == "gens: s1 s2\nrel: s1 s2 s1 s2' s1' s2'\n");
    for (int n = 2; n <= 9; ++n) {
        const auto p = braid_presentation(n);
        CHECK(p.num_gens() == n - 1);
        CHECK(static_cast<long>(p.relators.size()) == (n - 2) + binom(n - 2, 2));
        CHECK(abelianization(p) == std::vector<std::int64_t>{0});
    }
    CHECK(braid_presentation(4).relators.size() == 3);
    CHECK_THROWS(braid_presentation(1));
}

TEST_CASE("pure_braid_presentation") {
    CHECK(pure_braid_presentation(2).relators.empty());
    const auto p3 = pure_braid_presentation(3);
    CHECK(p3.relators.size() == 2);
    CHECK(p3.word_text(p3.relators[0]) == "a1_3 a2_3 a1_2 a1_3' a1_2' a2_3'");
    for (int n = 2; n <= 7; ++n) {
        const auto p = pure_braid_presentation(n);
        CHECK(p.num_gens() == binom(n, 2));
        CHECK(static_cast<long>(p.relators.size()) == 3 * binom(n, 4) + 2 * binom(n, 3));
        // PB_n abelianizes to Z^(n choose 2)
        CHECK(abelianization(p) == std::vector<std::int64_t>(binom(n, 2), 0));
    }
}

TEST_CASE("aij_in_braid") {
    CHECK(aij_in_braid(1, 2, 3) == Word({1, 1}));
    CHECK(aij_in_braid(1, 3, 3) == Word({2, 1, 1, -2}));
    CHECK(aij_in_braid(2, 4, 4) == Word({3, 2, 2, -3}));
    CHECK_THROWS(aij_in_braid(2, 2, 4));
    CHECK_THROWS(aij_in_braid(1, 5, 4));
}

TEST_CASE("pure braid relators hold in the braid action") {
    for (int n = 3; n <= 6; ++n) {
        const auto p = pure_braid_presentation(n);
        std::vector<Word> imgs;
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j) imgs.push_back(aij_in_braid(i, j, n));
        for (const auto& r : p.relators) CHECK(same_braid(substitute(r, imgs), Word(), n, 100, 42));
    }
}

TEST_CASE("sphere_mcg_presentation") {
    const auto p4 = sphere_mcg_presentation(4);
    CHECK(has_relator(p4, p4.parse_word("s1 s2 s3").pow(4)));
    CHECK(has_relator(p4, p4.parse_word("s1 s2 s3 s3 s2 s1")));
    for (int n = 4; n <= 8; ++n) {
        const auto p = sphere_mcg_presentation(n);
        std::vector<Perm> imgs;
        for (int i = 0; i < n - 1; ++i) imgs.push_back(transposition(n, i, i + 1));
        CHECK(verify_homomorphism(p, imgs, n).ok);
        CHECK(abelianization(p) == oracle::abelian_invariants(p));
        CHECK(abelianization(p) == std::vector<std::int64_t>{std::gcd(n * (n - 1), 2 * (n - 1))});
    }
    CHECK(abelianization(sphere_mcg_presentation(5)) == std::vector<std::int64_t>{4});
}

TEST_CASE("pmod_sphere_presentation") {
    const auto p = pmod_sphere_presentation(3);
    CHECK(has_relator(p, p.parse_word("a1_2 a1_3 a2_3")));
    CHECK(has_relator(p, p.parse_word("a1_2 a1_3")));
    for (int n = 3; n <= 6; ++n) {
        const auto q = pmod_sphere_presentation(n);
        // the two product relators only cut the free rank by two
        const auto ab = abelianization(q);
        CHECK(ab == oracle::abelian_invariants(q));
        CHECK(std::count(ab.begin(), ab.end(), 0) == binom(n, 2) - 2);
        for (const auto& r : q.relators) CHECK(Word(r.letters()) == r);
    }
    CHECK_THROWS(pmod_sphere_presentation(2));
}

TEST_CASE("sigma_S_presentation") {
    CHECK(todd_coxeter(sigma_S_presentation(MarkedSurface(0, {}, 3)), {}, 1000) == 6);
    const auto k = sigma_S_presentation(MarkedSurface(0, {1, 1}, 2));
    CHECK(k.generators == std::vector<std::string>{"Per1", "Per3"});
    CHECK(todd_coxeter(k, {}, 1000) == 4);
    const auto t = sigma_S_presentation(MarkedSurface(0, {2, 3}, 0));
    CHECK(t.num_gens() == 0);
    CHECK(t.relators.empty());
    CHECK(todd_coxeter(sigma_S_presentation(MarkedSurface(0, {1, 1, 1}, 2)), {}, 1000) == 12);
}

TEST_CASE("impi_presentation_genus0") {
    const MarkedSurface s(0, {}, 5);
    const auto p = impi_presentation_genus0(s);
    CHECK(has_relator(p, p.parse_word("s2 s2 a2_3'")));
    CHECK(verify_homomorphism(p, theta_images(p, 5), 5).ok);
    CHECK_THROWS(impi_presentation_genus0(MarkedSurface(1, {}, 2)));
    CHECK_THROWS(impi_presentation_genus0(MarkedSurface(0, {1, 2}, 0)));
}

TEST_CASE("Im(pi) relators hold in the braid group except the sphere relators") {
    for (const auto& s : genus0_grid()) {
        const int N = s.quotient_points();
        if (N < 3) continue;
        const auto p = impi_presentation_genus0(s);
        const auto imgs = braid_images(p, N);
        Word full, first;
        for (int i = 1; i <= N; ++i)
            for (int j = i + 1; j <= N; ++j) full *= p.g(aij_name(i, j));
        for (int j = 2; j <= N; ++j) first *= p.g(aij_name(1, j));
        for (const auto& r : p.relators) {
            const bool sphere_only = r == full || r == first;
            INFO(p.word_text(r));
            CHECK(same_braid(substitute(r, imgs), Word(), N, 60, 42) == !sphere_only);
        }
    }
}

TEST_CASE("printed conjugation by sigma_i fails in the braid group") {
    const MarkedSurface s(0, {}, 4);
    const auto p = impi_presentation_genus0(s, {.literal_conjugation = true});
    const auto q = impi_presentation_genus0(s);
    REQUIRE(p.relators.size() == q.relators.size());
    const auto imgs = braid_images(p, 4);
    int differ = 0, fail = 0;
    for (std::size_t i = 0; i < p.relators.size(); ++i) {
        if (p.relators[i] == q.relators[i]) continue;
        ++differ;
        fail += !same_braid(substitute(p.relators[i], imgs), Word(), 4, 60, 42);
    }
    CHECK(differ > 0);
    CHECK(fail == differ);
}

TEST_CASE("mcg_presentation_genus0") {
    for (const auto& s : genus0_grid()) {
        const auto p = mcg_presentation_genus0(s);
        const int N = s.quotient_points(), r = s.boundary_count();
        const long I = static_cast<long>(index_set_I(s).size());
        CHECK(verify_homomorphism(p, theta_images(p, N), N).ok);
        const auto deg = boundary_degree_images(p, s);
        const int rank = deg.empty() ? 0 : static_cast<int>(deg[0].size());
        CHECK(verify_homomorphism(p, deg, rank).ok);

        // count oracle
        long pairs = 0;
        for (int i : index_set_I(s))
            for (int j : index_set_I(s)) pairs += j > i;
        const long pbn = 3 * binom(N, 4) + 2 * binom(N, 3);
        const long kernel = N >= 2 ? 2 : 0;
        long tblock = binom(r, 2) + binom(N, 2) * r;
        for (int k : index_set_I(s)) tblock += k > s.punctures() ? 1 + (r - 2) : r;
        CHECK(static_cast<long>(p.relators.size()) == pairs + I + pbn + kernel + I * binom(N, 2) + tblock);
        CHECK(p.num_gens() == I + binom(N, 2) + r);
    }
    // disk with punctures: T1 central
    const auto d = mcg_presentation_genus0(MarkedSurface(0, {1}, 3));
    CHECK(has_relator(d, commutator(d.g("a1_2"), d.g("T1"))));
    CHECK(has_relator(d, commutator(d.g("s1"), d.g("T1"))));
    // boundary half twists exchange the boundary twists
    const auto b = mcg_presentation_genus0(MarkedSurface(0, {2, 2}, 1));
    CHECK(has_relator(b, b.parse_word("s2 T1 s2' T2'")));
    // no boundary: same as Im(pi)
    const MarkedSurface sp(0, {}, 5);
    CHECK(mcg_presentation_genus0(sp).relators == impi_presentation_genus0(sp).relators);
    CHECK_THROWS(mcg_presentation_genus0(MarkedSurface(0, {1, 1}, 0)));
}

TEST_CASE("pmod_g1_presentation") {
    const auto p10 = pmod_g1_presentation(1, 0);
    CHECK(p10.generators == std::vector<std::string>{"x0", "y1"});
    CHECK(p10.relators.size() == 1);
    const auto p12 = pmod_g1_presentation(1, 2);
    CHECK(p12.relators == artin_presentation(gamma_g1n(1, 2)).relators);

    // Delta^4(y1,y2,y3,z) = Delta^2(x0,y1,y2,y3,z): each of the A4 letters occurs
    // 4 * 10 / 4 = 10 times, each A5 letter 6 times.
    const auto p20 = pmod_g1_presentation(2, 0);
    const auto artin = artin_presentation(gamma_g1n(2, 0));
    REQUIRE(p20.relators.size() == artin.relators.size() + 1);
    const Word r = p20.relators.back();
    CHECK(r.degree(p20.index_of("x0")) == -6);
    for (auto name : {"y1", "y2", "y3", "z"}) CHECK(r.degree(p20.index_of(name)) == 4);
    CHECK(r.size() <= 70);

    const auto p33 = pmod_g1_presentation(3, 3);
    CHECK(p33.relators.size() > artin_presentation(gamma_g1n(3, 3)).relators.size());
    CHECK_THROWS(pmod_g1_presentation(0, 2));
}

TEST_CASE("kernel words") {
    const auto k = kernel_words_g1(1, 3);
    const auto p = artin_presentation(gamma_g0n(1, 3));
    CHECK(k.x_n_prime == p.g("x0"));
    CHECK(k.e_prime == (p.g("x0") * p.g("y1")).pow(6));
    CHECK(k.e == (p.g("v1") * p.g("v2")).pow(3));
    CHECK(k.x_n == p.g("x0").pow(-2) * (p.g("x1") * p.g("v1") * p.g("v2")).pow(3));

    const auto k2 = kernel_words_g1(2, 1);
    const auto p2 = artin_presentation(gamma_g0n(2, 1));
    CHECK(k2.x_n == p2.g("x1"));
    CHECK(k2.e.empty());
    CHECK(k2.x_n_prime.degree(p2.index_of("x0")) == -1);
}

TEST_CASE("s_ij and a_ij words") {
    const auto p = artin_presentation(gamma_g0n(1, 4));
    CHECK(sij_word(p, 2, 2) == p.g("x2"));
    CHECK(sij_word(p, 1, 2).size() == 9);
    CHECK(p.word_text(sij_word(p, 1, 2)) == "y1 x0 x2 y1 x1 y1' x2' x0' y1'");
    CHECK(aij_word_genus(p, 1, 2) == p.g("x0") * p.g("x2") * p.g("x1", -1) * sij_word(p, 1, 2).inverse());
    CHECK_THROWS(sij_word(p, 3, 2));
    CHECK_THROWS(aij_word_genus(p, 2, 2));
}

TEST_CASE("mcg_presentation_genus_ge1") {
    const auto p = mcg_presentation_genus_ge1(MarkedSurface(1, {}, 3));
    Word S, A;
    for (int j = 1; j <= 3; ++j) S *= sij_word(p, 1, j);
    for (int i = 1; i <= 3; ++i)
        for (int j = i + 1; j <= 3; ++j) A *= aij_word_genus(p, i, j);
    const Word x0 = p.g("x0");
    CHECK(has_relator(p, x0.pow(3) * (x0.pow(-2) * S * A).inverse()));
    CHECK(has_relator(p, p.g("v1").pow(2) * aij_word_genus(p, 1, 2).inverse()));

    const auto b = mcg_presentation_genus_ge1(MarkedSurface(2, {3}, 0));
    CHECK(b.has("T1"));
    const int t1 = b.index_of("T1");
    bool found = false;
    for (const auto& r : b.relators) found = found || r.degree(t1) == -3;
    CHECK(found);

    // v_k exists only for k in I
    const auto mixed = mcg_presentation_genus_ge1(MarkedSurface(1, {1, 2}, 2));
    CHECK(mixed.has("v1"));
    CHECK_FALSE(mixed.has("v2"));
    CHECK_FALSE(mixed.has("v3"));
    CHECK(mixed.has("x4"));
    CHECK_THROWS(mcg_presentation_genus_ge1(MarkedSurface(0, {}, 4)));
}

TEST_CASE("theta kills the genus >= 1 relators") {
    for (int g = 1; g <= 3; ++g)
        for (int n = 0; n <= 3; ++n)
            for (const std::vector<int>& b : std::vector<std::vector<int>>{{}, {1}, {2, 2}, {1, 3}}) {
                const MarkedSurface s(g, b, n);
                const auto p = mcg_presentation_genus_ge1(s);
                CHECK(verify_homomorphism(p, theta_images(p, s.quotient_points() + 1), s.quotient_points() + 1).ok);
            }
}

TEST_CASE("annulus_presentation") {
    CHECK(abelianization(annulus_presentation(1, 1, false)) == std::vector<std::int64_t>{0});
    CHECK(abelianization(annulus_presentation(1, 1)) == std::vector<std::int64_t>{2, 0});
    CHECK(annulus_presentation(2, 3).to_text() == "gens: r1 r2\nrel: r1 r2 r1' r2'\nrel: r1 r1 r2' r2' r2'\n");
    const auto h = annulus_presentation(2, 2);
    CHECK(has_relator(h, h.parse_word("t r1 t' r2'")));
    CHECK(has_relator(h, h.parse_word("t t")));
    CHECK_THROWS(annulus_presentation(0, 1));
}
