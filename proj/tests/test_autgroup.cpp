#include <doctest.h>

#include <random>

#include "mcg/autgroup.hpp"
#include "mcg/presentations.hpp"

using namespace mcg;

namespace {

std::vector<MarkedSurface> grid() {
    std::vector<MarkedSurface> out;
    const std::vector<std::vector<int>> boundaries{{1}, {2}, {1, 1}, {2, 2}, {1, 2}, {3}};
    for (int n = 0; n <= 4; ++n)
        for (const auto& b : boundaries) {
            MarkedSurface s(0, b, n);
            const auto k = classify(s).kind;
            if (k != SurfaceKind::Excluded && k != SurfaceKind::UnpuncturedAnnulus) out.push_back(s);
        }
    out.emplace_back(0, std::vector<int>{}, 4);
    out.emplace_back(0, std::vector<int>{}, 5);
    out.emplace_back(1, std::vector<int>{}, 1);
    out.emplace_back(1, std::vector<int>{1}, 2);
    return out;
}

TaggedMCGElement random_element(std::mt19937& rng, const TaggedGroupContext& ctx) {
    std::vector<Letter> ls;
    const int len = static_cast<int>(rng() % 7);
    for (int i = 0; i < len; ++i) ls.push_back(make_letter(rng() % ctx.presentation.num_gens(), rng() % 2 ? 1 : -1));
    TaggedMCGElement a;
    a.h = Word(ls);
    a.eps = static_cast<int>(rng() % 2);
    for (int p = 0; p < ctx.punctures; ++p)
        if (rng() % 2) a.R.insert(p);
    return a;
}

}  // namespace

TEST_CASE("identity and symmetric difference") {
    const auto ctx = TaggedGroupContext::for_surface(MarkedSurface(0, {}, 4));
    const TaggedMCGElement id;
    TaggedMCGElement a{ctx.presentation.g("s1") * ctx.presentation.g("s2", -1), 1, {0, 2}};
    CHECK(multiply(ctx, id, a) == a);
    CHECK(multiply(ctx, a, id) == a);
    const TaggedMCGElement r1{Word(), 0, {0, 1}}, r2{Word(), 0, {1, 3}};
    CHECK(multiply(ctx, r1, r2) == TaggedMCGElement{Word(), 0, {0, 3}});
    CHECK(multiply(ctx, r1, r1) == id);
}

TEST_CASE("epsilon twist is an involution on words") {
    std::mt19937 rng(1);
    for (int t = 0; t < 200; ++t) {
        std::vector<Letter> ls;
        for (int i = 0; i < 8; ++i) ls.push_back(make_letter(rng() % 5, rng() % 2 ? 1 : -1));
        const Word w(ls);
        CHECK(epsilon_twist(epsilon_twist(w)) == w);
        CHECK(epsilon_twist(w * w.inverse()).empty());
    }
}

TEST_CASE("group law on the surface grid") {
    std::mt19937 rng(42);
    for (const auto& s : grid()) {
        const auto ctx = TaggedGroupContext::for_surface(s);
        const TaggedMCGElement id;
        for (int trial = 0; trial < 1000; ++trial) {
            const auto a = random_element(rng, ctx), b = random_element(rng, ctx), c = random_element(rng, ctx);
            CHECK(multiply(ctx, multiply(ctx, a, b), c) == multiply(ctx, a, multiply(ctx, b, c)));
            CHECK(multiply(ctx, a, inverse(ctx, a)) == id);
            CHECK(multiply(ctx, inverse(ctx, a), a) == id);
            CHECK(multiply(ctx, id, a) == a);
            // theta is a homomorphism on the h-part
            CHECK(ctx.puncture_perm(a.h * b.h) == perm_compose(ctx.puncture_perm(a.h), ctx.puncture_perm(b.h)));
        }
    }
}

TEST_CASE("the literal h2(R1) convention is not associative") {
    const auto ctx = TaggedGroupContext::for_surface(MarkedSurface(0, {}, 4));
    const TaggedMCGElement a{Word(), 0, {0}};
    const TaggedMCGElement b{ctx.presentation.g("s1"), 0, {}};
    const TaggedMCGElement c{ctx.presentation.g("s2"), 0, {}};
    const auto lit = RConvention::Literal;
    const auto left = multiply(ctx, multiply(ctx, a, b, lit), c, lit);
    const auto right = multiply(ctx, a, multiply(ctx, b, c, lit), lit);
    CHECK(left.R == std::set<int>{2});
    CHECK(right.R == std::set<int>{1});
    CHECK_FALSE(left == right);
    CHECK(multiply(ctx, multiply(ctx, a, b), c) == multiply(ctx, a, multiply(ctx, b, c)));
}

TEST_CASE("element json round trip") {
    std::mt19937 rng(5);
    const auto ctx = TaggedGroupContext::for_surface(MarkedSurface(0, {2}, 3));
    for (int t = 0; t < 50; ++t) {
        const auto a = random_element(rng, ctx);
        CHECK(element_from_json(ctx, element_to_json(ctx, a)) == a);
    }
    CHECK_THROWS(element_from_json(ctx, R"({"h":[],"eps":2,"R":[]})"));
    CHECK_THROWS(element_from_json(ctx, R"({"h":[],"eps":0,"R":[7]})"));
    CHECK_THROWS(element_from_json(ctx, R"({"h":["nope"],"eps":0,"R":[]})"));
}

TEST_CASE("four-punctured sphere bits") {
    const auto ctx = TaggedGroupContext::for_surface(MarkedSurface(0, {}, 4));
    std::mt19937 rng(9);
    const FourPunctSphereElement id;
    const FourPunctSphereElement sigma{{}, 1, 0}, mu{{}, 0, 1};
    CHECK(multiply_fourpunct(ctx, sigma, sigma) == id);
    CHECK(multiply_fourpunct(ctx, mu, mu) == id);
    std::set<std::pair<int, int>> bits;
    for (const auto& x : {id, sigma, mu, multiply_fourpunct(ctx, sigma, mu)})
        for (const auto& y : {id, sigma, mu, multiply_fourpunct(ctx, sigma, mu)}) {
            const auto z = multiply_fourpunct(ctx, x, y);
            bits.emplace(z.sigma_bit, z.mu_bit);
        }
    CHECK(bits.size() == 4);
    for (int t = 0; t < 200; ++t) {
        const FourPunctSphereElement g{random_element(rng, ctx), 0, 0};
        CHECK(multiply_fourpunct(ctx, sigma, g) == multiply_fourpunct(ctx, g, sigma));
        CHECK(multiply_fourpunct(ctx, mu, g) == multiply_fourpunct(ctx, g, mu));
    }
}

TEST_CASE("Di4 x Sigma3 has 48 elements") {
    const auto all = enumerate_di4xsigma3();
    CHECK(all.size() == 48);
    for (const auto& x : all) {
        CHECK_NOTHROW(x.validate());
        CHECK(x * x.inverse() == Di4xSigma3::identity());
    }
    std::set<Perm> squares;
    for (const auto& x : all) squares.insert(x.square);
    CHECK(squares.size() == 8);
    CHECK_THROWS(Di4xSigma3{Perm{1, 0, 2, 3}, perm_identity(3)}.validate());
    CHECK_THROWS(Di4xSigma3{perm_identity(4), Perm{0, 0, 1}}.validate());
}

TEST_CASE("Z x S4 semidirect Z2 satisfies the group axioms") {
    std::mt19937 rng(42);
    auto random = [&] {
        ZxS4semiZ2 x;
        x.k = static_cast<std::int64_t>(rng() % 21) - 10;
        x.s = perm_identity(4);
        std::shuffle(x.s.begin(), x.s.end(), rng);
        x.t = static_cast<int>(rng() % 2);
        return x;
    };
    const auto id = ZxS4semiZ2::identity();
    for (int trial = 0; trial < 1000; ++trial) {
        const auto a = random(), b = random(), c = random();
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * a.inverse() == id);
        CHECK(a.inverse() * a == id);
        CHECK(a * id == a);
        CHECK(id * a == a);
    }
    // not a direct product
    const ZxS4semiZ2 t{0, perm_identity(4), 1}, k{1, perm_identity(4), 0};
    CHECK_FALSE(t * k == k * t);
    CHECK_THROWS(ZxS4semiZ2{0, perm_identity(4), 2}.validate());
}

TEST_CASE("descriptor rows") {
    CHECK(aut_group_descriptor(MarkedSurface(1, {}, 1)).shape == "MCG ⋊ Z₂");
    CHECK(aut_group_descriptor(MarkedSurface(0, {}, 4)).shape == "(MCG⋊Z₂)⋉Z₂^{𝒫₄}×Z₂²");
    CHECK(aut_group_descriptor(MarkedSurface(0, {2, 2}, 0)).shape == "H_{2,2} ⋊ Z₂");
    CHECK(aut_group_descriptor(MarkedSurface(0, {1, 2}, 0)).shape == "H_{1,2}");
    CHECK(aut_group_descriptor(MarkedSurface(0, {4}, 1)).shape == "Di₄ × Σ₃");
    CHECK(aut_group_descriptor(MarkedSurface(0, {2}, 2)).shape == "Z × S₄ ⋊ Z₂");
    CHECK(aut_group_descriptor(MarkedSurface(0, {1}, 3)).shape == "(MCG⋊Z₂)⋉Z₂^{𝒫₃}");
    CHECK(aut_group_descriptor(MarkedSurface(2, {1}, 0)).shape == "(MCG⋊Z₂)⋉Z₂^{𝒫₀}");
    const auto d = aut_group_descriptor(MarkedSurface(0, {2, 2}, 0));
    REQUIRE(d.mcg.has_value());
    CHECK(d.mcg->num_gens() == 3);
    CHECK(aut_group_descriptor(MarkedSurface(1, {}, 1)).mcg.has_value());
    CHECK_THROWS(aut_group_descriptor(MarkedSurface(0, {}, 3)));
    CHECK(descriptor_to_json(d).find("H_{2,2}") != std::string::npos);
}
