#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "mcg/words.hpp"
#include "oracles.hpp"

using namespace mcg;

namespace {

Presentation cyclic(int n) {
    Presentation p;
    p.add_generator("x");
    p.add_relator(p.g("x").pow(n));
    return p;
}

Presentation braid3() {
    Presentation p;
    p.add_generator("s1");
    p.add_generator("s2");
    p.add_relation(p.parse_word("s1 s2 s1"), p.parse_word("s2 s1 s2"));
    return p;
}

}  // namespace

TEST_CASE("free reduction") {
    CHECK(Word({1, -1, 2}) == Word::gen(1));
    CHECK(Word(std::vector<Letter>{}).empty());
    CHECK(Word({1, 2, -2, -1}).empty());
    CHECK_THROWS(free_reduce({1, 5}, 3));
    CHECK_THROWS(free_reduce({0}));
    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<Letter> raw;
        for (int i = 0; i < 20; ++i) raw.push_back(make_letter(rng() % 3, rng() % 2 ? 1 : -1));
        Word w(raw);
        CHECK(Word(w.letters()) == w);
        CHECK(w.size() <= raw.size());
        for (std::size_t i = 1; i < w.size(); ++i) CHECK(w.letters()[i] != -w.letters()[i - 1]);
        CHECK((w * w.inverse()).empty());
    }
}

TEST_CASE("text grammar round trip") {
    Presentation p;
    p.add_generator("s1");
    p.add_generator("s2");
    p.add_relator(p.parse_word("s1 s2 s1 s2' s1' s2'"));
    p.add_relator(Word());
    const std::string text = p.to_text();
    CHECK(text == "gens: s1 s2\nrel: s1 s2 s1 s2' s1' s2'\nrel:\n");
    auto q = Presentation::from_text(text);
    CHECK(q.generators == p.generators);
    CHECK(q.relators == p.relators);
    CHECK_THROWS(Presentation::from_text("gens: a\nrel: b\n"));
}

TEST_CASE("structured form round trip") {
    auto p = braid3();
    const std::string js = p.to_json();
    CHECK(js == R"({"generators":["s1","s2"],"relators":[[[0,1],[1,1],[0,1],[1,-1],[0,-1],[1,-1]]]})");
    auto q = Presentation::from_json(js);
    CHECK(q.relators == p.relators);
    CHECK_THROWS(Presentation::from_json(R"({"generators":["a"],"relators":[[[1,1]]]})"));
}

TEST_CASE("verify_homomorphism into permutation groups") {
    auto b3 = braid3();
    std::vector<Perm> imgs{transposition(3, 0, 1), transposition(3, 1, 2)};
    CHECK(verify_homomorphism(b3, imgs, 3).ok);

    Presentation p;
    p.add_generator("x");
    p.add_relator(p.g("x").pow(2));
    auto res = verify_homomorphism(p, std::vector<Perm>{{1, 2, 0}}, 3);
    CHECK_FALSE(res.ok);
    CHECK(res.failing_relator == 0);
    CHECK(res.image == "[2,0,1]");

    CHECK_THROWS(verify_homomorphism(p, std::vector<Perm>{{0, 0, 1}}, 3));
    CHECK_THROWS(verify_homomorphism(p, std::vector<Perm>{}, 3));
}

TEST_CASE("verify_homomorphism is invariant under relator conjugation") {
    auto b3 = braid3();
    std::vector<Perm> good{transposition(3, 0, 1), transposition(3, 1, 2)};
    std::vector<Perm> bad{Perm{1, 2, 0}, transposition(3, 1, 2)};
    auto conj = b3;
    conj.relators[0] = conjugate(Word::gen(1), conj.relators[0]);
    CHECK(verify_homomorphism(conj, good, 3).ok == verify_homomorphism(b3, good, 3).ok);
    CHECK(verify_homomorphism(conj, bad, 3).ok == verify_homomorphism(b3, bad, 3).ok);
}

TEST_CASE("verify_homomorphism into free abelian groups") {
    auto b3 = braid3();
    CHECK(verify_homomorphism(b3, std::vector<std::vector<std::int64_t>>{{1}, {1}}, 1).ok);
    auto res = verify_homomorphism(b3, std::vector<std::vector<std::int64_t>>{{1}, {0}}, 1);
    CHECK_FALSE(res.ok);
    CHECK(res.image == "[1]");
}

TEST_CASE("abelianization matches determinantal divisors") {
    CHECK(abelianization(braid3()) == std::vector<std::int64_t>{0});
    CHECK(abelianization(cyclic(3)) == std::vector<std::int64_t>{3});

    std::mt19937 rng(11);
    for (int trial = 0; trial < 60; ++trial) {
        Presentation p;
        const int gens = 1 + rng() % 4;
        for (int i = 0; i < gens; ++i) p.add_generator("g" + std::to_string(i));
        const int rels = rng() % 5;
        for (int r = 0; r < rels; ++r) {
            std::vector<Letter> raw;
            const int len = rng() % 9;
            for (int i = 0; i < len; ++i) raw.push_back(make_letter(rng() % gens, rng() % 3 ? 1 : -1));
            p.add_relator(Word(raw));
        }
        const auto expect = oracle::abelian_invariants(p);
        CHECK(abelianization(p) == expect);

        // reordering relators and renaming generators changes nothing
        auto q = p;
        std::reverse(q.relators.begin(), q.relators.end());
        for (auto& name : q.generators) name = "h" + name;
        CHECK(abelianization(q) == abelianization(p));
    }
}

TEST_CASE("todd_coxeter") {
    CHECK(todd_coxeter(cyclic(5), {}, 100) == 5);
    CHECK(todd_coxeter(cyclic(5), {Word::gen(0)}, 100) == 1);
    CHECK_FALSE(todd_coxeter(braid3(), {}, 10000).has_value());

    // Sigma_2 x Sigma_2
    Presentation k;
    k.add_generator("P1");
    k.add_generator("P3");
    k.add_relator(k.g("P1").pow(2));
    k.add_relator(k.g("P3").pow(2));
    k.add_relator(commutator(k.g("P1"), k.g("P3")));
    CHECK(todd_coxeter(k, {}, 1000) == 4);

    // Sigma_4 as a Coxeter group; order checked against permutation closure
    Presentation s4;
    for (int i = 1; i <= 3; ++i) s4.add_generator("P" + std::to_string(i));
    for (int i = 0; i < 3; ++i) s4.add_relator(Word::gen(i).pow(2));
    s4.add_relator((Word::gen(0) * Word::gen(1)).pow(3));
    s4.add_relator((Word::gen(1) * Word::gen(2)).pow(3));
    s4.add_relator((Word::gen(0) * Word::gen(2)).pow(2));
    const auto order = oracle::perm_group_order({transposition(4, 0, 1), transposition(4, 1, 2), transposition(4, 2, 3)});
    CHECK(order == 24);
    CHECK(todd_coxeter(s4, {}, 1000) == order);
    CHECK(todd_coxeter(s4, {Word::gen(0)}, 1000) == 12);
    CHECK_FALSE(todd_coxeter(s4, {}, 5).has_value());
}

TEST_CASE("assemble_extension") {
    Presentation K = cyclic(2);
    K.generators[0] = "a";
    Presentation H = cyclic(2);
    H.generators[0] = "b";

    // Z4: lift b squares to a, conjugation trivial on a
    auto z4 = assemble_extension(K, H, {"bt"}, {Word::gen(0)}, {{Word::gen(0)}});
    CHECK(z4.generators == std::vector<std::string>{"bt", "a"});
    CHECK(z4.relators.size() == 1 + 1 * 1 + 1);
    CHECK(todd_coxeter(z4, {}, 100) == 4);
    CHECK(abelianization(z4) == std::vector<std::int64_t>{4});

    auto klein = assemble_extension(K, H, {"bt"}, {Word()}, {{Word::gen(0)}});
    CHECK(todd_coxeter(klein, {}, 100) == 4);
    CHECK(abelianization(klein) == std::vector<std::int64_t>{2, 2});

    Presentation trivial;
    auto lifted = assemble_extension(trivial, H, {"bt"}, {Word()}, {{}});
    CHECK(lifted.generators == std::vector<std::string>{"bt"});
    CHECK(lifted.relators == H.relators);

    CHECK_THROWS(assemble_extension(K, H, {"bt"}, {Word::gen(3)}, {{Word::gen(0)}}));
    CHECK_THROWS(assemble_extension(K, H, {}, {Word::gen(0)}, {{Word::gen(0)}}));
    CHECK_THROWS(assemble_extension(K, H, {"a"}, {Word::gen(0)}, {{Word::gen(0)}}));
}
