#include "mcg/presentations.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <stdexcept>

namespace mcg {

namespace {

std::string s_name(int k) { return "s" + std::to_string(k); }
std::string t_name(int l) { return "T" + std::to_string(l); }

// p<q<r<s families of the pure braid presentation over a(i, j).
void add_pure_braid_relators(Presentation& p, int n, const std::function<Word(int, int)>& a) {
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int k = j + 1; k <= n; ++k)
                for (int l = k + 1; l <= n; ++l) p.add_relator(commutator(a(i, j), a(k, l)));
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int k = j + 1; k <= n; ++k)
                for (int l = k + 1; l <= n; ++l) p.add_relator(commutator(a(i, l), a(j, k)));
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int k = j + 1; k <= n; ++k) {
                const Word w1 = a(i, k) * a(j, k) * a(i, j);
                const Word w2 = a(j, k) * a(i, j) * a(i, k);
                const Word w3 = a(i, j) * a(i, k) * a(j, k);
                p.add_relation(w1, w2);
                p.add_relation(w2, w3);
            }
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int k = j + 1; k <= n; ++k)
                for (int l = k + 1; l <= n; ++l)
                    p.add_relator(commutator(conjugate(a(k, l), a(i, k)), a(j, l)));
}

// (a12...a1n)(a23...a2n)...(a(n-1)n)
Word full_product(int n, const std::function<Word(int, int)>& a) {
    Word w;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) w *= a(i, j);
    return w;
}

Word first_row_product(int n, const std::function<Word(int, int)>& a) {
    Word w;
    for (int j = 2; j <= n; ++j) w *= a(1, j);
    return w;
}

void add_nonempty(Presentation& p, const Word& w) {
    if (!w.empty()) p.add_relator(w);
}

int trailing_number(const std::string& name) {
    std::size_t k = name.size();
    while (k > 0 && std::isdigit(static_cast<unsigned char>(name[k - 1]))) --k;
    if (k == name.size()) return -1;
    return std::stoi(name.substr(k));
}

void check_genus0(const MarkedSurface& s) {
    if (s.genus() != 0) throw std::invalid_argument("genus 0 presentation requested for genus " + std::to_string(s.genus()));
    if (classify(s).kind == SurfaceKind::UnpuncturedAnnulus)
        throw std::invalid_argument("the unpunctured annulus is handled by annulus_presentation");
}

// Boundary component index (1-based) sitting at quotient position k, or 0 for a puncture.
int boundary_at(const MarkedSurface& s, int k) { return k > s.punctures() ? k - s.punctures() : 0; }

// Presentation over a subset of a Coxeter graph's vertices with Delta words.
struct GraphWords {
    CoxeterGraph graph;
    Presentation* p;

    Word delta(const std::vector<std::string>& names, int power) const {
        const auto t = classify_induced(graph, names);
        if (t.family == DynkinFamily::Unsupported) {
            std::string msg = "unsupported Delta subset {";
            for (const auto& v : names) msg += " " + v;
            throw std::runtime_error(msg + " }");
        }
        const Word w = fundamental_word(t, power);
        std::vector<Letter> out;
        for (Letter l : w.letters())
            out.push_back(make_letter(p->index_of(graph.vertices[letter_gen(l)]), letter_sign(l)));
        return Word(out);
    }

    Word g(const std::string& name, int sign = 1) const { return p->g(name, sign); }
};

std::string x(int i) { return "x" + std::to_string(i); }
std::string y(int j) { return "y" + std::to_string(j); }
std::string v(int k) { return "v" + std::to_string(k); }

// Relation blocks shared by PMod(S_(g,1), P_n) and the genus >= 1 presentation.
// T(i) is the boundary twist factor of the i-th quotient puncture.
void add_fundamental_relations(GraphWords& G, int g, int n, const std::function<Word(int)>& T) {
    Presentation& p = *G.p;
    const std::vector<std::string> Y4{"y1", "y2", "y3", "z"};
    if (g >= 2) {
        std::vector<std::string> x0y = {"x0", "y1", "y2", "y3", "z"};
        p.add_relation(G.delta(Y4, 4), G.delta(x0y, 2));
    }
    if (g >= 3) {
        std::vector<std::string> e6{"y1", "y2", "y3", "y4", "y5", "z"};
        std::vector<std::string> e7{"x0", "y1", "y2", "y3", "y4", "y5", "z"};
        p.add_relation(G.delta(e6, 2), G.delta(e7, 1));
    }
    for (int i = 1; i <= n - 1; ++i)
        for (int j = 1; j < i; ++j) {
            const Word d = G.delta({x(i + 1), x(j), "y1"}, 1);
            const Word c = d.inverse() * G.g(x(i)) * d;
            for (int k = 0; k < j; ++k) p.add_relator(commutator(G.g(x(k)), c));
        }
    if (g >= 2)
        for (int i = 1; i <= n - 1; ++i)
            for (int j = 0; j < i; ++j) {
                const Word d = G.delta({x(i + 1), x(j), "y1"}, 1);
                p.add_relator(commutator(G.g("y2"), d.inverse() * G.g(x(i)) * d));
            }
    if (g >= 2 && n >= 1) {
        std::vector<std::string> d6{"x0", "x1", "y1", "y2", "y3", "z"};
        std::vector<std::string> a5{"x1", "y1", "y2", "y3", "z"};
        p.add_relation(G.delta(d6, 1), T(1) * G.delta(a5, 2));
    }
    if (g >= 2)
        for (int i = 1; i <= n - 1; ++i) {
            const Word lhs = G.delta({x(i), x(i + 1), "y1", "y2", "y3", "z"}, 1) *
                             G.delta({x(i + 1), "y1", "y2", "y3", "z"}, -2);
            const Word rhs = T(i + 1) * G.delta({"x0", x(i), x(i + 1), "y1"}, 1) *
                             G.delta({"x0", x(i + 1), "y1"}, -2);
            p.add_relation(lhs, rhs);
        }
}

// Adds the vertices of g (keeping those accepted by keep) as generators and
// their Artin relators.
void add_artin_part(Presentation& p, const CoxeterGraph& g, const std::function<bool(const std::string&)>& keep) {
    std::vector<int> ids;
    for (int i = 0; i < g.size(); ++i) {
        if (!keep(g.vertices[i])) continue;
        ids.push_back(i);
        p.add_generator(g.vertices[i], g.vertices[i][0] == 'v' ? GenRole::HalfTwist : GenRole::Artin);
    }
    for (std::size_t a = 0; a < ids.size(); ++a)
        for (std::size_t b = a + 1; b < ids.size(); ++b) {
            const int m = g.m[ids[a]][ids[b]];
            const int ga = p.index_of(g.vertices[ids[a]]);
            const int gb = p.index_of(g.vertices[ids[b]]);
            p.add_relation(prod_word(ga, gb, m), prod_word(gb, ga, m));
        }
}

}  // namespace

std::string aij_name(int i, int j) { return "a" + std::to_string(i) + "_" + std::to_string(j); }

Presentation braid_presentation(int n) {
    if (n < 2) throw std::invalid_argument("braid_presentation needs n >= 2");
    Presentation p;
    for (int i = 1; i < n; ++i) p.add_generator(s_name(i), GenRole::HalfTwist);
    for (int i = 1; i + 1 < n; ++i) {
        const Word a = p.g(s_name(i)), b = p.g(s_name(i + 1));
        p.add_relation(a * b * a, b * a * b);
    }
    for (int i = 1; i < n; ++i)
        for (int j = i + 2; j < n; ++j) p.add_relator(commutator(p.g(s_name(i)), p.g(s_name(j))));
    return p;
}

Presentation pure_braid_presentation(int n) {
    if (n < 2) throw std::invalid_argument("pure_braid_presentation needs n >= 2");
    Presentation p;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) p.add_generator(aij_name(i, j), GenRole::DehnTwist);
    add_pure_braid_relators(p, n, [&](int i, int j) { return p.g(aij_name(i, j)); });
    return p;
}

Word aij_in_braid(int i, int j, int n) {
    if (i < 1 || j <= i || j > n) throw std::invalid_argument("aij_in_braid: need 1 <= i < j <= n");
    Word c;
    for (int k = j - 1; k > i; --k) c *= Word::gen(k - 1);
    return c * Word::gen(i - 1).pow(2) * c.inverse();
}

Presentation sphere_mcg_presentation(int n) {
    Presentation p = braid_presentation(n);
    Word c;
    for (int i = 1; i < n; ++i) c *= p.g(s_name(i));
    Word back;
    for (int i = n - 1; i >= 1; --i) back *= p.g(s_name(i));
    add_nonempty(p, c.pow(n));
    add_nonempty(p, c * back);
    return p;
}

Presentation pmod_sphere_presentation(int n) {
    if (n < 3) throw std::invalid_argument("pmod_sphere_presentation needs n >= 3");
    Presentation p = pure_braid_presentation(n);
    auto a = [&](int i, int j) { return p.g(aij_name(i, j)); };
    p.add_relator(full_product(n, a));
    p.add_relator(first_row_product(n, a));
    return p;
}

Presentation sigma_S_presentation(const MarkedSurface& s) {
    const auto I = index_set_I(s);
    Presentation p;
    for (int k : I) p.add_generator("Per" + std::to_string(k), GenRole::Other);
    auto per = [&](int k) { return p.g("Per" + std::to_string(k)); };
    for (int i : I)
        for (int j : I) {
            if (j <= i) continue;
            if (j - i > 1) p.add_relator(commutator(per(i), per(j)));
            else p.add_relation(per(i) * per(j) * per(i), per(j) * per(i) * per(j));
        }
    for (int i : I) p.add_relator(per(i).pow(2));
    return p;
}

Presentation impi_presentation_genus0(const MarkedSurface& s, Genus0Options opt) {
    check_genus0(s);
    const int N = s.quotient_points();
    const auto I = index_set_I(s);
    Presentation p;
    for (int k : I) p.add_generator(s_name(k), GenRole::HalfTwist);
    for (int i = 1; i <= N; ++i)
        for (int j = i + 1; j <= N; ++j) p.add_generator(aij_name(i, j), GenRole::DehnTwist);
    auto sg = [&](int k, int sign = 1) { return p.g(s_name(k), sign); };
    auto a = [&](int i, int j) { return p.g(aij_name(i, j)); };

    for (int i : I)
        for (int j : I) {
            if (j <= i) continue;
            if (j - i > 1) p.add_relator(commutator(sg(i), sg(j)));
            else p.add_relation(sg(i) * sg(j) * sg(i), sg(j) * sg(i) * sg(j));
        }
    for (int k : I) p.add_relation(sg(k).pow(2), a(k, k + 1));

    add_pure_braid_relators(p, N, a);
    add_nonempty(p, full_product(N, a));
    add_nonempty(p, first_row_product(N, a));

    for (int k : I)
        for (int i = 1; i <= N; ++i)
            for (int j = i + 1; j <= N; ++j) {
                const Word lhs = sg(k, -1) * a(i, j) * sg(k);
                if (k == i && j == i + 1) {
                    p.add_relation(lhs, a(i, j));
                } else if (k == i - 1) {
                    p.add_relation(lhs, a(i - 1, j));
                } else if (k == i) {
                    const Word c = a(i, i + 1);
                    p.add_relation(lhs, opt.literal_conjugation ? c * a(i + 1, j) * c.inverse()
                                                                : c.inverse() * a(i + 1, j) * c);
                } else if (k == j - 1) {
                    p.add_relation(lhs, a(i, j - 1));
                } else if (k == j) {
                    const Word c = a(j, j + 1);
                    p.add_relation(lhs, opt.literal_conjugation ? c * a(i, j + 1) * c.inverse()
                                                                : c.inverse() * a(i, j + 1) * c);
                } else {
                    p.add_relation(a(i, j) * sg(k), sg(k) * a(i, j));
                }
            }
    return p;
}

Presentation mcg_presentation_genus0(const MarkedSurface& s, Genus0Options opt) {
    Presentation p = impi_presentation_genus0(s, opt);
    const int r = s.boundary_count();
    const int N = s.quotient_points();
    for (int l = 1; l <= r; ++l) p.add_generator(t_name(l), GenRole::BoundaryTwist);
    auto T = [&](int l) { return p.g(t_name(l)); };

    for (int l1 = 1; l1 <= r; ++l1)
        for (int l2 = l1 + 1; l2 <= r; ++l2) p.add_relator(commutator(T(l1), T(l2)));
    for (int i = 1; i <= N; ++i)
        for (int j = i + 1; j <= N; ++j)
            for (int l = 1; l <= r; ++l) p.add_relator(commutator(p.g(aij_name(i, j)), T(l)));
    for (int k : index_set_I(s)) {
        const Word sk = p.g(s_name(k));
        const int b1 = boundary_at(s, k);
        if (b1 > 0) p.add_relation(sk * T(b1) * sk.inverse(), T(b1 + 1));
        for (int l = 1; l <= r; ++l)
            if (b1 == 0 || (l != b1 && l != b1 + 1)) p.add_relator(commutator(sk, T(l)));
    }
    return p;
}

std::vector<Perm> theta_images(const Presentation& p, int degree) {
    std::vector<Perm> out;
    for (int i = 0; i < p.num_gens(); ++i) {
        if (p.roles[i] == GenRole::HalfTwist) {
            const int k = trailing_number(p.generators[i]);
            if (k < 1 || k >= degree) throw std::invalid_argument("half twist " + p.generators[i] + " out of range");
            out.push_back(transposition(degree, k - 1, k));
        } else {
            out.push_back(perm_identity(degree));
        }
    }
    return out;
}

std::vector<std::vector<std::int64_t>> boundary_degree_images(const Presentation& p, const MarkedSurface& s) {
    std::vector<int> counts = s.boundary();
    counts.erase(std::unique(counts.begin(), counts.end()), counts.end());
    const int rank = static_cast<int>(counts.size());
    std::vector<std::vector<std::int64_t>> out;
    for (int i = 0; i < p.num_gens(); ++i) {
        std::vector<std::int64_t> e(rank, 0);
        if (p.roles[i] == GenRole::BoundaryTwist) {
            const int l = trailing_number(p.generators[i]);
            if (l < 1 || l > s.boundary_count()) throw std::invalid_argument("unknown boundary twist " + p.generators[i]);
            const int marks = s.boundary()[l - 1];
            e[std::lower_bound(counts.begin(), counts.end(), marks) - counts.begin()] = 1;
        }
        out.push_back(std::move(e));
    }
    return out;
}

Presentation pmod_g1_presentation(int g, int n) {
    if (g < 1) throw std::invalid_argument("pmod_g1_presentation needs g >= 1");
    if (n < 0) throw std::invalid_argument("negative puncture count");
    Presentation p;
    const CoxeterGraph graph = gamma_g1n(g, n);
    add_artin_part(p, graph, [](const std::string&) { return true; });
    GraphWords G{graph, &p};
    add_fundamental_relations(G, g, n, [](int) { return Word(); });
    return p;
}

Word sij_word(const Presentation& p, int i, int j) {
    if (i < 1 || j < i) throw std::invalid_argument("sij_word: need 1 <= i <= j");
    if (i == j) return p.g(x(i));
    const Word c = p.g("y1") * p.g(x(i - 1)) * p.g(x(j)) * p.g("y1");
    return c * p.g(x(j - 1)) * c.inverse();
}

Word aij_word_genus(const Presentation& p, int i, int j) {
    if (i < 1 || j <= i) throw std::invalid_argument("aij_word_genus: need 1 <= i < j");
    return p.g(x(i - 1)) * sij_word(p, i + 1, j) * p.g(x(i), -1) * sij_word(p, i, j).inverse();
}

KernelWords kernel_words_g1(int g, int n) {
    if (g < 1) throw std::invalid_argument("kernel_words_g1 needs g >= 1");
    Presentation p;
    const CoxeterGraph graph = gamma_g0n(g, n);
    add_artin_part(p, graph, [](const std::string&) { return true; });
    GraphWords G{graph, &p};
    KernelWords k;
    std::vector<std::string> xv;
    if (n >= 1) xv.push_back("x1");
    for (int i = 1; i < n; ++i) xv.push_back(v(i));
    k.x_n = p.g("x0").pow(1 - n) * (xv.empty() ? Word() : G.delta(xv, 1));
    if (g >= 2) {
        std::vector<std::string> zy{"z"};
        for (int j = 2; j <= 2 * g - 1; ++j) zy.push_back(y(j));
        k.x_n_prime = p.g("x0").pow(3 - 2 * g) * G.delta(zy, 1);
    } else {
        k.x_n_prime = p.g("x0");
        std::vector<std::string> vs;
        for (int i = 1; i < n; ++i) vs.push_back(v(i));
        if (!vs.empty()) k.e = G.delta(vs, 2);
        k.e_prime = G.delta({"x0", "y1"}, 4);
    }
    return k;
}

Presentation mcg_presentation_genus_ge1(const MarkedSurface& s) {
    const int g = s.genus();
    if (g < 1) throw std::invalid_argument("mcg_presentation_genus_ge1 needs genus >= 1");
    const int m = s.punctures();
    const int r = s.boundary_count();
    const int N = s.quotient_points();
    const auto I = index_set_I(s);

    Presentation p;
    const CoxeterGraph graph = gamma_g0n(g, N);
    add_artin_part(p, graph, [&](const std::string& name) {
        return name[0] != 'v' || I.count(trailing_number(name)) > 0;
    });
    for (int l = 1; l <= r; ++l) p.add_generator(t_name(l), GenRole::BoundaryTwist);
    auto T = [&](int i) {
        if (i <= m) return Word();
        return p.g(t_name(i - m)).pow(s.boundary()[i - m - 1]);
    };

    GraphWords G{graph, &p};
    add_fundamental_relations(G, g, N, T);

    auto a = [&](int i, int j) { return aij_word_genus(p, i, j); };
    Word S;
    for (int j = 1; j <= N; ++j) S *= sij_word(p, 1, j);
    const Word A = full_product(N, a);
    const Word x0 = p.g("x0");
    if (g == 1) {
        p.add_relation(x0.pow(N), x0.pow(1 - N) * S * A);
        p.add_relation(G.delta({"x0", "y1"}, 4), A);
    } else {
        std::vector<std::string> zy{"z"};
        for (int j = 2; j <= 2 * g - 1; ++j) zy.push_back(y(j));
        p.add_relation(x0.pow(2 - 2 * g + N) * G.delta(zy, 1), x0.pow(1 - N) * S * A);
    }
    for (int i : I) p.add_relation(p.g(v(i)).pow(2), a(i, i + 1));

    auto Tb = [&](int l) { return p.g(t_name(l)); };
    for (int l1 = 1; l1 <= r; ++l1)
        for (int l2 = l1 + 1; l2 <= r; ++l2) p.add_relator(commutator(Tb(l1), Tb(l2)));
    for (int l = 1; l <= r; ++l)
        for (int i = 0; i < p.num_gens(); ++i) {
            const auto& name = p.generators[i];
            if (name[0] == 'x' || name[0] == 'y' || name[0] == 'z') p.add_relator(commutator(Tb(l), Word::gen(i)));
        }
    for (int k : I) {
        const Word vk = p.g(v(k));
        const int b1 = boundary_at(s, k);
        if (b1 > 0) p.add_relation(vk * Tb(b1) * vk.inverse(), Tb(b1 + 1));
        for (int l = 1; l <= r; ++l)
            if (b1 == 0 || (l != b1 && l != b1 + 1)) p.add_relator(commutator(vk, Tb(l)));
    }
    return p;
}

Presentation annulus_presentation(int p, int q, bool with_swap) {
    if (p < 1 || q < 1) throw std::invalid_argument("annulus_presentation needs p, q >= 1");
    Presentation h;
    h.add_generator("r1", GenRole::BoundaryTwist);
    h.add_generator("r2", GenRole::BoundaryTwist);
    const Word r1 = h.g("r1"), r2 = h.g("r2");
    h.add_relator(commutator(r1, r2));
    h.add_relation(r1.pow(p), r2.pow(q));
    if (p == q && with_swap) {
        h.add_generator("t", GenRole::Other);
        const Word t = h.g("t");
        h.add_relator(t.pow(2));
        h.add_relation(t * r1 * t.inverse(), r2);
    }
    return h;
}

}  // namespace mcg
