#include "mcg/fourpunct.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace mcg {

TaggedTriangulation sphere4_maximal_beta() {
    return TaggedTriangulation::from_sides({"beta1", "beta2", "beta3", "beta4", "beta5", "beta6"},
                                           {{0, 3, 2}, {0, 1, 4}, {3, 4, 5}, {2, 5, 1}});
}

bool is_maximal_quiver(const Seed& s) {
    if (s.size() != 6) throw std::invalid_argument("the 4-punctured sphere has rank 6");
    if (s.matrix.arrow_count() != 12) return false;
    return seed_isomorphic(s, seed_of(stock::sphere4_maximal())).has_value();
}

bool is_maximal_triangulation(const TaggedTriangulation& t) {
    return t.self_folded_count() == 0 && is_maximal_quiver(seed_of(t));
}

std::vector<std::vector<int>> triangle_arc_sets(const TaggedTriangulation& t) {
    std::vector<std::vector<int>> out;
    for (const auto& tri : t.triangles()) {
        std::set<int> arcs;
        for (int s : tri.side)
            if (s >= 0) arcs.insert(s);
        if (arcs.size() == 3) out.emplace_back(arcs.begin(), arcs.end());
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool preserves_triangles(const TaggedTriangulation& a, const TaggedTriangulation& b, const std::vector<int>& pi) {
    auto image = triangle_arc_sets(a);
    for (auto& tri : image) {
        for (auto& x : tri) x = pi[x];
        std::sort(tri.begin(), tri.end());
    }
    std::sort(image.begin(), image.end());
    return image == triangle_arc_sets(b);
}

Mu6526Report verify_mu6526() {
    Mu6526Report r;
    const Seed maximal = seed_of(stock::sphere4_maximal());
    const Seed start = seed_of(stock::sphere4_three_self_folded());
    const Seed fwd = mutation_path(start, {6, 5, 2, 6});
    if (auto w = seed_isomorphic(fwd, maximal)) {
        r.forward_isomorphic = true;
        r.witness = *w;
    }
    TaggedTriangulation t = stock::sphere4_three_self_folded();
    for (int k : {6, 5, 2, 6}) t = t.flip(k - 1);
    r.forward_is_triangulation = is_maximal_triangulation(t) && adjacency_matrix(t) == fwd.matrix;
    r.reverse_returns = mutation_path(fwd, {6, 2, 5, 6}).matrix == start.matrix;
    TaggedTriangulation m = stock::sphere4_maximal();
    for (int k : {6, 5, 2, 6}) m = m.flip(k - 1);
    r.maximal_path_not_maximal = !is_maximal_triangulation(m);
    r.maximal_path_self_folded = m.self_folded_count();
    return r;
}

bool SigmaSwapReport::ok() const {
    const bool swap_listed = std::find(quiver_transpositions.begin(), quiver_transpositions.end(),
                                       std::pair<int, int>{2, 4}) != quiver_transpositions.end();
    const bool one_three_listed = std::find(quiver_transpositions.begin(), quiver_transpositions.end(),
                                            std::pair<int, int>{1, 3}) != quiver_transpositions.end();
    return phi_is_isomorphism && !phi_preserves_triangles && sigma_phi_is_isomorphism &&
           sigma_phi_preserves_triangles && swap_squares_to_identity && swap_listed && !one_three_listed;
}

namespace {

bool is_isomorphism(const ExchangeMatrix& a, const ExchangeMatrix& b, const std::vector<int>& pi) {
    for (int i = 0; i < a.size(); ++i)
        for (int j = 0; j < a.size(); ++j)
            if (b(pi[i], pi[j]) != a(i, j)) return false;
    return true;
}

}  // namespace

SigmaSwapReport sigma_swap_check() {
    SigmaSwapReport r;
    const auto ta = stock::sphere4_maximal();
    const auto tb = sphere4_maximal_beta();
    const ExchangeMatrix a = adjacency_matrix(ta), b = adjacency_matrix(tb);
    const std::vector<int> phi{0, 1, 2, 3, 4, 5};
    const std::vector<int> sigma_phi{0, 3, 2, 1, 4, 5};
    r.phi_is_isomorphism = is_isomorphism(a, b, phi);
    r.phi_preserves_triangles = preserves_triangles(ta, tb, phi);
    r.sigma_phi_is_isomorphism = is_isomorphism(a, b, sigma_phi);
    r.sigma_phi_preserves_triangles = preserves_triangles(ta, tb, sigma_phi);
    std::vector<int> twice(6);
    for (int i = 0; i < 6; ++i) twice[i] = sigma_phi[sigma_phi[i]];
    r.swap_squares_to_identity = twice == phi;
    for (int i = 0; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j) {
            std::vector<int> t = phi;
            std::swap(t[i], t[j]);
            if (is_isomorphism(a, a, t)) r.quiver_transpositions.emplace_back(i + 1, j + 1);
        }
    return r;
}

DichotomyReport twelve_arrow_dichotomy(int depth) {
    DichotomyReport r;
    for (const auto& t : flip_orbit(stock::sphere4_maximal(), depth)) {
        ++r.triangulations;
        if (adjacency_matrix(t).arrow_count() != 12) continue;
        ++r.twelve_arrows;
        if (t.self_folded_count() == 0 && is_maximal_quiver(seed_of(t))) ++r.maximal;
        else if (t.self_folded_count() == 3) ++r.three_self_folded;
        else ++r.violations;
    }
    return r;
}

std::vector<std::string> fourpunct_report() {
    std::vector<std::string> out;
    auto line = [&](bool ok, const std::string& detail) { out.push_back((ok ? "PASS" : "FAIL") + std::string(" fourpunct ") + detail); };
    const ExchangeMatrix m = adjacency_matrix(stock::sphere4_maximal());
    line(m.arrow_count() == 12, "maximal-arrows=" + std::to_string(m.arrow_count()));
    line(stock::sphere4_three_self_folded().self_folded_count() == 3, "three-self-folded");
    const auto mu = verify_mu6526();
    std::string w;
    for (int x : mu.witness) w += (w.empty() ? "" : ",") + std::to_string(x + 1);
    line(mu.ok(), "mu(6,5,2,6) witness=[" + w + "] reverse(6,2,5,6)=" + (mu.reverse_returns ? "identity" : "no"));
    const auto sw = sigma_swap_check();
    std::string ts;
    for (auto [i, j] : sw.quiver_transpositions) ts += "(" + std::to_string(i) + " " + std::to_string(j) + ")";
    line(sw.ok(), "sigma-swap quiver-transpositions=" + ts);
    const auto d = twelve_arrow_dichotomy(4);
    line(d.ok(), "dichotomy depth=4 twelve-arrow=" + std::to_string(d.twelve_arrows) +
                     " maximal=" + std::to_string(d.maximal) + " three-self-folded=" + std::to_string(d.three_self_folded));
    return out;
}

}  // namespace mcg
