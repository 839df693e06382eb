#include "mcg/artin.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace mcg {

int CoxeterGraph::add_vertex(const std::string& name) {
    if (has(name)) throw std::invalid_argument("duplicate vertex " + name);
    vertices.push_back(name);
    for (auto& row : m) row.push_back(2);
    m.emplace_back(vertices.size(), 2);
    m.back().back() = 1;
    return size() - 1;
}

void CoxeterGraph::set_label(int a, int b, int label) {
    if (a == b || label < 2) throw std::invalid_argument("bad Coxeter label");
    m.at(a).at(b) = label;
    m.at(b).at(a) = label;
}

void CoxeterGraph::set_label(const std::string& a, const std::string& b, int label) {
    set_label(index_of(a), index_of(b), label);
}

int CoxeterGraph::index_of(const std::string& name) const {
    auto it = std::find(vertices.begin(), vertices.end(), name);
    if (it == vertices.end()) throw std::invalid_argument("unknown vertex " + name);
    return static_cast<int>(it - vertices.begin());
}

bool CoxeterGraph::has(const std::string& name) const {
    return std::find(vertices.begin(), vertices.end(), name) != vertices.end();
}

CoxeterGraph CoxeterGraph::from_text(const std::string& text) {
    CoxeterGraph g;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string head;
        if (!(ls >> head)) continue;
        if (head == "vertices:") {
            std::string v;
            while (ls >> v) g.add_vertex(v);
        } else if (head == "edge:") {
            std::string a, b;
            int label = 0;
            if (!(ls >> a >> b >> label)) throw std::invalid_argument("malformed edge line: " + line);
            g.set_label(a, b, label);
        } else {
            throw std::invalid_argument("unrecognised line: " + line);
        }
    }
    return g;
}

std::string CoxeterGraph::to_text() const {
    std::string out = "vertices:";
    for (const auto& v : vertices) out += " " + v;
    out += '\n';
    for (int i = 0; i < size(); ++i)
        for (int j = i + 1; j < size(); ++j)
            if (m[i][j] != 2) out += "edge: " + vertices[i] + " " + vertices[j] + " " + std::to_string(m[i][j]) + "\n";
    return out;
}

Word prod_word(int x, int y, int m) {
    if (m < 2) throw std::invalid_argument("prod_word: m must be at least 2");
    std::vector<Letter> letters;
    for (int i = 0; i < m; ++i) letters.push_back(make_letter(i % 2 ? y : x));
    return Word(letters);
}

Presentation artin_presentation(const CoxeterGraph& g) {
    Presentation p;
    for (const auto& v : g.vertices) p.add_generator(v, GenRole::Artin);
    for (int i = 0; i < g.size(); ++i)
        for (int j = i + 1; j < g.size(); ++j)
            p.add_relation(prod_word(i, j, g.m[i][j]), prod_word(j, i, g.m[i][j]));
    return p;
}

CoxeterGraph gamma_g1n(int g, int n) {
    if (g < 1 || n < 0) throw std::invalid_argument("gamma_g1n: need g >= 1, n >= 0");
    CoxeterGraph G;
    for (int i = 0; i <= n; ++i) G.add_vertex("x" + std::to_string(i));
    for (int j = 1; j <= 2 * g - 1; ++j) G.add_vertex("y" + std::to_string(j));
    if (g >= 2) G.add_vertex("z");
    for (int i = 0; i <= n; ++i) G.set_label("x" + std::to_string(i), "y1", 3);
    for (int j = 1; j < 2 * g - 1; ++j) G.set_label("y" + std::to_string(j), "y" + std::to_string(j + 1), 3);
    if (g >= 2) G.set_label("z", "y3", 3);
    return G;
}

CoxeterGraph gamma_g0n(int g, int n) {
    CoxeterGraph G = gamma_g1n(g, n);
    for (int i = 1; i <= n - 1; ++i) G.add_vertex("v" + std::to_string(i));
    for (int i = 1; i < n - 1; ++i) G.set_label("v" + std::to_string(i), "v" + std::to_string(i + 1), 3);
    for (int i = 1; i <= n - 1; ++i) G.set_label("x" + std::to_string(i), "v" + std::to_string(i), 4);
    return G;
}

std::string to_string(const SubgraphType& t) {
    switch (t.family) {
        case DynkinFamily::A: return "A" + std::to_string(t.rank);
        case DynkinFamily::B: return "B" + std::to_string(t.rank);
        case DynkinFamily::D: return "D" + std::to_string(t.rank);
        case DynkinFamily::E6: return "E6";
        case DynkinFamily::E7: return "E7";
        case DynkinFamily::Unsupported: return "Unsupported";
    }
    return "Unsupported";
}

SubgraphType classify_induced(const CoxeterGraph& g, const std::vector<int>& subset) {
    SubgraphType bad;
    std::vector<int> X = subset;
    std::sort(X.begin(), X.end());
    if (X.empty() || std::adjacent_find(X.begin(), X.end()) != X.end()) return bad;
    for (int v : X)
        if (v < 0 || v >= g.size()) throw std::invalid_argument("classify_induced: vertex out of range");
    const int k = static_cast<int>(X.size());

    std::vector<std::vector<int>> adj(k);
    int edges = 0, fours = 0;
    std::pair<int, int> four_edge{-1, -1};
    for (int a = 0; a < k; ++a)
        for (int b = a + 1; b < k; ++b) {
            const int lab = g.m[X[a]][X[b]];
            if (lab == 2) continue;
            if (lab > 4) return bad;
            if (lab == 4) {
                ++fours;
                four_edge = {a, b};
            }
            adj[a].push_back(b);
            adj[b].push_back(a);
            ++edges;
        }
    if (edges != k - 1 || fours > 1) return bad;
    std::vector<bool> seen(k, false);
    std::function<void(int)> dfs = [&](int v) {
        seen[v] = true;
        for (int w : adj[v])
            if (!seen[w]) dfs(w);
    };
    dfs(0);
    if (std::find(seen.begin(), seen.end(), false) != seen.end()) return bad;

    // walk an arm from `from` away from `prev`
    auto arm = [&](int prev, int from) {
        std::vector<int> path{from};
        while (true) {
            int next = -1;
            for (int w : adj[path.back()])
                if (w != prev) next = w;
            if (next < 0 || adj[path.back()].size() > 2) break;
            prev = path.back();
            path.push_back(next);
        }
        return path;
    };
    auto path_from = [&](int end) {
        std::vector<int> p{end};
        if (k > 1) {
            auto rest = arm(end, adj[end][0]);
            p.insert(p.end(), rest.begin(), rest.end());
        }
        return p;
    };
    const int maxdeg = static_cast<int>(
        std::max_element(adj.begin(), adj.end(), [](auto& a, auto& b) { return a.size() < b.size(); })->size());

    SubgraphType out;
    out.rank = k;
    auto finish = [&](DynkinFamily f, const std::vector<int>& local) {
        out.family = f;
        for (int i : local) out.order.push_back(X[i]);
        return out;
    };

    if (maxdeg <= 2) {
        std::vector<int> ends;
        for (int v = 0; v < k; ++v)
            if (adj[v].size() <= 1) ends.push_back(v);
        if (fours == 0) return finish(DynkinFamily::A, path_from(ends.front()));
        int end;
        if (k == 2)
            end = 0;
        else if (adj[four_edge.first].size() == 1)
            end = four_edge.first;
        else if (adj[four_edge.second].size() == 1)
            end = four_edge.second;
        else
            return bad;
        return finish(DynkinFamily::B, path_from(end));
    }
    if (fours) return bad;
    if (maxdeg != 3) return bad;
    int centre = -1;
    for (int v = 0; v < k; ++v)
        if (adj[v].size() == 3) {
            if (centre >= 0) return bad;
            centre = v;
        }
    std::vector<std::vector<int>> arms;
    for (int w : adj[centre]) arms.push_back(arm(centre, w));
    std::stable_sort(arms.begin(), arms.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return *std::min_element(a.begin(), a.end()) < *std::min_element(b.begin(), b.end());
    });
    const auto a0 = arms[0].size(), a1 = arms[1].size(), a2 = arms[2].size();
    if (a0 == 1 && a1 == 1) {
        std::vector<int> local{arms[0][0], arms[1][0], centre};
        if (a2 == 1) {
            // three leaves: the two lowest are x1, x2
            std::vector<int> leaves{arms[0][0], arms[1][0], arms[2][0]};
            std::sort(leaves.begin(), leaves.end());
            local = {leaves[0], leaves[1], centre, leaves[2]};
        } else {
            std::sort(local.begin(), local.begin() + 2);
            local.insert(local.end(), arms[2].begin(), arms[2].end());
        }
        return finish(DynkinFamily::D, local);
    }
    if (a0 == 1 && a1 == 2 && (a2 == 2 || a2 == 3)) {
        // chain: far end of the first long arm, centre, second long arm; short arm last
        const auto& first = a2 == 2 ? arms[1] : arms[2];
        const auto& second = a2 == 2 ? arms[2] : arms[1];
        std::vector<int> local(first.rbegin(), first.rend());
        local.push_back(centre);
        local.insert(local.end(), second.begin(), second.end());
        local.push_back(arms[0][0]);
        return finish(a2 == 2 ? DynkinFamily::E6 : DynkinFamily::E7, local);
    }
    return bad;
}

SubgraphType classify_induced(const CoxeterGraph& g, const std::vector<std::string>& subset) {
    std::vector<int> ids;
    for (const auto& s : subset) ids.push_back(g.index_of(s));
    return classify_induced(g, ids);
}

namespace {

// Coxeter matrix of the standard labelling x1..xk.
std::vector<std::vector<int>> standard_matrix(const SubgraphType& t) {
    const int k = t.rank;
    std::vector<std::vector<int>> m(k, std::vector<int>(k, 2));
    for (int i = 0; i < k; ++i) m[i][i] = 1;
    auto join = [&](int a, int b, int lab = 3) { m[a - 1][b - 1] = m[b - 1][a - 1] = lab; };
    switch (t.family) {
        case DynkinFamily::A:
            for (int i = 1; i < k; ++i) join(i, i + 1);
            break;
        case DynkinFamily::B:
            join(1, 2, 4);
            for (int i = 2; i < k; ++i) join(i, i + 1);
            break;
        case DynkinFamily::D:
            join(1, 3);
            join(2, 3);
            for (int i = 3; i < k; ++i) join(i, i + 1);
            break;
        case DynkinFamily::E6:
            for (int i = 1; i < 5; ++i) join(i, i + 1);
            join(3, 6);
            break;
        case DynkinFamily::E7:
            for (int i = 1; i < 6; ++i) join(i, i + 1);
            join(4, 7);
            break;
        case DynkinFamily::Unsupported: throw std::invalid_argument("unsupported Coxeter type");
    }
    return m;
}

}  // namespace

int positive_root_count(const SubgraphType& t) {
    const int k = t.rank;
    switch (t.family) {
        case DynkinFamily::A: return k * (k + 1) / 2;
        case DynkinFamily::B: return k * k;
        case DynkinFamily::D: return k * (k - 1);
        case DynkinFamily::E6: return 36;
        case DynkinFamily::E7: return 63;
        case DynkinFamily::Unsupported: break;
    }
    throw std::invalid_argument("unsupported Coxeter type");
}

std::vector<int> longest_element_word(const SubgraphType& t) {
    const auto m = standard_matrix(t);
    const int k = t.rank;
    std::vector<std::vector<double>> B(k, std::vector<double>(k));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) B[i][j] = i == j ? 1.0 : -std::cos(std::numbers::pi / m[i][j]);
    // W holds the current element as a matrix in the simple-root basis
    std::vector<std::vector<double>> W(k, std::vector<double>(k, 0.0));
    for (int i = 0; i < k; ++i) W[i][i] = 1.0;
    std::vector<int> word;
    const double eps = 1e-9;
    for (;;) {
        int pick = -1;
        for (int i = 0; i < k && pick < 0; ++i) {
            bool positive = true;
            for (int r = 0; r < k; ++r)
                if (W[r][i] < -eps) positive = false;
            if (positive) pick = i;
        }
        if (pick < 0) break;
        word.push_back(pick);
        // W <- W * s_pick, where s_pick e_j = e_j - 2 B(pick, j) e_pick
        std::vector<double> col(k, 0.0);
        for (int r = 0; r < k; ++r) col[r] = W[r][pick];
        for (int j = 0; j < k; ++j) {
            const double c = 2.0 * B[pick][j];
            if (c == 0.0) continue;
            for (int r = 0; r < k; ++r) W[r][j] -= c * col[r];
        }
    }
    return word;
}

namespace {

Word coxeter_power(const SubgraphType& t, int e) {
    std::vector<Letter> c;
    for (int v : t.order) c.push_back(make_letter(v));
    return Word(c).pow(e);
}

Word delta_squared(const SubgraphType& t) {
    const int k = t.rank;
    switch (t.family) {
        case DynkinFamily::A: return coxeter_power(t, k + 1);
        case DynkinFamily::B: return coxeter_power(t, 2 * k);
        case DynkinFamily::D: return coxeter_power(t, 2 * (k - 1));
        case DynkinFamily::E6: return coxeter_power(t, 12);
        case DynkinFamily::E7: return coxeter_power(t, 18);
        case DynkinFamily::Unsupported: break;
    }
    throw std::invalid_argument("fundamental_word: unsupported type");
}

Word delta(const SubgraphType& t) {
    const int k = t.rank;
    switch (t.family) {
        case DynkinFamily::A: {
            std::vector<Letter> w;
            for (int top = k; top >= 1; --top)
                for (int i = 0; i < top; ++i) w.push_back(make_letter(t.order[i]));
            return Word(w);
        }
        case DynkinFamily::B: return coxeter_power(t, k);
        case DynkinFamily::E7: return coxeter_power(t, 9);
        case DynkinFamily::D:
            if (k % 2 == 0) return coxeter_power(t, k - 1);
            [[fallthrough]];
        case DynkinFamily::E6: {
            std::vector<Letter> w;
            for (int i : longest_element_word(t)) w.push_back(make_letter(t.order[i]));
            return Word(w);
        }
        case DynkinFamily::Unsupported: break;
    }
    throw std::invalid_argument("fundamental_word: unsupported type");
}

}  // namespace

Word fundamental_word(const SubgraphType& t, int power) {
    if (t.family == DynkinFamily::Unsupported) throw std::invalid_argument("fundamental_word: unsupported type");
    if (power < 0) return fundamental_word(t, -power).inverse();
    if (power % 2 == 0) return delta_squared(t).pow(power / 2);
    return delta(t) * delta_squared(t).pow((power - 1) / 2);
}

std::vector<BoundaryTwistIdentity> boundary_twist_identities() {
    return {
        {"A(2p+1)", 2, "T_b1 T_b2", {}, false},
        {"A(2p)", 4, "T_b1", {}, false},
        {"B(2p)", 1, "T_b1 T_b2", {}, false},
        {"B(2p+1)", 2, "T_b1", {}, false},
        {"D(2p+1)", 2, "T_b1 T_b2^(2p-1)", {}, false},
        {"D(2p)", 1, "T_b1 T_b2 b2^(p-1)", {"T_b1 T_b2^p"}, true},
        {"E6", 2, "T_b1", {}, false},
        {"E7", 2, "T_b1 T_b2^2", {}, false},
        {"B(l) graph", 1, "T_b1^(l-1) T_b2", {}, false},
    };
}

}  // namespace mcg
