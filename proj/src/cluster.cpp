#include "mcg/cluster.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <stdexcept>

#include <json.hpp>

namespace mcg {

namespace {

int sgn(std::int64_t x) { return (x > 0) - (x < 0); }

void check_square(const IntMatrix& m) {
    for (const auto& row : m)
        if (row.size() != m.size()) throw std::invalid_argument("exchange matrix must be square");
}

}  // namespace

ExchangeMatrix::ExchangeMatrix(IntMatrix m, std::vector<std::int64_t> sym) : b(std::move(m)), d(std::move(sym)) {
    check_square(b);
    if (!d.empty() && d.size() != b.size()) throw std::invalid_argument("skew-symmetrizer has wrong size");
    if (!skew_symmetrizable()) throw std::invalid_argument("matrix is not skew-symmetrizable by D");
}

bool ExchangeMatrix::skew_symmetrizable() const {
    const int n = size();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const std::int64_t di = d.empty() ? 1 : d[i];
            const std::int64_t dj = d.empty() ? 1 : d[j];
            if (di * b[i][j] != -dj * b[j][i]) return false;
        }
    return true;
}

std::int64_t ExchangeMatrix::arrow_count() const {
    std::int64_t total = 0;
    for (const auto& row : b)
        for (auto x : row) total += std::max<std::int64_t>(x, 0);
    return total;
}

IntMatrix mutate_extended(const IntMatrix& m, int k) {
    const int cols = m.empty() ? 0 : static_cast<int>(m[0].size());
    if (k < 1 || k > cols) throw std::out_of_range("mutation index out of range");
    const int c = k - 1;
    IntMatrix out = m;
    for (std::size_t i = 0; i < m.size(); ++i)
        for (int j = 0; j < cols; ++j) {
            if (static_cast<int>(i) == c || j == c) out[i][j] = -m[i][j];
            else out[i][j] = m[i][j] + sgn(m[i][c]) * std::max<std::int64_t>(m[i][c] * m[c][j], 0);
        }
    return out;
}

ExchangeMatrix mutate_matrix(const ExchangeMatrix& m, int k) {
    if (k < 1 || k > m.size()) throw std::out_of_range("mutation index out of range");
    ExchangeMatrix out;
    out.b = mutate_extended(m.b, k);
    out.d = m.d;
    return out;
}

Seed mutation_path(const Seed& s, const std::vector<int>& ks) {
    Seed out = s;
    for (int k : ks) out.matrix = mutate_matrix(out.matrix, k);
    return out;
}

namespace {

struct IsoSearch {
    const IntMatrix& a;
    const IntMatrix& b;
    int n;
    bool want_all;
    std::vector<int> order, pi;
    std::vector<bool> used;
    std::vector<std::vector<std::int64_t>> sig_a, sig_b;
    std::vector<std::vector<int>> found;

    static std::vector<std::int64_t> signature(const IntMatrix& m, int i) {
        std::vector<std::int64_t> s;
        for (std::size_t j = 0; j < m.size(); ++j) {
            s.push_back(m[i][j]);
        }
        std::sort(s.begin(), s.end());
        return s;
    }

    IsoSearch(const IntMatrix& x, const IntMatrix& y, bool all)
        : a(x), b(y), n(static_cast<int>(x.size())), want_all(all), pi(n, -1), used(n, false) {
        for (int i = 0; i < n; ++i) {
            sig_a.push_back(signature(a, i));
            sig_b.push_back(signature(b, i));
        }
        // connected growth: each vertex after the first is adjacent to an earlier one when possible
        std::vector<bool> placed(n, false);
        for (int step = 0; step < n; ++step) {
            int best = -1, best_links = -1;
            for (int i = 0; i < n; ++i) {
                if (placed[i]) continue;
                int links = 0;
                for (int j = 0; j < n; ++j)
                    if (placed[j] && a[i][j] != 0) ++links;
                if (links > best_links) {
                    best = i;
                    best_links = links;
                }
            }
            placed[best] = true;
            order.push_back(best);
        }
    }

    bool run(int depth) {
        if (depth == n) {
            found.push_back(pi);
            return !want_all;
        }
        const int i = order[depth];
        for (int j = 0; j < n; ++j) {
            if (used[j] || sig_a[i] != sig_b[j]) continue;
            bool ok = true;
            for (int e = 0; e < depth && ok; ++e) {
                const int u = order[e];
                ok = a[i][u] == b[j][pi[u]] && a[u][i] == b[pi[u]][j];
            }
            if (!ok) continue;
            pi[i] = j;
            used[j] = true;
            if (run(depth + 1)) return true;
            used[j] = false;
            pi[i] = -1;
        }
        return false;
    }
};

}  // namespace

std::vector<std::vector<int>> all_seed_isomorphisms(const Seed& s1, const Seed& s2) {
    if (s1.size() != s2.size()) return {};
    IsoSearch search(s1.matrix.b, s2.matrix.b, true);
    search.run(0);
    return search.found;
}

std::optional<std::vector<int>> seed_isomorphic(const Seed& s1, const Seed& s2) {
    if (s1.size() != s2.size()) return std::nullopt;
    IsoSearch search(s1.matrix.b, s2.matrix.b, false);
    search.run(0);
    if (search.found.empty()) return std::nullopt;
    return search.found.front();
}

// ---------------------------------------------------------------------------

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
    void unite(int x, int y) { parent[find(x)] = find(y); }
};

// Occurrences (triangle, position) of an arc.
std::vector<std::pair<int, int>> occurrences(const std::vector<TaggedTriangulation::Triangle>& ts, int arc) {
    std::vector<std::pair<int, int>> out;
    for (int t = 0; t < static_cast<int>(ts.size()); ++t)
        for (int k = 0; k < 3; ++k)
            if (ts[t].side[k] == arc) out.emplace_back(t, k);
    return out;
}

TaggedTriangulation::Triangle rotated(const TaggedTriangulation::Triangle& t, int k) {
    TaggedTriangulation::Triangle r;
    for (int i = 0; i < 3; ++i) {
        r.side[i] = t.side[(k + i) % 3];
        r.corner[i] = t.corner[(k + i) % 3];
    }
    return r;
}

// Position k with side[k] == side[k+1], or -1.
int repeated_position(const TaggedTriangulation::Triangle& t) {
    for (int k = 0; k < 3; ++k)
        if (t.side[k] >= 0 && t.side[k] == t.side[(k + 1) % 3]) return k;
    return -1;
}

}  // namespace

TaggedTriangulation TaggedTriangulation::from_sides(std::vector<std::string> arc_names,
                                                    const std::vector<std::array<int, 3>>& sides) {
    TaggedTriangulation t;
    t.names_ = std::move(arc_names);
    const int m = t.arc_count();
    const int f = static_cast<int>(sides.size());
    std::vector<std::vector<std::pair<int, int>>> occ(m);
    std::set<int> segments;
    for (int i = 0; i < f; ++i)
        for (int k = 0; k < 3; ++k) {
            const int s = sides[i][k];
            if (s >= m) throw std::invalid_argument("triangle side refers to an unknown arc");
            if (s < 0) {
                if (!segments.insert(s).second) throw std::invalid_argument("boundary segment used twice");
            } else {
                occ[s].emplace_back(i, k);
            }
        }
    for (int a = 0; a < m; ++a)
        if (occ[a].size() != 2) throw std::invalid_argument("arc " + t.names_[a] + " must border exactly two sides");

    UnionFind uf(3 * f);
    auto corner = [](int tri, int k) { return 3 * tri + (k % 3); };
    for (int a = 0; a < m; ++a) {
        const auto [t1, k1] = occ[a][0];
        const auto [t2, k2] = occ[a][1];
        uf.unite(corner(t1, k1), corner(t2, k2 + 1));
        uf.unite(corner(t1, k1 + 1), corner(t2, k2));
    }
    std::map<int, int> ids;
    std::vector<bool> on_boundary;
    t.triangles_.resize(f);
    for (int i = 0; i < f; ++i)
        for (int k = 0; k < 3; ++k) {
            const int root = uf.find(corner(i, k));
            auto [it, fresh] = ids.emplace(root, static_cast<int>(ids.size()));
            if (fresh) on_boundary.push_back(false);
            t.triangles_[i].side[k] = sides[i][k];
            t.triangles_[i].corner[k] = it->second;
        }
    for (const auto& tri : t.triangles_)
        for (int k = 0; k < 3; ++k)
            if (tri.side[k] < 0) {
                on_boundary[tri.corner[k]] = true;
                on_boundary[tri.corner[(k + 1) % 3]] = true;
            }
    t.is_puncture_.resize(on_boundary.size());
    for (std::size_t v = 0; v < on_boundary.size(); ++v) t.is_puncture_[v] = !on_boundary[v];
    return t;
}

int TaggedTriangulation::arc_index(const std::string& name) const {
    for (int i = 0; i < arc_count(); ++i)
        if (names_[i] == name) return i;
    throw std::invalid_argument("unknown arc " + name);
}

std::vector<int> TaggedTriangulation::punctures() const {
    std::vector<int> out;
    for (int v = 0; v < vertex_count(); ++v)
        if (is_puncture_[v]) out.push_back(v);
    return out;
}

int TaggedTriangulation::self_folded_triangle_of_radius(int arc) const {
    for (int t = 0; t < static_cast<int>(triangles_.size()); ++t) {
        const int k = repeated_position(triangles_[t]);
        if (k >= 0 && triangles_[t].side[k] == arc) return t;
    }
    return -1;
}

int TaggedTriangulation::self_folded_count() const {
    return static_cast<int>(self_folded_pairs().size());
}

std::vector<std::pair<int, int>> TaggedTriangulation::self_folded_pairs() const {
    std::vector<std::pair<int, int>> out;
    for (const auto& tri : triangles_) {
        const int k = repeated_position(tri);
        if (k >= 0) out.emplace_back(tri.side[k], tri.side[(k + 2) % 3]);
    }
    return out;
}

void TaggedTriangulation::swap_labels(int a, int b) {
    for (auto& tri : triangles_)
        for (auto& s : tri.side) {
            if (s == a) s = b;
            else if (s == b) s = a;
        }
}

void TaggedTriangulation::ideal_flip(int arc) {
    const auto occ = occurrences(triangles_, arc);
    if (occ.size() != 2 || occ[0].first == occ[1].first)
        throw std::logic_error("arc cannot be flipped in the ideal triangulation");
    const Triangle t1 = rotated(triangles_[occ[0].first], occ[0].second);
    const Triangle t2 = rotated(triangles_[occ[1].first], occ[1].second);
    // t1 = (arc, A, B) at corners (P, Q, R); t2 = (arc, C, D) at corners (Q, P, S)
    const int A = t1.side[1], B = t1.side[2], C = t2.side[1], D = t2.side[2];
    const int Q = t1.corner[1], R = t1.corner[2], P = t2.corner[1], S = t2.corner[2];
    triangles_[occ[0].first] = Triangle{{B, C, arc}, {R, P, S}};
    triangles_[occ[1].first] = Triangle{{D, A, arc}, {S, Q, R}};
}

void TaggedTriangulation::normalise() {
    for (const auto& tri : triangles_) {
        const int k = repeated_position(tri);
        if (k < 0) continue;
        const int p = tri.corner[(k + 1) % 3];
        if (notched_.erase(p)) {
            const int radius = tri.side[k], loop = tri.side[(k + 2) % 3];
            swap_labels(radius, loop);
        }
    }
}

TaggedTriangulation TaggedTriangulation::flip(int arc) const {
    if (arc < 0 || arc >= arc_count()) throw std::out_of_range("arc index out of range");
    TaggedTriangulation out = *this;
    const int t = self_folded_triangle_of_radius(arc);
    if (t >= 0) {
        const int k = repeated_position(triangles_[t]);
        const int loop = triangles_[t].side[(k + 2) % 3];
        const int p = triangles_[t].corner[(k + 1) % 3];
        out.swap_labels(arc, loop);
        out.notched_.insert(p);
    }
    out.ideal_flip(arc);
    out.normalise();
    return out;
}

TaggedTriangulation TaggedTriangulation::toggle_tags(const std::set<int>& punctures) const {
    TaggedTriangulation out = *this;
    for (int p : punctures) {
        if (p < 0 || p >= vertex_count() || !is_puncture_[p]) throw std::invalid_argument("not a puncture");
        if (!out.notched_.erase(p)) out.notched_.insert(p);
    }
    out.normalise();
    return out;
}

std::vector<TaggedTriangulation::TaggedArc> TaggedTriangulation::tagged_arcs() const {
    std::vector<TaggedArc> out(arc_count());
    std::vector<bool> done(arc_count(), false);
    for (const auto& tri : triangles_) {
        const int k = repeated_position(tri);
        if (k < 0) continue;
        const int radius = tri.side[k], loop = tri.side[(k + 2) % 3];
        const int p = tri.corner[(k + 1) % 3], v = tri.corner[k];
        out[radius] = {v, p, notched_.count(v) > 0, false};
        out[loop] = {v, p, notched_.count(v) > 0, true};
        done[radius] = done[loop] = true;
    }
    for (const auto& tri : triangles_)
        for (int k = 0; k < 3; ++k) {
            const int s = tri.side[k];
            if (s < 0 || done[s]) continue;
            const int a = tri.corner[k], b = tri.corner[(k + 1) % 3];
            out[s] = {a, b, notched_.count(a) > 0, notched_.count(b) > 0};
            done[s] = true;
        }
    for (auto& t : out)
        if (t.a > t.b) {
            std::swap(t.a, t.b);
            std::swap(t.notched_a, t.notched_b);
        }
    return out;
}

std::vector<int> TaggedTriangulation::canonical_key() const {
    std::vector<Triangle> ts;
    for (const auto& tri : triangles_) {
        Triangle best = tri;
        for (int k = 1; k < 3; ++k) best = std::min(best, rotated(tri, k));
        ts.push_back(best);
    }
    std::sort(ts.begin(), ts.end());
    std::vector<int> key;
    for (const auto& t : ts) {
        key.insert(key.end(), t.side.begin(), t.side.end());
        key.insert(key.end(), t.corner.begin(), t.corner.end());
    }
    key.push_back(-1000000);
    key.insert(key.end(), notched_.begin(), notched_.end());
    return key;
}

namespace {

std::string side_name(const std::vector<std::string>& names, int s) {
    return s >= 0 ? names[s] : "~" + std::to_string(-s);
}

}  // namespace

std::string TaggedTriangulation::to_json() const {
    using nlohmann::json;
    json j;
    j["arcs"] = names_;
    j["triangles"] = json::array();
    j["corners"] = json::array();
    for (const auto& tri : triangles_) {
        json sides = json::array(), corners = json::array();
        for (int k = 0; k < 3; ++k) {
            sides.push_back(side_name(names_, tri.side[k]));
            corners.push_back(tri.corner[k]);
        }
        j["triangles"].push_back(sides);
        j["corners"].push_back(corners);
    }
    j["punctures"] = punctures();
    j["selffolded"] = json::array();
    for (auto [radius, loop] : self_folded_pairs()) j["selffolded"].push_back({names_[radius], names_[loop]});
    j["notched"] = json::array();
    const auto arcs = tagged_arcs();
    for (int i = 0; i < arc_count(); ++i) {
        if (arcs[i].notched_a) j["notched"].push_back({names_[i], arcs[i].a});
        if (arcs[i].notched_b) j["notched"].push_back({names_[i], arcs[i].b});
    }
    return j.dump();
}

TaggedTriangulation TaggedTriangulation::from_json(const std::string& text) {
    using nlohmann::json;
    const json j = json::parse(text);
    std::vector<std::string> names = j.at("arcs").get<std::vector<std::string>>();
    std::map<std::string, int> index;
    for (int i = 0; i < static_cast<int>(names.size()); ++i) index[names[i]] = i;
    std::vector<std::array<int, 3>> sides;
    for (const auto& tri : j.at("triangles")) {
        if (tri.size() != 3) throw std::invalid_argument("triangle needs three sides");
        std::array<int, 3> s{};
        for (int k = 0; k < 3; ++k) {
            const std::string name = tri[k].get<std::string>();
            if (!name.empty() && name[0] == '~') s[k] = -std::stoi(name.substr(1));
            else if (index.count(name)) s[k] = index[name];
            else throw std::invalid_argument("unknown arc " + name);
        }
        sides.push_back(s);
    }
    TaggedTriangulation t = from_sides(std::move(names), sides);
    if (j.contains("corners")) {
        const auto& cs = j["corners"];
        if (cs.size() != t.triangles_.size()) throw std::invalid_argument("corner table has wrong size");
        // renumber the computed vertices to the stored ids
        std::map<int, int> rename;
        for (std::size_t i = 0; i < cs.size(); ++i)
            for (int k = 0; k < 3; ++k) {
                const int stored = cs[i][k].get<int>();
                auto [it, fresh] = rename.emplace(t.triangles_[i].corner[k], stored);
                if (!fresh && it->second != stored) throw std::invalid_argument("corner table disagrees with gluing");
            }
        int vmax = 0;
        for (auto [from, to] : rename) vmax = std::max(vmax, to + 1);
        std::vector<bool> punct(vmax, false);
        for (auto [from, to] : rename) punct[to] = t.is_puncture_[from];
        for (auto& tri : t.triangles_)
            for (auto& c : tri.corner) c = rename[c];
        t.is_puncture_ = punct;
    }
    std::set<std::pair<int, int>> intrinsic;
    for (const auto& tri : t.triangles_) {
        const int k = repeated_position(tri);
        if (k >= 0) intrinsic.emplace(tri.side[(k + 2) % 3], tri.corner[(k + 1) % 3]);
    }
    if (j.contains("notched"))
        for (const auto& e : j["notched"]) {
            const int arc = index.at(e.at(0).get<std::string>());
            const int end = e.at(1).get<int>();
            if (intrinsic.count({arc, end})) continue;
            if (end < 0 || end >= t.vertex_count() || !t.is_puncture_[end])
                throw std::invalid_argument("notched end is not a puncture");
            t.notched_.insert(end);
        }
    t.normalise();
    return t;
}

TaggedTriangulation flip(const TaggedTriangulation& t, int arc) { return t.flip(arc); }

ExchangeMatrix adjacency_matrix(const TaggedTriangulation& t) {
    const int m = t.arc_count();
    std::vector<int> pi(m);
    std::iota(pi.begin(), pi.end(), 0);
    for (auto [radius, loop] : t.self_folded_pairs()) pi[radius] = loop;
    IntMatrix base(m, std::vector<std::int64_t>(m, 0));
    for (const auto& tri : t.triangles()) {
        if (repeated_position(tri) >= 0) continue;
        for (int k = 0; k < 3; ++k) {
            const int x = tri.side[k], y = tri.side[(k + 1) % 3];
            if (x < 0 || y < 0) continue;
            base[x][y] += 1;
            base[y][x] -= 1;
        }
    }
    IntMatrix b(m, std::vector<std::int64_t>(m, 0));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) b[i][j] = base[pi[i]][pi[j]];
    return ExchangeMatrix(b);
}

Seed seed_of(const TaggedTriangulation& t) { return Seed{t.arc_names(), adjacency_matrix(t)}; }

std::vector<TaggedTriangulation> flip_orbit(const TaggedTriangulation& t, int depth) {
    std::set<std::vector<int>> seen{t.canonical_key()};
    std::vector<TaggedTriangulation> out{t};
    std::vector<TaggedTriangulation> frontier{t};
    for (int d = 0; d < depth; ++d) {
        std::vector<TaggedTriangulation> next;
        for (const auto& s : frontier)
            for (int a = 0; a < s.arc_count(); ++a) {
                TaggedTriangulation f = s.flip(a);
                if (seen.insert(f.canonical_key()).second) {
                    out.push_back(f);
                    next.push_back(std::move(f));
                }
            }
        frontier = std::move(next);
    }
    return out;
}

namespace stock {

TaggedTriangulation disk_fan(int m) {
    if (m < 4) throw std::invalid_argument("disk needs at least 4 marked points");
    std::vector<std::string> names;
    for (int k = 2; k <= m - 2; ++k) names.push_back("d" + std::to_string(k));
    auto diagonal = [&](int k) { return k - 2; };
    auto segment = [&](int i) { return -(i + 1); };  // from mark i to mark i+1
    std::vector<std::array<int, 3>> sides;
    for (int k = 1; k <= m - 2; ++k) {
        const int first = k == 1 ? segment(0) : diagonal(k);
        const int last = k + 1 == m - 1 ? segment(m - 1) : diagonal(k + 1);
        sides.push_back({first, segment(k), last});
    }
    return TaggedTriangulation::from_sides(names, sides);
}

TaggedTriangulation punctured_torus() {
    return TaggedTriangulation::from_sides({"a", "b", "c"}, {{0, 1, 2}, {0, 1, 2}});
}

TaggedTriangulation annulus(int p, int q, const std::string& steps) {
    if (p < 1 || q < 1) throw std::invalid_argument("annulus needs marks on both boundaries");
    if (static_cast<int>(std::count(steps.begin(), steps.end(), 'O')) != p ||
        static_cast<int>(std::count(steps.begin(), steps.end(), 'I')) != q ||
        static_cast<int>(steps.size()) != p + q)
        throw std::invalid_argument("lattice path must contain p letters O and q letters I");
    const int m = p + q;
    std::vector<std::string> names;
    for (int k = 0; k < m; ++k) names.push_back("a" + std::to_string(k));
    std::vector<std::array<int, 3>> sides;
    int outer = 0, inner = 0;
    for (int k = 0; k < m; ++k) {
        const int next = (k + 1) % m;
        if (steps[k] == 'O') sides.push_back({next, -(1 + outer++), k});
        else sides.push_back({k, -(1 + p + inner++), next});
    }
    return TaggedTriangulation::from_sides(names, sides);
}

TaggedTriangulation annulus(int p, int q) { return annulus(p, q, std::string(q, 'I') + std::string(p, 'O')); }

TaggedTriangulation punctured_digon_self_folded() {
    return TaggedTriangulation::from_sides({"l", "r"}, {{0, 1, 1}, {0, -1, -2}});
}

TaggedTriangulation sphere4_maximal() {
    // alpha_i is index i-1; every triangle lists its sides along the quiver arrows
    return TaggedTriangulation::from_sides({"alpha1", "alpha2", "alpha3", "alpha4", "alpha5", "alpha6"},
                                           {{0, 1, 2}, {0, 3, 4}, {1, 4, 5}, {2, 5, 3}});
}

TaggedTriangulation sphere4_three_self_folded() {
    // radii 3, 4, 1 inside loops 2, 5, 6; the loops bound the remaining triangle
    return TaggedTriangulation::from_sides({"1", "2", "3", "4", "5", "6"},
                                           {{1, 2, 2}, {4, 3, 3}, {5, 0, 0}, {1, 4, 5}});
}

}  // namespace stock

}  // namespace mcg
