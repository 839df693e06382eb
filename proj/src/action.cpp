#include "mcg/action.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

namespace mcg {

namespace {

std::int64_t pos(std::int64_t x) { return std::max<std::int64_t>(x, 0); }
std::int64_t neg(std::int64_t x) { return std::min<std::int64_t>(x, 0); }

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    std::int64_t d = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --d;
    return d;
}

}  // namespace

DiskCoordinates apply_braid_letter(const DiskCoordinates& c, int n, int i, int sign) {
    if (n < 3) throw std::invalid_argument("Dynnikov coordinates need n >= 3");
    if (i < 1 || i > n - 1) throw std::invalid_argument("braid generator index out of range");
    const int m = n - 2;
    if (static_cast<int>(c.size()) != 2 * m) throw std::invalid_argument("coordinate vector has wrong length");
    DiskCoordinates out = c;
    std::int64_t* a = out.data();
    std::int64_t* b = out.data() + m;

    if (i == 1) {
        const std::int64_t b0 = b[0];
        std::int64_t bn;
        if (sign > 0) {
            bn = -a[0] + pos(b0);
            a[0] = b0 - pos(bn);
        } else {
            bn = a[0] + pos(b0);
            a[0] = -b0 + pos(bn);
        }
        b[0] = bn;
    } else if (i == n - 1) {
        const std::int64_t b0 = b[m - 1];
        std::int64_t bn;
        if (sign > 0) {
            bn = -a[m - 1] + neg(b0);
            a[m - 1] = b0 - neg(bn);
        } else {
            bn = a[m - 1] + neg(b0);
            a[m - 1] = -b0 + neg(bn);
        }
        b[m - 1] = bn;
    } else {
        const int j = i - 1;
        const std::int64_t p = b[j - 1];
        const std::int64_t q = b[j];
        if (sign > 0) {
            const std::int64_t z = a[j - 1] - a[j] + pos(q) - neg(p);
            a[j - 1] += pos(p) + pos(pos(q) - z);
            b[j - 1] = q - pos(z);
            a[j] += neg(q) + neg(neg(p) + z);
            b[j] = p + pos(z);
        } else {
            const std::int64_t z = a[j - 1] - a[j] - pos(q) + neg(p);
            a[j - 1] -= pos(p) + pos(pos(q) + z);
            b[j - 1] = q + neg(z);
            a[j] -= neg(q) + neg(neg(p) - z);
            b[j] = p - neg(z);
        }
    }
    return out;
}

DiskCoordinates act_word(const Word& w, const DiskCoordinates& c, int n) {
    DiskCoordinates out = c;
    const auto& ls = w.letters();
    for (auto it = ls.rbegin(); it != ls.rend(); ++it)
        out = apply_braid_letter(out, n, letter_gen(*it) + 1, letter_sign(*it));
    return out;
}

std::vector<DiskCoordinates> random_coordinates(int n, int count, std::uint64_t seed, int range) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::int64_t> dist(-range, range);
    std::vector<DiskCoordinates> out(count, DiskCoordinates(std::max(0, 2 * n - 4)));
    for (auto& v : out)
        for (auto& x : v) x = dist(rng);
    return out;
}

bool same_action(const Word& u, const Word& v, const std::vector<DiskCoordinates>& samples, int n) {
    for (const auto& c : samples)
        if (act_word(u, c, n) != act_word(v, c, n)) return false;
    return true;
}

bool same_braid(const Word& u, const Word& v, int n, int count, std::uint64_t seed) {
    if (std::max(u.max_gen(), v.max_gen()) >= n - 1) throw std::invalid_argument("braid letter out of range");
    return same_action(u, v, random_coordinates(n + 1, count, seed), n + 1);
}

namespace {

AnnulusState normalised(int p, int q, std::vector<std::pair<std::int64_t, std::int64_t>> arcs) {
    for (auto& [x, y] : arcs) {
        const std::int64_t k = floor_div(x, p);
        x -= k * p;
        y -= k * q;
    }
    std::sort(arcs.begin(), arcs.end());
    AnnulusState s;
    s.p = p;
    s.q = q;
    s.arcs = std::move(arcs);
    return s;
}

}  // namespace

AnnulusState AnnulusState::lattice(int p, int q, const std::string& steps, std::int64_t y0) {
    if (p < 1 || q < 1) throw std::invalid_argument("annulus needs marks on both boundaries");
    if (static_cast<int>(std::count(steps.begin(), steps.end(), 'O')) != p ||
        static_cast<int>(std::count(steps.begin(), steps.end(), 'I')) != q ||
        static_cast<int>(steps.size()) != p + q)
        throw std::invalid_argument("lattice path must contain p letters O and q letters I");
    std::vector<std::pair<std::int64_t, std::int64_t>> arcs;
    std::int64_t x = 0, y = y0;
    for (char c : steps) {
        arcs.emplace_back(x, y);
        if (c == 'O') ++x;
        else ++y;
    }
    return normalised(p, q, std::move(arcs));
}

std::vector<AnnulusState> AnnulusState::all_lattice(int p, int q) {
    std::string steps = std::string(p, 'O') + std::string(q, 'I');
    std::sort(steps.begin(), steps.end());
    std::vector<AnnulusState> out;
    do {
        out.push_back(lattice(p, q, steps));
    } while (std::next_permutation(steps.begin(), steps.end()));
    return out;
}

AnnulusState annulus_generator(AnnulusMove kind, const AnnulusState& s, bool inverse) {
    auto arcs = s.arcs;
    const std::int64_t d = inverse ? -1 : 1;
    switch (kind) {
        case AnnulusMove::R1:
            for (auto& a : arcs) a.first += d;
            break;
        case AnnulusMove::R2:
            for (auto& a : arcs) a.second -= d;
            break;
        case AnnulusMove::Swap:
            if (s.p != s.q) throw std::invalid_argument("swap requires p = q");
            for (auto& [x, y] : arcs) {
                const std::int64_t nx = -y;
                y = -x;
                x = nx;
            }
            break;
    }
    return normalised(s.p, s.q, std::move(arcs));
}

std::vector<AnnulusState> annulus_orbit(int p, int q, int depth) {
    std::set<AnnulusState> seen;
    std::vector<AnnulusState> frontier;
    for (auto& s : AnnulusState::all_lattice(p, q))
        if (seen.insert(s).second) frontier.push_back(s);
    for (int d = 0; d < depth; ++d) {
        std::vector<AnnulusState> next;
        auto visit = [&](AnnulusState t) {
            if (seen.insert(t).second) next.push_back(std::move(t));
        };
        for (const auto& s : frontier) {
            for (bool inv : {false, true}) {
                visit(annulus_generator(AnnulusMove::R1, s, inv));
                visit(annulus_generator(AnnulusMove::R2, s, inv));
            }
            if (p == q) visit(annulus_generator(AnnulusMove::Swap, s));
        }
        frontier = std::move(next);
    }
    return {seen.begin(), seen.end()};
}

LabelledAnnulus LabelledAnnulus::lattice(int p, int q, const std::string& steps) {
    AnnulusState::lattice(p, q, steps);  // validates the step word
    LabelledAnnulus out;
    out.p = p;
    out.q = q;
    std::int64_t x = 0, y = 0;
    for (char c : steps) {
        out.arc.emplace_back(x, y);
        if (c == 'O') ++x;
        else ++y;
    }
    return out;
}

std::pair<std::int64_t, std::int64_t> LabelledAnnulus::normal(std::pair<std::int64_t, std::int64_t> a) const {
    const std::int64_t t = floor_div(a.first + a.second, p + q);
    return {a.first - t * p, a.second - t * q};
}

std::optional<LabelledAnnulus> LabelledAnnulus::flip(int k) const {
    const int m = p + q;
    if (k < 0 || k >= m) throw std::out_of_range("arc label out of range");
    std::vector<int> by_sum(m, -1);
    for (int i = 0; i < m; ++i) by_sum[arc[i].first + arc[i].second] = i;
    const auto cur = arc[k];
    const std::int64_t s = cur.first + cur.second;
    auto prev = arc[by_sum[(s + m - 1) % m]];
    auto next = arc[by_sum[(s + 1) % m]];
    if (s == 0) {
        prev.first -= p;
        prev.second -= q;
    }
    if (s == m - 1) {
        next.first += p;
        next.second += q;
    }
    if (next.first - prev.first != 1 || next.second - prev.second != 1) return std::nullopt;
    std::pair<std::int64_t, std::int64_t> other{prev.first + 1, prev.second};
    if (other == cur) other = {prev.first, prev.second + 1};
    LabelledAnnulus out = *this;
    out.arc[k] = normal(other);
    return out;
}

std::set<std::pair<std::int64_t, std::int64_t>> LabelledAnnulus::arc_set() const {
    return {arc.begin(), arc.end()};
}

std::pair<std::int64_t, std::int64_t> annulus_move(AnnulusMove kind, std::pair<std::int64_t, std::int64_t> a,
                                                   bool inverse) {
    const std::int64_t d = inverse ? -1 : 1;
    switch (kind) {
        case AnnulusMove::R1: return {a.first + d, a.second};
        case AnnulusMove::R2: return {a.first, a.second - d};
        case AnnulusMove::Swap: return {-a.second, -a.first};
    }
    return a;
}

// ---------------------------------------------------------------------------

namespace {

void push_flip(std::vector<int>& path, int k) {
    if (!path.empty() && path.back() == k) path.pop_back();
    else path.push_back(k);
}

std::vector<int> perm_inverse_of(const std::vector<int>& p) {
    std::vector<int> inv(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) inv[p[i]] = static_cast<int>(i);
    return inv;
}

}  // namespace

MappingClassRealization MappingClassRealization::identity(const TaggedTriangulation& base) {
    MappingClassRealization r;
    r.base = base;
    r.relabel.resize(base.arc_count());
    for (int i = 0; i < base.arc_count(); ++i) r.relabel[i] = i;
    return r;
}

TaggedTriangulation MappingClassRealization::image() const {
    TaggedTriangulation t = base;
    for (int k : path) t = t.flip(k);
    return t;
}

bool MappingClassRealization::is_automorphism() const {
    const IntMatrix b = adjacency_matrix(base).b;
    const IntMatrix c = adjacency_matrix(image()).b;
    const int m = base.arc_count();
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            if (c[relabel[i]][relabel[j]] != b[i][j]) return false;
    return true;
}

IntMatrix MappingClassRealization::signature() const {
    const int m = base.arc_count();
    IntMatrix ext = adjacency_matrix(base).b;
    for (int i = 0; i < m; ++i) {
        ext.emplace_back(m, 0);
        ext.back()[i] = 1;
    }
    for (int k : path) ext = mutate_extended(ext, k + 1);
    IntMatrix sig(m, std::vector<std::int64_t>(m));
    for (int r = 0; r < m; ++r)
        for (int i = 0; i < m; ++i) sig[r][i] = ext[m + r][relabel[i]];
    return sig;
}

std::vector<int> MappingClassRealization::puncture_map() const {
    const TaggedTriangulation img = image();
    std::vector<int> out(base.vertex_count(), -1);
    auto side_image = [&](int s) { return s >= 0 ? relabel[s] : -1; };
    for (const auto& tri : base.triangles()) {
        std::vector<std::array<int, 3>> candidates;
        for (const auto& other : img.triangles())
            for (int k = 0; k < 3; ++k) {
                bool match = true;
                for (int i = 0; i < 3 && match; ++i) {
                    const int want = side_image(tri.side[i]);
                    const int got = other.side[(k + i) % 3];
                    match = want >= 0 ? got == want : got < 0;
                }
                if (match) candidates.push_back({other.corner[k], other.corner[(k + 1) % 3], other.corner[(k + 2) % 3]});
            }
        for (int i = 0; i < 3; ++i) {
            const int v = tri.corner[i];
            if (!base.is_puncture(v)) continue;
            std::set<int> images;
            for (const auto& c : candidates) images.insert(c[i]);
            if (images.size() != 1) continue;
            const int w = *images.begin();
            if (out[v] >= 0 && out[v] != w) throw std::logic_error("relabelling is not a triangulation isomorphism");
            out[v] = w;
        }
    }
    const auto ps = base.punctures();
    for (int v : ps)
        if (out[v] < 0) {
            if (ps.size() != 1) throw std::logic_error("puncture image is not determined by the triangles");
            out[v] = v;
        }
    return out;
}

bool MappingClassRealization::operator==(const MappingClassRealization& o) const {
    return base == o.base && tagflips == o.tagflips && signature() == o.signature();
}

MappingClassRealization realize_compose(const MappingClassRealization& f, const MappingClassRealization& g) {
    if (!(f.base == g.base)) throw std::invalid_argument("realizations have different base triangulations");
    MappingClassRealization out;
    out.base = g.base;
    out.path = g.path;
    for (int k : f.path) push_flip(out.path, g.relabel[k]);
    out.relabel.resize(f.relabel.size());
    for (std::size_t i = 0; i < f.relabel.size(); ++i) out.relabel[i] = g.relabel[f.relabel[i]];
    out.tagflips = g.tagflips;
    if (!f.tagflips.empty()) {
        const auto gm = g.puncture_map();
        for (int v : f.tagflips)
            if (!out.tagflips.erase(gm[v])) out.tagflips.insert(gm[v]);
    }
    return out;
}

MappingClassRealization realize_inverse(const MappingClassRealization& f) {
    MappingClassRealization out;
    out.base = f.base;
    out.relabel = perm_inverse_of(f.relabel);
    for (auto it = f.path.rbegin(); it != f.path.rend(); ++it) push_flip(out.path, out.relabel[*it]);
    if (!f.tagflips.empty()) {
        const auto fm = f.puncture_map();
        for (int v = 0; v < static_cast<int>(fm.size()); ++v)
            if (fm[v] >= 0 && f.tagflips.count(fm[v])) out.tagflips.insert(v);
    }
    return out;
}

MappingClassRealization realize_power(const MappingClassRealization& f, int k) {
    const MappingClassRealization step = k < 0 ? realize_inverse(f) : f;
    MappingClassRealization out = MappingClassRealization::identity(f.base);
    for (int i = 0; i < std::abs(k); ++i) out = realize_compose(out, step);
    return out;
}

bool infinite_order_witness(const MappingClassRealization& t, int K) {
    if (K < 1) throw std::invalid_argument("K must be positive");
    const auto id = MappingClassRealization::identity(t.base);
    MappingClassRealization power = t;
    for (int k = 1; k <= K; ++k) {
        if (power == id) return false;
        power = realize_compose(power, t);
    }
    return true;
}

MappingClassRealization annulus_realization(AnnulusMove kind, int p, int q, const std::string& steps) {
    if (kind == AnnulusMove::Swap && p != q) throw std::invalid_argument("swap requires p = q");
    const LabelledAnnulus start = LabelledAnnulus::lattice(p, q, steps);
    std::set<std::pair<std::int64_t, std::int64_t>> target;
    for (const auto& a : start.arc) target.insert(start.normal(annulus_move(kind, a)));

    struct Node {
        LabelledAnnulus state;
        int parent;
        int flipped;
    };
    std::vector<Node> nodes{{start, -1, -1}};
    std::set<std::set<std::pair<std::int64_t, std::int64_t>>> seen{start.arc_set()};
    std::size_t head = 0;
    int found = start.arc_set() == target ? 0 : -1;
    constexpr std::size_t limit = 1000000;
    while (found < 0 && head < nodes.size()) {
        if (nodes.size() > limit) throw std::runtime_error("annulus search exceeded its state limit");
        const int cur = static_cast<int>(head++);
        for (int k = 0; k < p + q && found < 0; ++k) {
            auto next = nodes[cur].state.flip(k);
            if (!next || !seen.insert(next->arc_set()).second) continue;
            nodes.push_back({*next, cur, k});
            if (next->arc_set() == target) found = static_cast<int>(nodes.size()) - 1;
        }
    }
    if (found < 0) throw std::runtime_error("annulus search failed");

    MappingClassRealization r;
    r.base = stock::annulus(p, q, steps);
    for (int n = found; nodes[n].parent >= 0; n = nodes[n].parent) r.path.push_back(nodes[n].flipped);
    std::reverse(r.path.begin(), r.path.end());
    const auto& final_state = nodes[found].state;
    for (const auto& a : start.arc) {
        const auto img = start.normal(annulus_move(kind, a));
        const auto it = std::find(final_state.arc.begin(), final_state.arc.end(), img);
        r.relabel.push_back(static_cast<int>(it - final_state.arc.begin()));
    }
    return r;
}

MappingClassRealization annulus_realization(AnnulusMove kind, int p, int q) {
    return annulus_realization(kind, p, q, std::string(q, 'I') + std::string(p, 'O'));
}

}  // namespace mcg
