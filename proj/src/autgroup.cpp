#include "mcg/autgroup.hpp"

#include <algorithm>
#include <stdexcept>

#include <json.hpp>

#include "mcg/presentations.hpp"

namespace mcg {

namespace {

Presentation mcg_presentation_for(const MarkedSurface& s) {
    const SurfaceClass c = classify(s);
    switch (c.kind) {
        case SurfaceKind::Excluded: throw std::invalid_argument("surface is excluded");
        case SurfaceKind::UnpuncturedAnnulus: return annulus_presentation(c.p, c.q);
        default: break;
    }
    if (s.genus() >= 1) return mcg_presentation_genus_ge1(s);
    if (s.boundary_count() == 0) return sphere_mcg_presentation(s.punctures());
    return mcg_presentation_genus0(s);
}

void check_perm(const Perm& p, int degree, const char* what) {
    if (static_cast<int>(p.size()) != degree) throw std::invalid_argument(std::string(what) + " has wrong degree");
    std::vector<bool> seen(degree, false);
    for (int x : p) {
        if (x < 0 || x >= degree || seen[x]) throw std::invalid_argument(std::string(what) + " is not a permutation");
        seen[x] = true;
    }
}

}  // namespace

TaggedGroupContext TaggedGroupContext::for_surface(const MarkedSurface& s) {
    TaggedGroupContext ctx;
    ctx.surface = s;
    ctx.presentation = mcg_presentation_for(s);
    ctx.degree = s.quotient_points();
    ctx.punctures = s.punctures();
    if (classify(s).kind == SurfaceKind::UnpuncturedAnnulus)
        ctx.theta.assign(ctx.presentation.num_gens(), perm_identity(ctx.degree));
    else
        ctx.theta = theta_images(ctx.presentation, ctx.degree);
    return ctx;
}

Perm TaggedGroupContext::puncture_perm(const Word& w) const {
    const Perm full = eval_perm(w, theta);
    Perm out(full.begin(), full.begin() + punctures);
    for (int x : out)
        if (x >= punctures) throw std::logic_error("word moves a puncture onto a boundary");
    return out;
}

Word epsilon_twist(const Word& w) {
    std::vector<Letter> ls = w.letters();
    for (auto& l : ls) l = -l;
    return Word(ls);
}

std::set<int> apply_perm(const Perm& p, const std::set<int>& s) {
    std::set<int> out;
    for (int x : s) out.insert(p.at(x));
    return out;
}

std::set<int> symmetric_difference(const std::set<int>& a, const std::set<int>& b) {
    std::set<int> out;
    std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.begin()));
    return out;
}

TaggedMCGElement multiply(const TaggedGroupContext& ctx, const TaggedMCGElement& a, const TaggedMCGElement& b,
                          RConvention conv) {
    TaggedMCGElement out;
    out.h = a.h * (a.eps ? epsilon_twist(b.h) : b.h);
    out.eps = (a.eps + b.eps) % 2;
    const Perm p2 = ctx.puncture_perm(b.h);
    const Perm moved = conv == RConvention::InverseImage ? perm_inverse(p2) : p2;
    out.R = symmetric_difference(apply_perm(moved, a.R), b.R);
    return out;
}

TaggedMCGElement inverse(const TaggedGroupContext& ctx, const TaggedMCGElement& a) {
    TaggedMCGElement out;
    out.h = a.eps ? epsilon_twist(a.h.inverse()) : a.h.inverse();
    out.eps = a.eps;
    out.R = apply_perm(ctx.puncture_perm(a.h), a.R);
    return out;
}

std::string element_to_json(const TaggedGroupContext& ctx, const TaggedMCGElement& a) {
    nlohmann::json j;
    j["h"] = nlohmann::json::array();
    for (Letter l : a.h.letters()) {
        const std::string name = ctx.presentation.generators[letter_gen(l)];
        j["h"].push_back(letter_sign(l) > 0 ? name : name + "'");
    }
    j["eps"] = a.eps;
    j["R"] = std::vector<int>(a.R.begin(), a.R.end());
    return j.dump();
}

TaggedMCGElement element_from_json(const TaggedGroupContext& ctx, const std::string& text) {
    const auto j = nlohmann::json::parse(text);
    TaggedMCGElement a;
    std::vector<Letter> ls;
    for (const auto& x : j.at("h")) {
        std::string name = x.get<std::string>();
        int sign = 1;
        if (!name.empty() && name.back() == '\'') {
            name.pop_back();
            sign = -1;
        }
        ls.push_back(make_letter(ctx.presentation.index_of(name), sign));
    }
    a.h = Word(ls);
    a.eps = j.at("eps").get<int>();
    if (a.eps != 0 && a.eps != 1) throw std::invalid_argument("eps must be 0 or 1");
    for (int r : j.at("R").get<std::vector<int>>()) {
        if (r < 0 || r >= ctx.punctures) throw std::invalid_argument("R holds a non-puncture");
        a.R.insert(r);
    }
    return a;
}

FourPunctSphereElement multiply_fourpunct(const TaggedGroupContext& ctx, const FourPunctSphereElement& a,
                                          const FourPunctSphereElement& b) {
    return {multiply(ctx, a.base, b.base), a.sigma_bit ^ b.sigma_bit, a.mu_bit ^ b.mu_bit};
}

void Di4xSigma3::validate() const {
    check_perm(square, 4, "square symmetry");
    check_perm(sigma, 3, "Sigma3 element");
    for (int i = 0; i < 4; ++i) {
        const int d = (square[(i + 1) % 4] - square[i] + 4) % 4;
        if (d != 1 && d != 3) throw std::invalid_argument("square symmetry breaks the 4-cycle");
    }
}

Di4xSigma3 Di4xSigma3::operator*(const Di4xSigma3& o) const {
    return {perm_compose(square, o.square), perm_compose(sigma, o.sigma)};
}

Di4xSigma3 Di4xSigma3::inverse() const { return {perm_inverse(square), perm_inverse(sigma)}; }

std::vector<Di4xSigma3> Di4xSigma3::generators() {
    return {{Perm{1, 2, 3, 0}, perm_identity(3)},
            {Perm{0, 3, 2, 1}, perm_identity(3)},
            {perm_identity(4), Perm{1, 0, 2}},
            {perm_identity(4), Perm{0, 2, 1}}};
}

std::vector<Di4xSigma3> enumerate_di4xsigma3() {
    std::set<Di4xSigma3> seen{Di4xSigma3::identity()};
    std::vector<Di4xSigma3> frontier{Di4xSigma3::identity()};
    const auto gens = Di4xSigma3::generators();
    while (!frontier.empty()) {
        std::vector<Di4xSigma3> next;
        for (const auto& x : frontier)
            for (const auto& g : gens) {
                const Di4xSigma3 y = x * g;
                if (seen.insert(y).second) next.push_back(y);
            }
        frontier = std::move(next);
    }
    return {seen.begin(), seen.end()};
}

namespace {

const Perm& swap01() {
    static const Perm c{1, 0, 2, 3};
    return c;
}

Perm twist_s4(const Perm& s, int t) { return t ? perm_compose(swap01(), perm_compose(s, swap01())) : s; }

}  // namespace

void ZxS4semiZ2::validate() const {
    check_perm(s, 4, "S4 element");
    if (t != 0 && t != 1) throw std::invalid_argument("Z2 component must be 0 or 1");
}

ZxS4semiZ2 ZxS4semiZ2::operator*(const ZxS4semiZ2& o) const {
    return {k + (t ? -o.k : o.k), perm_compose(s, twist_s4(o.s, t)), (t + o.t) % 2};
}

ZxS4semiZ2 ZxS4semiZ2::inverse() const {
    const std::int64_t kk = t ? k : -k;
    return {kk, twist_s4(perm_inverse(s), t), t};
}

namespace {

std::string subscript(int n) {
    static const char* digits[] = {"₀", "₁", "₂", "₃", "₄", "₅", "₆", "₇", "₈", "₉"};
    std::string out;
    for (char c : std::to_string(n)) out += digits[c - '0'];
    return out;
}

}  // namespace

AutGroupDescriptor aut_group_descriptor(const MarkedSurface& s) {
    const SurfaceClass c = classify(s);
    AutGroupDescriptor d;
    d.kind = c.kind;
    switch (c.kind) {
        case SurfaceKind::Excluded: throw std::invalid_argument("surface is excluded");
        case SurfaceKind::OncePuncturedClosed:
            d.row = "once-punctured closed surface";
            d.shape = "MCG ⋊ Z₂";
            break;
        case SurfaceKind::FourPuncturedSphere:
            d.row = "(1) the 4-punctured sphere";
            d.shape = "(MCG⋊Z₂)⋉Z₂^{𝒫₄}×Z₂²";
            break;
        case SurfaceKind::OncePunctured4gon:
            d.row = "(2) the once-punctured 4-gon";
            d.shape = "Di₄ × Σ₃";
            break;
        case SurfaceKind::TwicePuncturedDigon:
            d.row = "(3) the twice-punctured digon";
            d.shape = "Z × S₄ ⋊ Z₂";
            break;
        case SurfaceKind::UnpuncturedAnnulus: {
            d.row = "(4) S_{0,2} with empty puncture set";
            const std::string h = "H_{" + std::to_string(c.p) + "," + std::to_string(c.q) + "}";
            d.shape = c.p == c.q ? h + " ⋊ Z₂" : h;
            break;
        }
        case SurfaceKind::FeasibleGenus0:
        case SurfaceKind::FeasibleGenusGe1:
            d.row = "not a once-punctured closed surface";
            d.shape = "(MCG⋊Z₂)⋉Z₂^{𝒫" + subscript(s.punctures()) + "}";
            break;
    }
    d.mcg = mcg_presentation_for(s);
    return d;
}

std::string descriptor_to_json(const AutGroupDescriptor& d) {
    nlohmann::json j;
    j["kind"] = to_string(d.kind);
    j["row"] = d.row;
    j["shape"] = d.shape;
    if (d.mcg) j["mcg"] = nlohmann::json::parse(d.mcg->to_json());
    return j.dump();
}

}  // namespace mcg
