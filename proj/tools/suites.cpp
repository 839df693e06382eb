#include "suites.hpp"

#include <algorithm>
#include <functional>
#include <future>
#include <numeric>
#include <set>
#include <random>
#include <stdexcept>

#include <json.hpp>

#include "mcg/action.hpp"
#include "mcg/autgroup.hpp"
#include "mcg/fourpunct.hpp"
#include "mcg/presentations.hpp"

namespace mcg::cli {

namespace {

using Job = std::function<ReportLine()>;

// Runs the jobs on worker threads and returns their lines in job order.
std::vector<ReportLine> fan_out(const std::vector<Job>& jobs) {
    std::vector<std::future<ReportLine>> futures;
    futures.reserve(jobs.size());
    for (const auto& job : jobs) futures.push_back(std::async(std::launch::async, job));
    std::vector<ReportLine> out;
    for (auto& f : futures) out.push_back(f.get());
    return out;
}

int or_default(int value, int fallback) { return value > 0 ? value : fallback; }

std::string surface_text(const MarkedSurface& s) {
    std::string b;
    for (int m : s.boundary()) b += (b.empty() ? "" : ",") + std::to_string(m);
    return "g=" + std::to_string(s.genus()) + " b=[" + b + "] n=" + std::to_string(s.punctures());
}

std::vector<ReportLine> braid_suite(const SuiteOptions& opt) {
    const int max_n = or_default(opt.max_n, 7), samples = or_default(opt.samples, 100);
    std::vector<Job> jobs;
    for (int n = 3; n <= max_n; ++n)
        jobs.push_back([=] {
            const Presentation p = braid_presentation(n);
            for (const auto& r : p.relators)
                if (!same_braid(r, Word(), n, samples, opt.rng_seed))
                    return ReportLine{false, "braid", "n=" + std::to_string(n) + " relator=" + p.word_text(r)};
            return ReportLine{true, "braid", "n=" + std::to_string(n) + " relators=" + std::to_string(p.relators.size()) +
                                                 " samples=" + std::to_string(samples)};
        });
    return fan_out(jobs);
}

std::vector<ReportLine> purebraid_suite(const SuiteOptions& opt) {
    const int max_n = or_default(opt.max_n, 6), samples = or_default(opt.samples, 100);
    std::vector<Job> jobs;
    for (int n = 3; n <= max_n; ++n)
        jobs.push_back([=] {
            const Presentation p = pure_braid_presentation(n);
            std::vector<Word> images(p.num_gens());
            for (int i = 1; i <= n; ++i)
                for (int j = i + 1; j <= n; ++j) images[p.index_of(aij_name(i, j))] = aij_in_braid(i, j, n);
            for (const auto& r : p.relators)
                if (!same_braid(substitute(r, images), Word(), n, samples, opt.rng_seed))
                    return ReportLine{false, "purebraid", "n=" + std::to_string(n) + " relator=" + p.word_text(r)};
            return ReportLine{true, "purebraid",
                              "n=" + std::to_string(n) + " relators=" + std::to_string(p.relators.size())};
        });
    jobs.push_back([=] {
        const Word c = Word({1, 2}).pow(3);
        const Word a = aij_in_braid(1, 2, 3) * aij_in_braid(1, 3, 3) * aij_in_braid(2, 3, 3);
        return ReportLine{same_braid(c, a, 3, samples, opt.rng_seed), "purebraid", "lantern (s1 s2)^3 = a12 a13 a23"};
    });
    return fan_out(jobs);
}

std::vector<ReportLine> sphere_suite(const SuiteOptions& opt) {
    const int max_n = or_default(opt.max_n, 8);
    std::vector<Job> jobs;
    for (int n = 4; n <= max_n; ++n)
        jobs.push_back([=] {
            const Presentation p = sphere_mcg_presentation(n);
            std::vector<Perm> imgs;
            for (int i = 0; i + 1 < n; ++i) imgs.push_back(transposition(n, i, i + 1));
            const HomCheck h = verify_homomorphism(p, imgs, n);
            const std::string tag = "n=" + std::to_string(n);
            if (!h.ok) return ReportLine{false, "sphere", tag + " theta relator=" + p.word_text(p.relators[h.failing_relator])};
            const auto ab = abelianization(p);
            const std::vector<std::int64_t> want{std::gcd(n * (n - 1), 2 * (n - 1))};
            std::string abt;
            for (auto x : ab) abt += (abt.empty() ? "" : ",") + std::to_string(x);
            return ReportLine{ab == want, "sphere", tag + " abelianization=[" + abt + "] expected=[" +
                                                       std::to_string(want[0]) + "]"};
        });
    return fan_out(jobs);
}

std::vector<ReportLine> genus0_suite(const SuiteOptions& opt) {
    const int max_n = or_default(opt.max_n, 4);
    const std::vector<std::vector<int>> boundaries{{1}, {2}, {1, 1}, {2, 2}, {1, 2}, {3}};
    std::vector<Job> jobs;
    for (int n = 0; n <= max_n; ++n)
        for (const auto& b : boundaries) {
            const MarkedSurface s(0, b, n);
            const auto k = classify(s).kind;
            if (k == SurfaceKind::Excluded || k == SurfaceKind::UnpuncturedAnnulus) continue;
            jobs.push_back([s] {
                const Presentation p = mcg_presentation_genus0(s);
                const int N = s.quotient_points();
                const HomCheck h = verify_homomorphism(p, theta_images(p, N), N);
                if (!h.ok) return ReportLine{false, "genus0", surface_text(s) + " theta relator=" + h.image};
                const auto deg = boundary_degree_images(p, s);
                const int rank = deg.empty() ? 0 : static_cast<int>(deg[0].size());
                const HomCheck d = verify_homomorphism(p, deg, rank);
                if (!d.ok) return ReportLine{false, "genus0", surface_text(s) + " T-degree relator=" + d.image};
                return ReportLine{true, "genus0", surface_text(s) + " relators=" + std::to_string(p.relators.size())};
            });
        }
    return fan_out(jobs);
}

std::vector<ReportLine> genus1_suite(const SuiteOptions& opt) {
    const int max_n = or_default(opt.max_n, 3);
    const std::vector<std::vector<int>> boundaries{{},     {1},    {2},    {3},    {1, 1},
                                                   {1, 2}, {1, 3}, {2, 2}, {2, 3}, {3, 3}};
    std::vector<Job> jobs;
    for (int g = 1; g <= 3; ++g)
        for (int n = 0; n <= max_n; ++n)
            for (const auto& b : boundaries) {
                const MarkedSurface s(g, b, n);
                if (classify(s).kind == SurfaceKind::Excluded) continue;
                jobs.push_back([s] {
                    Presentation p;
                    try {
                        p = mcg_presentation_genus_ge1(s);
                    } catch (const std::exception& e) {
                        return ReportLine{false, "genus1-emit", surface_text(s) + " error=" + e.what()};
                    }
                    for (const auto& r : p.relators)
                        for (Letter l : r.letters())
                            if (l == 0 || letter_gen(l) >= p.num_gens())
                                return ReportLine{false, "genus1-emit", surface_text(s) + " undeclared generator"};
                    const int N = s.quotient_points();
                    const HomCheck h = verify_homomorphism(p, theta_images(p, N), N);
                    if (!h.ok) return ReportLine{false, "genus1-emit", surface_text(s) + " theta relator=" + h.image};
                    return ReportLine{true, "genus1-emit", surface_text(s) + " generators=" +
                                                               std::to_string(p.num_gens()) +
                                                               " relators=" + std::to_string(p.relators.size())};
                });
            }
    return fan_out(jobs);
}

std::vector<ReportLine> annulus_suite(const SuiteOptions& opt) {
    const int depth = or_default(opt.max_n, 8);
    std::vector<Job> jobs;
    for (auto [p, q] : std::vector<std::pair<int, int>>{{1, 1}, {1, 2}, {2, 2}, {2, 3}})
        jobs.push_back([=] {
            const std::string tag = "p=" + std::to_string(p) + " q=" + std::to_string(q);
            const auto states = annulus_orbit(p, q, depth);
            for (const auto& s : states) {
                auto a = s, b = s;
                for (int k = 0; k < p; ++k) a = annulus_generator(AnnulusMove::R1, a);
                for (int k = 0; k < q; ++k) b = annulus_generator(AnnulusMove::R2, b);
                if (a != b) return ReportLine{false, "annulus", tag + " r1^p != r2^q"};
                if (annulus_generator(AnnulusMove::R1, annulus_generator(AnnulusMove::R2, s)) !=
                    annulus_generator(AnnulusMove::R2, annulus_generator(AnnulusMove::R1, s)))
                    return ReportLine{false, "annulus", tag + " r1 r2 != r2 r1"};
                if (p == q) {
                    const auto conj = annulus_generator(
                        AnnulusMove::Swap, annulus_generator(AnnulusMove::R1, annulus_generator(AnnulusMove::Swap, s)));
                    if (conj != annulus_generator(AnnulusMove::R2, s))
                        return ReportLine{false, "annulus", tag + " swap r1 swap != r2"};
                }
            }
            return ReportLine{true, "annulus", tag + " depth=" + std::to_string(depth) +
                                                   " states=" + std::to_string(states.size())};
        });
    for (int m = 1; m <= 4; ++m)
        jobs.push_back([=] {
            auto s = AnnulusState::all_lattice(1, m)[0];
            std::set<AnnulusState> powers{s};
            for (int k = 1; k <= 20; ++k) {
                s = annulus_generator(AnnulusMove::R2, s);
                powers.insert(s);
            }
            return ReportLine{powers.size() == 21, "annulus",
                              "twist 1/" + std::to_string(m) + " distinct-powers=" + std::to_string(powers.size() - 1)};
        });
    return fan_out(jobs);
}

std::vector<ReportLine> fourpunct_suite() {
    std::vector<ReportLine> out;
    for (const auto& line : fourpunct_report()) {
        const bool pass = line.rfind("PASS", 0) == 0;
        const std::string prefix = (pass ? "PASS" : "FAIL") + std::string(" fourpunct ");
        out.push_back({pass, "fourpunct", line.substr(prefix.size())});
    }
    const auto ctx = TaggedGroupContext::for_surface(MarkedSurface(0, {}, 4));
    const FourPunctSphereElement id, sigma{{}, 1, 0}, mu{{}, 0, 1};
    const FourPunctSphereElement base{{ctx.presentation.g("s1") * ctx.presentation.g("s3", -1), 1, {0, 2}}, 0, 0};
    bool ok = true;
    for (const auto& x : {sigma, mu}) {
        ok = ok && multiply_fourpunct(ctx, x, x) == id;
        ok = ok && multiply_fourpunct(ctx, x, base) == multiply_fourpunct(ctx, base, x);
    }
    out.push_back({ok, "fourpunct", "sigma and mu bits are central involutions"});
    return out;
}

TaggedMCGElement random_element(std::mt19937_64& rng, const TaggedGroupContext& ctx) {
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

std::vector<ReportLine> autgroup_suite(const SuiteOptions& opt) {
    const int max_n = or_default(opt.max_n, 4), samples = or_default(opt.samples, 1000);
    std::vector<MarkedSurface> surfaces;
    const std::vector<std::vector<int>> boundaries{{1}, {2}, {1, 1}, {2, 2}, {1, 2}, {3}};
    for (int n = 0; n <= max_n; ++n)
        for (const auto& b : boundaries) {
            const MarkedSurface s(0, b, n);
            const auto k = classify(s).kind;
            if (k != SurfaceKind::Excluded && k != SurfaceKind::UnpuncturedAnnulus) surfaces.push_back(s);
        }
    surfaces.emplace_back(0, std::vector<int>{}, 4);
    surfaces.emplace_back(1, std::vector<int>{}, 1);

    std::vector<Job> jobs;
    for (std::size_t idx = 0; idx < surfaces.size(); ++idx)
        jobs.push_back([s = surfaces[idx], seed = opt.rng_seed + idx, samples] {
            const auto ctx = TaggedGroupContext::for_surface(s);
            std::mt19937_64 rng(seed);
            const TaggedMCGElement id;
            for (int trial = 0; trial < samples; ++trial) {
                const auto a = random_element(rng, ctx), b = random_element(rng, ctx), c = random_element(rng, ctx);
                const bool ok = multiply(ctx, multiply(ctx, a, b), c) == multiply(ctx, a, multiply(ctx, b, c)) &&
                                multiply(ctx, a, inverse(ctx, a)) == id && multiply(ctx, inverse(ctx, a), a) == id &&
                                multiply(ctx, id, a) == a && multiply(ctx, a, id) == a;
                if (!ok)
                    return ReportLine{false, "autgroup", surface_text(s) + " a=" + element_to_json(ctx, a) +
                                                             " b=" + element_to_json(ctx, b) +
                                                             " c=" + element_to_json(ctx, c)};
            }
            return ReportLine{true, "autgroup", surface_text(s) + " triples=" + std::to_string(samples)};
        });
    auto out = fan_out(jobs);

    const auto ctx = TaggedGroupContext::for_surface(MarkedSurface(0, {}, 4));
    const TaggedMCGElement a{Word(), 0, {0}}, b{ctx.presentation.g("s1"), 0, {}}, c{ctx.presentation.g("s2"), 0, {}};
    const auto lit = RConvention::Literal;
    const bool literal_fails =
        multiply(ctx, multiply(ctx, a, b, lit), c, lit) != multiply(ctx, a, multiply(ctx, b, c, lit), lit);
    out.push_back({literal_fails, "autgroup", "literal h2(R1) convention is not associative on the stored triple"});

    const auto di = enumerate_di4xsigma3();
    out.push_back({di.size() == 48, "autgroup", "|Di4 x Sigma3|=" + std::to_string(di.size())});

    std::mt19937_64 rng(opt.rng_seed);
    auto random_z = [&] {
        ZxS4semiZ2 x;
        x.k = static_cast<std::int64_t>(rng() % 21) - 10;
        std::shuffle(x.s.begin(), x.s.end(), rng);
        x.t = static_cast<int>(rng() % 2);
        return x;
    };
    bool ok = true;
    const auto zid = ZxS4semiZ2::identity();
    for (int trial = 0; trial < samples && ok; ++trial) {
        const auto x = random_z(), y = random_z(), z = random_z();
        ok = (x * y) * z == x * (y * z) && x * x.inverse() == zid && x.inverse() * x == zid && x * zid == x &&
             zid * x == x;
    }
    out.push_back({ok, "autgroup", "Z x S4 x| Z2 axioms triples=" + std::to_string(samples)});
    return out;
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"braid",       "purebraid", "sphere",    "genus0",
                                                "genus1-emit", "annulus",   "fourpunct", "autgroup"};
    return names;
}

std::vector<ReportLine> run_suite(const std::string& name, const SuiteOptions& opt) {
    if (name == "braid") return braid_suite(opt);
    if (name == "purebraid") return purebraid_suite(opt);
    if (name == "sphere") return sphere_suite(opt);
    if (name == "genus0") return genus0_suite(opt);
    if (name == "genus1-emit") return genus1_suite(opt);
    if (name == "annulus") return annulus_suite(opt);
    if (name == "fourpunct") return fourpunct_suite();
    if (name == "autgroup") return autgroup_suite(opt);
    throw std::invalid_argument("unknown suite " + name);
}

std::string format_line(const ReportLine& l) { return (l.pass ? "PASS " : "FAIL ") + l.suite + " " + l.detail; }

std::string report_json(const std::vector<ReportLine>& lines) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& l : lines) j.push_back({{"pass", l.pass}, {"suite", l.suite}, {"detail", l.detail}});
    return j.dump(2);
}

}  // namespace mcg::cli
