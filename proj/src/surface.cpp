#include "mcg/surface.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include <json.hpp>

namespace mcg {

std::string to_string(SurfaceKind k) {
    switch (k) {
        case SurfaceKind::Excluded: return "Excluded";
        case SurfaceKind::OncePuncturedClosed: return "OncePuncturedClosed";
        case SurfaceKind::FourPuncturedSphere: return "FourPuncturedSphere";
        case SurfaceKind::OncePunctured4gon: return "OncePunctured4gon";
        case SurfaceKind::TwicePuncturedDigon: return "TwicePuncturedDigon";
        case SurfaceKind::UnpuncturedAnnulus: return "UnpuncturedAnnulus";
        case SurfaceKind::FeasibleGenus0: return "FeasibleGenus0";
        case SurfaceKind::FeasibleGenusGe1: return "FeasibleGenusGe1";
    }
    return "?";
}

MarkedSurface::MarkedSurface(int genus, std::vector<int> boundary, int punctures)
    : genus_(genus), boundary_(std::move(boundary)), punctures_(punctures) {
    if (genus_ < 0 || punctures_ < 0)
        throw std::invalid_argument("negative genus or puncture count");
    for (int k : boundary_)
        if (k < 1) throw std::invalid_argument("boundary component without marked points");
    std::sort(boundary_.begin(), boundary_.end());
}

int MarkedSurface::boundary_marks() const {
    return std::accumulate(boundary_.begin(), boundary_.end(), 0);
}

SurfaceClass classify(const MarkedSurface& s) {
    const int g = s.genus(), r = s.boundary_count(), n = s.punctures();
    const auto& b = s.boundary();
    SurfaceClass out;
    if (g == 0 && r == 0 && n <= 3) return out;
    if (g == 0 && r == 1 && n == 0 && b[0] <= 3) return out;
    if (g == 0 && r == 1 && n == 1 && b[0] == 1) return out;
    if (g >= 1 && r == 0 && n == 0) return out;

    if (r == 0 && n == 1) {
        out.kind = SurfaceKind::OncePuncturedClosed;
    } else if (g == 0 && r == 0 && n == 4) {
        out.kind = SurfaceKind::FourPuncturedSphere;
    } else if (g == 0 && r == 1 && n == 1 && b[0] == 4) {
        out.kind = SurfaceKind::OncePunctured4gon;
    } else if (g == 0 && r == 1 && n == 2 && b[0] == 2) {
        out.kind = SurfaceKind::TwicePuncturedDigon;
    } else if (g == 0 && r == 2 && n == 0) {
        out.kind = SurfaceKind::UnpuncturedAnnulus;
        out.p = b[0];
        out.q = b[1];
    } else {
        out.kind = g == 0 ? SurfaceKind::FeasibleGenus0 : SurfaceKind::FeasibleGenusGe1;
    }
    return out;
}

int arc_count(const MarkedSurface& s) {
    if (classify(s).kind == SurfaceKind::Excluded)
        throw std::invalid_argument("arc_count: excluded surface");
    return 6 * s.genus() + 3 * s.boundary_count() + 3 * s.punctures() + s.boundary_marks() - 6;
}

Quotient quotient(const MarkedSurface& s) {
    Quotient q{MarkedSurface(s.genus(), {}, s.quotient_points()), {}};
    q.omega.resize(s.quotient_points());
    std::iota(q.omega.begin(), q.omega.end(), 1);
    return q;
}

std::vector<int> orbit_blocks(const MarkedSurface& s) {
    std::vector<int> blocks(s.punctures(), 0);
    for (int k : s.boundary()) blocks.push_back(k);
    return blocks;
}

std::set<int> index_set_I(const MarkedSurface& s) {
    const auto blocks = orbit_blocks(s);
    std::set<int> out;
    for (int i = 1; i + 1 <= static_cast<int>(blocks.size()); ++i)
        if (blocks[i - 1] == blocks[i]) out.insert(i);
    return out;
}

MarkedSurface surface_from_json(const std::string& text) {
    const auto j = nlohmann::json::parse(text);
    return MarkedSurface(j.at("genus").get<int>(),
                         j.value("boundary", std::vector<int>{}),
                         j.value("punctures", 0));
}

std::string surface_to_json(const MarkedSurface& s) {
    nlohmann::json j;
    j["genus"] = s.genus();
    j["punctures"] = s.punctures();
    j["boundary"] = s.boundary();
    return j.dump();
}

}  // namespace mcg
