#pragma once

#include <set>
#include <string>
#include <vector>

namespace mcg {

enum class SurfaceKind {
    Excluded,
    OncePuncturedClosed,
    FourPuncturedSphere,
    OncePunctured4gon,
    TwicePuncturedDigon,
    UnpuncturedAnnulus,
    FeasibleGenus0,
    FeasibleGenusGe1,
};

struct SurfaceClass {
    SurfaceKind kind = SurfaceKind::Excluded;
    int p = 0;  // annulus: marks on the first boundary
    int q = 0;  // annulus: marks on the second boundary
};

std::string to_string(SurfaceKind k);

// Marked surface (S, M): genus, marked points per boundary component
// (kept sorted ascending), number of punctures.
class MarkedSurface {
public:
    MarkedSurface() = default;
    MarkedSurface(int genus, std::vector<int> boundary, int punctures);

    int genus() const { return genus_; }
    int punctures() const { return punctures_; }
    const std::vector<int>& boundary() const { return boundary_; }
    int boundary_count() const { return static_cast<int>(boundary_.size()); }
    int boundary_marks() const;
    // punctures + boundary components: punctures of the quotient surface
    int quotient_points() const { return punctures_ + boundary_count(); }

    bool operator==(const MarkedSurface&) const = default;

private:
    int genus_ = 0;
    std::vector<int> boundary_;
    int punctures_ = 0;
};

SurfaceClass classify(const MarkedSurface& s);

// 6g + 3r + 3n + c - 6; throws std::invalid_argument on excluded surfaces.
int arc_count(const MarkedSurface& s);

struct Quotient {
    MarkedSurface surface;
    // omega[i] is the quotient puncture (1-based) of the i-th element of
    // p_1 < ... < p_n < b_1 < ... < b_r.
    std::vector<int> omega;
};

Quotient quotient(const MarkedSurface& s);

// I = [n+r-1] minus the positions where adjacent quotient punctures lie in
// different orbit blocks.
std::set<int> index_set_I(const MarkedSurface& s);

// Orbit block of each quotient puncture (1-based positions): punctures share
// block 0, boundaries are grouped by marked-point count.
std::vector<int> orbit_blocks(const MarkedSurface& s);

MarkedSurface surface_from_json(const std::string& text);
std::string surface_to_json(const MarkedSurface& s);

}  // namespace mcg
