#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "mcg/surface.hpp"
#include "mcg/words.hpp"

namespace mcg {

// MCG generators of a surface with their permutation images on the quotient
// punctures; the first `punctures` points are the punctures of the surface.
struct TaggedGroupContext {
    MarkedSurface surface;
    Presentation presentation;
    std::vector<Perm> theta;
    int degree = 0;
    int punctures = 0;

    static TaggedGroupContext for_surface(const MarkedSurface& s);
    // Permutation of the punctures induced by a word.
    Perm puncture_perm(const Word& w) const;
};

// (h, eps, R): h a word in the MCG generators, eps the orientation bit, R a set of punctures.
struct TaggedMCGElement {
    Word h;
    int eps = 0;
    std::set<int> R;
    bool operator==(const TaggedMCGElement&) const = default;
};

enum class RConvention {
    InverseImage,  // h2^-1(R1) (-) R2
    Literal,       // h2(R1) (-) R2
};

// Generator-wise inversion; the action of the orientation-reversing involution on twist words.
Word epsilon_twist(const Word& w);

std::set<int> apply_perm(const Perm& p, const std::set<int>& s);
std::set<int> symmetric_difference(const std::set<int>& a, const std::set<int>& b);

// (h1 h2^((-1)^eps1), eps1 + eps2, h2^-1(R1) (-) R2) with the default convention.
TaggedMCGElement multiply(const TaggedGroupContext& ctx, const TaggedMCGElement& a, const TaggedMCGElement& b,
                          RConvention conv = RConvention::InverseImage);
TaggedMCGElement inverse(const TaggedGroupContext& ctx, const TaggedMCGElement& a);

std::string element_to_json(const TaggedGroupContext& ctx, const TaggedMCGElement& a);
TaggedMCGElement element_from_json(const TaggedGroupContext& ctx, const std::string& text);

// Element of (MCG x| Z2) |x Z2^P4 x Z2 x Z2 for the 4-punctured sphere.
struct FourPunctSphereElement {
    TaggedMCGElement base;
    int sigma_bit = 0;
    int mu_bit = 0;
    bool operator==(const FourPunctSphereElement&) const = default;
};

FourPunctSphereElement multiply_fourpunct(const TaggedGroupContext& ctx, const FourPunctSphereElement& a,
                                          const FourPunctSphereElement& b);

// Di4 x Sigma3: a symmetry of the square (permutation of corners 0..3) and a permutation of 3 points.
struct Di4xSigma3 {
    Perm square = perm_identity(4);
    Perm sigma = perm_identity(3);
    bool operator==(const Di4xSigma3&) const = default;
    auto operator<=>(const Di4xSigma3&) const = default;

    static Di4xSigma3 identity() { return {}; }
    // Throws unless square preserves the 4-cycle 0-1-2-3 and sigma is a permutation of 3 points.
    void validate() const;
    Di4xSigma3 operator*(const Di4xSigma3& o) const;
    Di4xSigma3 inverse() const;
    static std::vector<Di4xSigma3> generators();
};

// Closure of the generators under multiplication.
std::vector<Di4xSigma3> enumerate_di4xsigma3();

// (Z x S4) x| Z2: t = 1 negates k and conjugates s by the transposition (0 1).
struct ZxS4semiZ2 {
    std::int64_t k = 0;
    Perm s = perm_identity(4);
    int t = 0;
    bool operator==(const ZxS4semiZ2&) const = default;

    static ZxS4semiZ2 identity() { return {}; }
    void validate() const;
    ZxS4semiZ2 operator*(const ZxS4semiZ2& o) const;
    ZxS4semiZ2 inverse() const;
};

// One row of the automorphism group table.
struct AutGroupDescriptor {
    SurfaceKind kind = SurfaceKind::Excluded;
    std::string row;
    std::string shape;
    std::optional<Presentation> mcg;
};

AutGroupDescriptor aut_group_descriptor(const MarkedSurface& s);
std::string descriptor_to_json(const AutGroupDescriptor& d);

}  // namespace mcg
