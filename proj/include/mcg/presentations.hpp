#pragma once

#include <string>
#include <vector>

#include "mcg/artin.hpp"
#include "mcg/surface.hpp"
#include "mcg/words.hpp"

namespace mcg {

// Generators s1..s(n-1); braid relators then commuting relators.
Presentation braid_presentation(int n);

// Generators a{i}_{j} for 1 <= i < j <= n in lexicographic order.
Presentation pure_braid_presentation(int n);
std::string aij_name(int i, int j);

// sigma_(j-1)..sigma_(i+1) sigma_i^2 (sigma_(j-1)..sigma_(i+1))^-1; generator id k is sigma_(k+1).
Word aij_in_braid(int i, int j, int n);

Presentation sphere_mcg_presentation(int n);
Presentation pmod_sphere_presentation(int n);

// Generators Per{i}, i in index_set_I(s).
Presentation sigma_S_presentation(const MarkedSurface& s);

struct Genus0Options {
    // Conjugation by sigma_i (resp. sigma_j) in the form a_(i,i+1) a_(i+1,j) a_(i,i+1)^-1
    // instead of a_(i,i+1)^-1 a_(i+1,j) a_(i,i+1); the former fails in the braid group.
    bool literal_conjugation = false;
};

// Generators s{k} (k in I) then a{i}_{j} over N = n + r strands.
Presentation impi_presentation_genus0(const MarkedSurface& s, Genus0Options opt = {});
// impi_presentation_genus0 plus T{l} for each boundary component.
Presentation mcg_presentation_genus0(const MarkedSurface& s, Genus0Options opt = {});

// Images of generators under theta: half twists s{k}/v{k} go to (k, k+1) on the
// N quotient punctures, everything else to the identity.
std::vector<Perm> theta_images(const Presentation& p, int degree);
// T{l} -> unit vector of its orbit (boundary components grouped by mark count).
std::vector<std::vector<std::int64_t>> boundary_degree_images(const Presentation& p, const MarkedSurface& s);

// Artin presentation of Gamma_(g,1,n) plus the fundamental-element relations.
Presentation pmod_g1_presentation(int g, int n);

struct KernelWords {
    Word x_n, x_n_prime, e, e_prime;  // e, e_prime empty for g >= 2
};
// Words over artin_presentation(gamma_g0n(g, n)).
KernelWords kernel_words_g1(int g, int n);

// s_ij and a_ij over any presentation containing x0..xN and y1.
Word sij_word(const Presentation& p, int i, int j);
Word aij_word_genus(const Presentation& p, int i, int j);

// Generators: vertices of Gamma_(g,0,N) (v_k only for k in I), then T{l}.
Presentation mcg_presentation_genus_ge1(const MarkedSurface& s);

// H_(p,q) = <r1, r2 | [r1, r2], r1^p r2^-q>; when p = q and with_swap is set,
// adds t with t^2 and t r1 t^-1 r2^-1.
Presentation annulus_presentation(int p, int q, bool with_swap = true);

}  // namespace mcg
