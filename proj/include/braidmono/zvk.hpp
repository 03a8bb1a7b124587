#pragma once

#include <span>
#include <string>
#include <vector>

#include "braidmono/factorization.hpp"
#include "braidmono/free_word.hpp"

namespace braidmono {

// Finite presentation; relators are freely reduced words equal to 1 over the
// named generators (letter i of a relator refers to generators[i-1]).
struct GroupPresentation {
    std::vector<std::string> generators;
    std::vector<FreeWord> relators;
};

// Meridian generators m1..mk plus one generator per entry g1..gr; each entry
// contributes the conjugation relators g_i^-1 m_j g_i = image of m_j.
GroupPresentation presentation_affine(const Factorization& f);

// Entries listed in kept_line_indices keep their g generator and full relator
// schema; the remaining entries only impose m_j = image for j < k.
GroupPresentation presentation_fully_horizontal(const Factorization& f,
                                                std::span<const int> kept_line_indices);

// Meridians only: m_j = image for j < d over every entry, plus the relator
// m_d ... m_1 identifying the loop at infinity.
GroupPresentation presentation_projective(const Factorization& f);

// One entry of a generic monodromy: entry = conjugator local_word conjugator^-1
// with local_word positive in the band generators listed in indices.
struct GenericFiberEntry {
    BraidWord conjugator;
    BraidWord local_word;
    std::vector<int> indices;
};

// Reduced relator set of a generic factorization: for each entry, relators for
// the touched meridians only, written in the basis moved by conjugator^-1.
// With projective=true the last entry is dropped (it is a consequence) and the
// surjection relator is appended; with projective=false all entries contribute
// and no surjection is added.
GroupPresentation presentation_generic(const Factorization& f,
                                       std::span<const GenericFiberEntry> data,
                                       bool projective = true);

// Invariant factors of the abelianized group: entries > 1 in divisibility
// order, then one 0 per free rank. Empty means the trivial group.
std::vector<long long> abelianize(const GroupPresentation& p);

// Free/cyclic reduction, duplicate removal (up to rotation and inversion),
// and at most `budget` eliminations of generators occurring exactly once in
// some relator. Deterministic: smallest generator first, shortest relator as
// the defining one.
GroupPresentation tietze_simplify(const GroupPresentation& p, int budget);

// Number of surjections onto the symmetric group on m symbols (2 <= m <= 4),
// by brute force; requires at most 6 generators.
long long count_homs_to_small_symmetric(const GroupPresentation& p, int m);

} // namespace braidmono
