#pragma once

#include <vector>

#include "braidmono/braid.hpp"
#include "braidmono/factorization.hpp"

namespace braidmono {

// Generator systems for the target of the degree-n cover lift
// B_{k,1} -> B_{nk,1} induced by z -> z^n.
//
// Each system is a diagram system on the nk+1 target points, so its
// generators are the standard Artin generators of B_{nk+1} under the system's
// own flattening:
//   circular:  grid (i,j), 1<=i<=k, 1<=j<=n, flat index (i-1)n + j
//              (left-lexicographic); the fixed point 0 is strand nk+1.
//   radial:    same grid, flat index (j-1)k + i (right-lexicographic);
//              the fixed point 0 is strand nk+1.
//   straight2: n = 2 only; 2k points on a line with 0 in the middle, so the
//              fixed point is strand k+1 and generators are s_1..s_{2k}.
// Words produced for different systems index different geometric
// half-twists; the to_circular_letters conversion makes them comparable.
enum class LiftSystem { circular, radial, straight2 };

class LiftSpec {
  public:
    LiftSpec(int n, int k, LiftSystem system);

    int n() const { return n_; }
    int k() const { return k_; }
    LiftSystem system() const { return system_; }
    int target_strands() const { return n_ * k_ + 1; }
    int fixed_strand() const;

    // Precomputed generator images, in this system's flat letters.
    const BraidWord& image_of_generator(int i) const; // 1 <= i <= k-1
    const BraidWord& image_of_sk_squared() const;

  private:
    int n_;
    int k_;
    LiftSystem system_;
    std::vector<BraidWord> gen_images_;
    BraidWord sk2_image_;
};

// Image of b under the cover lift, in the spec's own flat letters, on
// nk+1 strands. The input must be marked (permutation fixes k+1) and, after
// free reduction, every maximal run of s_k letters must have even length;
// odd runs are a hard error since the morphism is only defined on B_{k,1}.
// n = 1 returns b unchanged.
BraidWord lift_braid(const LiftSpec& spec, const BraidWord& b);
BraidWord lift_braid(const LiftSpec& spec, const MarkedBraidWord& b);

// Lift followed by deletion of the fixed strand.
BraidWord lift_braid_forget(const LiftSpec& spec, const BraidWord& b);

// Lifts an extended factorization T = (t_1..t_r, t_{r+1}) whose last entry is
// the braid around the covered line x=0. The output lists, for each block
// j = 0..n-1, the entries L(t_i) conjugated by L(t_{r+1})^j, followed by
// L(t_{r+1})^n; nr+1 entries total. With forget set, the fixed strand is then
// deleted from every entry. n = 1 returns T (forgetting if asked).
Factorization lift_factorization(const LiftSpec& spec, const Factorization& T,
                                 bool forget = false);

// Braid closing a factorization at infinity: the full twist times the inverse
// of the pseudo-Coxeter element. For a marked factorization the full twist is
// written in its even-run marked form so the result stays liftable.
BraidWord infinity_braid(const Factorization& f);

// The braid at infinity for the lifted factorization: Delta_{k+1}^{2n} times
// c_T^{-n}, computed in B_{k,1} and pushed through the lift.
BraidWord kummer_infinity_braid(const LiftSpec& spec, const Factorization& T);

// Rewrites a word over one system's flat letters into circular flat letters
// (same group element of B_{nk+1}); used to compare systems.
BraidWord to_circular_letters(const LiftSpec& spec, const BraidWord& w);

// The three product expansions of the half-twist exchanging the j-th copies
// of base points i and i+1 in the circular system; all oracle-equal. The
// second expansion is parameterized by a free split point between (i,j) and
// (k,n) in left-lexicographic flat position.
BraidWord circular_half_twist(int n, int k, int i, int j);
BraidWord circular_half_twist_mid(int n, int k, int i, int j, int split_flat);
BraidWord circular_half_twist_low(int n, int k, int i, int j);

} // namespace braidmono
