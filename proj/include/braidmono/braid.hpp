#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "braidmono/free_word.hpp"

namespace braidmono {

// Bijection of {1..d}, composed left to right.
class Permutation {
  public:
    explicit Permutation(std::vector<int> images);
    static Permutation identity(int d);

    int degree() const { return static_cast<int>(images_.size()); }
    int operator()(int i) const;
    bool fixes(int i) const { return (*this)(i) == i; }
    bool is_identity() const;
    Permutation then(const Permutation& next) const;

    bool operator==(const Permutation&) const = default;

  private:
    std::vector<int> images_;
};

// Word in the Artin generators of B_d. A letter v with v > 0 is the
// counterclockwise half-twist sigma_v; v < 0 is its inverse. The empty word is
// the identity. No normal form is stored: distinct letter sequences may be
// equal as group elements, and equality is decided by braids_equal below.
class BraidWord {
  public:
    BraidWord(int strands, std::vector<int> letters);
    static BraidWord identity(int strands);
    static BraidWord generator(int strands, int i);

    int strands() const { return strands_; }
    const std::vector<int>& letters() const { return letters_; }
    bool empty() const { return letters_.empty(); }
    std::size_t length() const { return letters_.size(); }

    bool operator==(const BraidWord&) const = default;

    // Text form "s1 s2^-1", runs folded into exponents.
    std::string str() const;

  private:
    int strands_;
    std::vector<int> letters_;
};

// Words multiply by concatenation; in the product a.b the factor a acts first
// (left to right), so conj(a, b) = b^-1 a b and star(b, a) = b a b^-1.
BraidWord compose(const BraidWord& a, const BraidWord& b);
BraidWord invert(const BraidWord& a);
BraidWord conj(const BraidWord& a, const BraidWord& b);
BraidWord star(const BraidWord& b, const BraidWord& a);
BraidWord power(const BraidWord& a, int e);

// Cancels adjacent inverse pairs; same group element, shorter word.
BraidWord free_reduce(const BraidWord& a);

Permutation permutation_of(const BraidWord& a);
long long exponent_sum(const BraidWord& a);

// Full twist Delta_d^2, written (s_{d-1}...s_1)^d: the positive generator of
// the center of B_d.
BraidWord full_twist(int d);

// The same central element Delta_{k+1}^2 of B_{k+1}, written
// (s_k^2 s_{k-1}...s_1)^k so that every s_k run is even; this is the form fed
// to the cover lifts, which only accept even s_k powers.
BraidWord full_twist_marked(int k);

// Garside half-twist of the strand band i..j inside B_d.
BraidWord partial_garside(int i, int j, int d);

// Letters shifted up by l, re-homed on d2 strands.
BraidWord shift_embed(const BraidWord& a, int l, int d2);

// Deletes strand s, geometrically: walks the word tracking the current
// position p of the deleted strand; a letter at p or p-1 moves p and is
// dropped, letters above p shift down by one, letters below p-1 pass through.
// Restricted to words whose permutation fixes s this is a homomorphism.
BraidWord forget_strand(const BraidWord& a, int s);

// Reversed product x_r ... x_1 of a tuple: the total monodromy.
BraidWord pseudo_coxeter(std::span<const BraidWord> xs);

inline constexpr std::size_t kDefaultFreeLengthCap = 1000000;

// Right action of B_d on the free group of rank d: the letter +j sends
// u_j -> u_{j+1} and u_{j+1} -> u_{j+1} u_j u_{j+1}^-1, fixing the rest; the
// letter -j is the inverse substitution. Braid letters are applied left to
// right, so the action of a product is the action of its factors in order.
// Throws ResourceLimitError if an intermediate word exceeds cap letters.
FreeWord artin_act(const BraidWord& b, const FreeWord& w,
                   std::size_t cap = kDefaultFreeLengthCap);

// Images of all d generators under artin_act: a faithful fingerprint.
std::vector<FreeWord> artin_images(const BraidWord& b,
                                   std::size_t cap = kDefaultFreeLengthCap);

// Exact equality in B_d: the action of a.b^-1 fixes every generator.
bool braids_equal(const BraidWord& a, const BraidWord& b,
                  std::size_t cap = kDefaultFreeLengthCap);
bool is_identity_braid(const BraidWord& a,
                       std::size_t cap = kDefaultFreeLengthCap);

// Element of B_{k,1}: a braid on k+1 strands whose permutation fixes the
// distinguished last strand k+1 (the point 0).
class MarkedBraidWord {
  public:
    MarkedBraidWord(int k, BraidWord word);

    int k() const { return k_; }
    const BraidWord& word() const { return word_; }

    bool operator==(const MarkedBraidWord&) const = default;

  private:
    int k_;
    BraidWord word_;
};

} // namespace braidmono
