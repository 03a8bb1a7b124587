#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "braidmono/braid.hpp"

namespace braidmono {

// Ordered tuple of braids in a common B_d: a braid monodromy. If marked, the
// entries lie in B_{d-1,1}: every permutation fixes the last strand d.
// Entries are indexed 1-based throughout, matching generator indexing.
class Factorization {
  public:
    Factorization(int strands, bool marked, std::vector<BraidWord> entries,
                  std::vector<std::string> labels = {});

    int strands() const { return strands_; }
    bool marked() const { return marked_; }
    const std::vector<BraidWord>& entries() const { return entries_; }
    const std::vector<std::string>& labels() const { return labels_; }
    int size() const { return static_cast<int>(entries_.size()); }

    const BraidWord& entry(int i) const;
    const std::string& label(int i) const;

    bool operator==(const Factorization&) const = default;

  private:
    int strands_;
    bool marked_;
    std::vector<BraidWord> entries_;
    std::vector<std::string> labels_; // always sized like entries_; "" = unlabeled
};

// Reversed product of the entries; identity for an empty tuple.
BraidWord pseudo_coxeter(const Factorization& f);

// Hurwitz move at i: (..., a, b, ...) -> (..., b, b a b^-1, ...); the inverse
// direction is (..., a, b, ...) -> (..., a^-1 b a, a, ...), which undoes it
// entrywise after free cancellation. Affected entries are freely reduced.
Factorization hurwitz(const Factorization& f, int i, bool forward = true);

// Signed move list: +i forward at i, -i inverse at i, applied in order.
Factorization hurwitz_sequence(const Factorization& f, std::span<const int> moves);

// Every entry tau replaced by g^-1 tau g, freely reduced.
Factorization conjugate_all(const Factorization& f, const BraidWord& g);

// True iff the pseudo-Coxeter element is the full twist of B_d.
bool is_generic(const Factorization& f, std::size_t cap = kDefaultFreeLengthCap);

// Splices parts in place of entry i after checking that their reversed
// product equals the entry (OracleMismatchError otherwise). Each new entry
// inherits the replaced entry's label unless part_labels are supplied.
Factorization replace_entry(const Factorization& f, int i, std::span<const BraidWord> parts,
                            std::span<const std::string> part_labels = {});

// Strandwise deletion; requires every entry's permutation to fix s. Forgetting
// the marked last strand yields an unmarked factorization.
Factorization forget_strand_all(const Factorization& f, int s);

// Removes entries that are identity braids (by oracle, not syntactically).
Factorization drop_trivial_entries(const Factorization& f);

} // namespace braidmono
