#include "braidmono/factorization.hpp"

#include "braidmono/errors.hpp"

namespace braidmono {

Factorization::Factorization(int strands, bool marked, std::vector<BraidWord> entries,
                             std::vector<std::string> labels)
    : strands_(strands), marked_(marked), entries_(std::move(entries)), labels_(std::move(labels)) {
    if (strands_ < 1)
        throw ValidationError("factorization strand count must be positive");
    for (const BraidWord& e : entries_) {
        if (e.strands() != strands_)
            throw ValidationError("factorization entries must share the strand count");
        if (marked_ && !permutation_of(e).fixes(strands_))
            throw ValidationError("marked factorization entry moves the last strand");
    }
    if (labels_.empty())
        labels_.resize(entries_.size());
    if (labels_.size() != entries_.size())
        throw ValidationError("label list length must match entry count");
}

const BraidWord& Factorization::entry(int i) const {
    if (i < 1 || i > size())
        throw ValidationError("entry index out of range");
    return entries_[static_cast<std::size_t>(i) - 1];
}

const std::string& Factorization::label(int i) const {
    if (i < 1 || i > size())
        throw ValidationError("entry index out of range");
    return labels_[static_cast<std::size_t>(i) - 1];
}

BraidWord pseudo_coxeter(const Factorization& f) {
    if (f.entries().empty())
        return BraidWord::identity(f.strands());
    return pseudo_coxeter(std::span<const BraidWord>(f.entries()));
}

Factorization hurwitz(const Factorization& f, int i, bool forward) {
    if (i < 1 || i + 1 > f.size())
        throw ValidationError("hurwitz index out of range 1..r-1");
    std::vector<BraidWord> entries = f.entries();
    std::vector<std::string> labels = f.labels();
    std::size_t a = static_cast<std::size_t>(i) - 1;
    std::size_t b = a + 1;
    if (forward) {
        // (a, b) -> (b, b a b^-1)
        BraidWord moved = free_reduce(star(entries[b], entries[a]));
        entries[a] = entries[b];
        entries[b] = std::move(moved);
    } else {
        // (a, b) -> (a^-1 b a, a)
        BraidWord moved = free_reduce(conj(entries[b], entries[a]));
        entries[b] = entries[a];
        entries[a] = std::move(moved);
    }
    std::swap(labels[a], labels[b]);
    return Factorization(f.strands(), f.marked(), std::move(entries), std::move(labels));
}

Factorization hurwitz_sequence(const Factorization& f, std::span<const int> moves) {
    Factorization cur = f;
    for (int m : moves) {
        if (m == 0)
            throw ValidationError("hurwitz move index must be nonzero");
        cur = hurwitz(cur, m > 0 ? m : -m, m > 0);
    }
    return cur;
}

Factorization conjugate_all(const Factorization& f, const BraidWord& g) {
    if (g.strands() != f.strands())
        throw ValidationError("conjugate_all strand-count mismatch");
    std::vector<BraidWord> entries;
    entries.reserve(f.entries().size());
    for (const BraidWord& e : f.entries())
        entries.push_back(free_reduce(conj(e, g)));
    return Factorization(f.strands(), f.marked(), std::move(entries), f.labels());
}

bool is_generic(const Factorization& f, std::size_t cap) {
    return braids_equal(pseudo_coxeter(f), full_twist(f.strands()), cap);
}

Factorization replace_entry(const Factorization& f, int i, std::span<const BraidWord> parts,
                            std::span<const std::string> part_labels) {
    if (i < 1 || i > f.size())
        throw ValidationError("replace_entry index out of range");
    if (!part_labels.empty() && part_labels.size() != parts.size())
        throw ValidationError("part label list length must match part count");
    BraidWord product =
        parts.empty() ? BraidWord::identity(f.strands()) : pseudo_coxeter(parts);
    if (!braids_equal(product, f.entry(i)))
        throw OracleMismatchError("replace_entry parts do not multiply to the entry (entry " +
                                  std::to_string(i) + ")");
    std::vector<BraidWord> entries;
    std::vector<std::string> labels;
    for (int t = 1; t <= f.size(); ++t) {
        if (t == i) {
            for (std::size_t p = 0; p < parts.size(); ++p) {
                entries.push_back(parts[p]);
                labels.push_back(part_labels.empty() ? f.label(i) : part_labels[p]);
            }
        } else {
            entries.push_back(f.entry(t));
            labels.push_back(f.label(t));
        }
    }
    return Factorization(f.strands(), f.marked(), std::move(entries), std::move(labels));
}

Factorization forget_strand_all(const Factorization& f, int s) {
    if (s < 1 || s > f.strands())
        throw ValidationError("forget_strand_all position out of range");
    for (int t = 1; t <= f.size(); ++t)
        if (!permutation_of(f.entry(t)).fixes(s))
            throw ValidationError("forget_strand_all: entry " + std::to_string(t) +
                                  " does not stabilize strand " + std::to_string(s));
    std::vector<BraidWord> entries;
    entries.reserve(f.entries().size());
    for (const BraidWord& e : f.entries())
        entries.push_back(forget_strand(e, s));
    bool marked = f.marked() && s != f.strands();
    return Factorization(f.strands() - 1, marked, std::move(entries), f.labels());
}

Factorization drop_trivial_entries(const Factorization& f) {
    std::vector<BraidWord> entries;
    std::vector<std::string> labels;
    for (int t = 1; t <= f.size(); ++t) {
        if (!is_identity_braid(f.entry(t))) {
            entries.push_back(f.entry(t));
            labels.push_back(f.label(t));
        }
    }
    return Factorization(f.strands(), f.marked(), std::move(entries), std::move(labels));
}

} // namespace braidmono
