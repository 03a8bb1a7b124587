#pragma once

#include <span>
#include <string>
#include <vector>

#include "braidmono/factorization.hpp"

namespace braidmono {

// Local model of a non-transversal vertical line: the entry must equal the
// conjugate by `conjugator` of the model word shifted to start at band `base`.
class TangencyModel {
public:
    enum class Kind { cusp, cusp_mirror, inflection, node_branch };

    static TangencyModel cusp(int base, BraidWord conjugator);
    // Same local picture with the two strands swapped; the tangency braid ends
    // up on the lower strand and the cusp braid becomes a power of s_base.
    static TangencyModel cusp_mirror(int base, BraidWord conjugator);
    static TangencyModel node_branch(int base, BraidWord conjugator);
    // Tangent line at an inflection point where `order` sheets meet.
    static TangencyModel inflection(int order, int base, BraidWord conjugator);

    Kind kind() const { return kind_; }
    int base() const { return base_; }
    int order() const { return order_; }
    const BraidWord& conjugator() const { return conjugator_; }

    // conjugator * (shifted model word), on the conjugator's strand count.
    BraidWord expected_entry() const;
    // The generic tuple replacing the model, conjugated and shifted alike.
    std::vector<BraidWord> replacement() const;

private:
    TangencyModel(Kind kind, int order, int base, BraidWord conjugator);

    Kind kind_;
    int order_;
    int base_;
    BraidWord conjugator_;
};

// Swap entry i for the model's replacement tuple; the product is preserved
// and checked against the current entry.
Factorization replace_tangency(const Factorization& f, int i, const TangencyModel& model);

// Splice pairwise commuting parts in place of entry i. Any ordering of the
// parts is accepted since their product is order-independent.
Factorization split_locally_generic(const Factorization& f, int i,
                                    std::span<const BraidWord> parts,
                                    std::span<const std::string> part_labels = {});

// One entry of an augmented line-arrangement monodromy, with its decomposition
// tau = beta * prod_s D^2_{cuts[s], cuts[s+1]-1}.
struct ArrangementEntry {
    BraidWord tau;
    BraidWord beta;
    std::vector<int> cuts; // 1 = a_1 < ... < a_{m+1} = lines + 1
    std::string label;
};

struct ArrangementInput {
    int lines = 0; // n, strand count of the entries
    std::vector<ArrangementEntry> entries;
    std::vector<int> vertical_indices; // ascending 1-based entry positions
};

// Rewrite an augmented monodromy over B_lines into a generic factorization
// over B_{lines + #verticals}: non-vertical entries split into their band
// twists, vertical entries absorb their line's strand into each band, and a
// final twist around the former common point is appended when nontrivial.
Factorization arrangement_generify(const ArrangementInput& input);

} // namespace braidmono
