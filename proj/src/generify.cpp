#include "braidmono/generify.hpp"

#include <algorithm>
#include <cstddef>

#include "braidmono/errors.hpp"

namespace braidmono {

TangencyModel::TangencyModel(Kind kind, int order, int base, BraidWord conjugator)
    : kind_(kind), order_(order), base_(base), conjugator_(std::move(conjugator)) {
    if (base_ < 1)
        throw ValidationError("tangency band base must be >= 1");
    if (kind_ == Kind::inflection && order_ < 2)
        throw ValidationError("inflection order must be >= 2");
    int highest = kind_ == Kind::inflection ? base_ + order_ - 2 : base_ + 1;
    if (highest > conjugator_.strands() - 1)
        throw ValidationError("tangency band does not fit inside the strand count");
}

TangencyModel TangencyModel::cusp(int base, BraidWord conjugator) {
    return TangencyModel(Kind::cusp, 0, base, std::move(conjugator));
}

TangencyModel TangencyModel::cusp_mirror(int base, BraidWord conjugator) {
    return TangencyModel(Kind::cusp_mirror, 0, base, std::move(conjugator));
}

TangencyModel TangencyModel::node_branch(int base, BraidWord conjugator) {
    return TangencyModel(Kind::node_branch, 0, base, std::move(conjugator));
}

TangencyModel TangencyModel::inflection(int order, int base, BraidWord conjugator) {
    return TangencyModel(Kind::inflection, order, base, std::move(conjugator));
}

BraidWord TangencyModel::expected_entry() const {
    int d = conjugator_.strands();
    int a = base_;
    std::vector<int> letters;
    switch (kind_) {
    case Kind::cusp:
        letters = {a + 1, a, a + 1, a};
        break;
    case Kind::cusp_mirror:
        letters = {a, a + 1, a, a + 1};
        break;
    case Kind::node_branch:
        letters = {a, a + 1, a};
        break;
    case Kind::inflection:
        for (int v = a + order_ - 2; v >= a; --v)
            letters.push_back(v);
        break;
    }
    return star(conjugator_, BraidWord(d, std::move(letters)));
}

std::vector<BraidWord> TangencyModel::replacement() const {
    int d = conjugator_.strands();
    int a = base_;
    std::vector<BraidWord> parts;
    switch (kind_) {
    case Kind::cusp:
        parts.push_back(BraidWord(d, {-(a + 1), a, a + 1}));
        parts.push_back(BraidWord(d, {a + 1, a + 1, a + 1}));
        break;
    case Kind::cusp_mirror:
        parts.push_back(BraidWord(d, {-a, a + 1, a}));
        parts.push_back(BraidWord(d, {a, a, a}));
        break;
    case Kind::node_branch:
        parts.push_back(BraidWord(d, {-a, a + 1, a}));
        parts.push_back(BraidWord(d, {a, a}));
        break;
    case Kind::inflection:
        for (int v = a; v <= a + order_ - 2; ++v)
            parts.push_back(BraidWord::generator(d, v));
        break;
    }
    for (BraidWord& p : parts)
        p = free_reduce(star(conjugator_, p));
    return parts;
}

Factorization replace_tangency(const Factorization& f, int i, const TangencyModel& model) {
    if (model.conjugator().strands() != f.strands())
        throw ValidationError("tangency model lives on a different strand count");
    return replace_entry(f, i, model.replacement());
}

Factorization split_locally_generic(const Factorization& f, int i,
                                    std::span<const BraidWord> parts,
                                    std::span<const std::string> part_labels) {
    for (std::size_t a = 0; a < parts.size(); ++a)
        for (std::size_t b = a + 1; b < parts.size(); ++b)
            if (!braids_equal(compose(parts[a], parts[b]), compose(parts[b], parts[a])))
                throw OracleMismatchError("local split parts do not commute");
    return replace_entry(f, i, parts, part_labels);
}

namespace {

void validate_cuts(const std::vector<int>& cuts, int lines) {
    if (cuts.size() < 2 || cuts.front() != 1 || cuts.back() != lines + 1)
        throw ValidationError("partition must run from 1 to lines + 1");
    for (std::size_t s = 0; s + 1 < cuts.size(); ++s)
        if (cuts[s] >= cuts[s + 1])
            throw ValidationError("partition must be strictly increasing");
}

// prod_s D^2_{a_s, a_{s+1}-1} on d strands; the factors commute.
BraidWord alpha_of(const std::vector<int>& cuts, int d) {
    BraidWord out = BraidWord::identity(d);
    for (std::size_t s = 0; s + 1 < cuts.size(); ++s)
        out = compose(out, power(partial_garside(cuts[s], cuts[s + 1] - 1, d), 2));
    return out;
}

} // namespace

Factorization arrangement_generify(const ArrangementInput& input) {
    const int n = input.lines;
    const int k = static_cast<int>(input.vertical_indices.size());
    const int r = static_cast<int>(input.entries.size());
    if (n < 1)
        throw ValidationError("arrangement needs at least one non-vertical line");
    for (std::size_t j = 0; j < input.vertical_indices.size(); ++j) {
        int idx = input.vertical_indices[j];
        if (idx < 1 || idx > r)
            throw ValidationError("vertical index out of range");
        if (j > 0 && input.vertical_indices[j - 1] >= idx)
            throw ValidationError("vertical indices must be strictly increasing");
    }

    const int d = n + k;
    for (const ArrangementEntry& e : input.entries) {
        if (e.tau.strands() != n || e.beta.strands() != n)
            throw ValidationError("arrangement entries must live on the line count");
        validate_cuts(e.cuts, n);
        if (!braids_equal(e.tau, star(e.beta, alpha_of(e.cuts, n))))
            throw OracleMismatchError("entry does not match its band decomposition");
    }

    std::vector<BraidWord> out;
    std::vector<std::string> labels;
    for (int i = 1; i <= r; ++i) {
        const ArrangementEntry& e = input.entries[static_cast<std::size_t>(i) - 1];
        const std::vector<int>& a = e.cuts;
        const int m = static_cast<int>(a.size()) - 1;
        const BraidWord beta = shift_embed(e.beta, 0, d);
        auto vert = std::find(input.vertical_indices.begin(), input.vertical_indices.end(), i);
        if (vert == input.vertical_indices.end()) {
            for (int s = m; s >= 1; --s) {
                BraidWord band = power(partial_garside(a[s - 1], a[s] - 1, d), 2);
                BraidWord entry = free_reduce(star(beta, band));
                if (is_identity_braid(entry))
                    continue;
                out.push_back(std::move(entry));
                labels.push_back(e.label);
            }
        } else {
            // The line's strand is first pulled down to position n+1, then
            // dragged through the bands above s before twisting with band s.
            int j = static_cast<int>(vert - input.vertical_indices.begin()) + 1;
            for (int s = m; s >= 1; --s) {
                BraidWord w = beta;
                for (int v = n + j - 1; v >= n + 1; --v)
                    w = compose(w, invert(BraidWord::generator(d, v)));
                for (int t = m; t >= s + 1; --t)
                    w = compose(w, partial_garside(a[t - 1], a[t], d));
                BraidWord band = power(partial_garside(a[s - 1], a[s], d), 2);
                out.push_back(free_reduce(star(w, band)));
                labels.push_back(e.label);
            }
        }
    }
    if (k >= 2) {
        out.push_back(power(partial_garside(n + 1, n + k, d), 2));
        labels.push_back("vertical pencil");
    }
    return Factorization(d, false, std::move(out), std::move(labels));
}

} // namespace braidmono
