#include "braidmono/zvk.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

#include "braidmono/braid.hpp"
#include "braidmono/errors.hpp"

namespace braidmono {

namespace {

std::vector<std::string> meridian_names(int k) {
    std::vector<std::string> names;
    names.reserve(static_cast<std::size_t>(k));
    for (int j = 1; j <= k; ++j)
        names.push_back("m" + std::to_string(j));
    return names;
}

// m_j followed by the inverse of its image: the relator form of m_j = image.
FreeWord fixed_word_relator(int rank, int j, const FreeWord& image) {
    std::vector<int> letters{j};
    for (auto it = image.letters().rbegin(); it != image.letters().rend(); ++it)
        letters.push_back(-*it);
    return FreeWord(rank, letters);
}

FreeWord conjugation_relator(int rank, int gen_slot, int j, const FreeWord& image) {
    std::vector<int> letters{-gen_slot, j, gen_slot};
    for (auto it = image.letters().rbegin(); it != image.letters().rend(); ++it)
        letters.push_back(-*it);
    return FreeWord(rank, letters);
}

FreeWord surjection_relator(int d) {
    std::vector<int> letters;
    for (int j = d; j >= 1; --j)
        letters.push_back(j);
    return FreeWord(d, letters);
}

void check_presentation(const GroupPresentation& p) {
    int rank = static_cast<int>(p.generators.size());
    for (const FreeWord& r : p.relators)
        if (r.rank() != rank)
            throw ValidationError("relator rank does not match the generator count");
}

} // namespace

GroupPresentation presentation_affine(const Factorization& f) {
    const int k = f.strands();
    const int r = f.size();
    GroupPresentation p;
    p.generators = meridian_names(k);
    for (int i = 1; i <= r; ++i)
        p.generators.push_back("g" + std::to_string(i));
    const int rank = k + r;
    for (int i = 1; i <= r; ++i) {
        std::vector<FreeWord> images = artin_images(f.entry(i));
        for (int j = 1; j <= k; ++j)
            p.relators.push_back(conjugation_relator(rank, k + i, j, images[static_cast<std::size_t>(j) - 1]));
    }
    return p;
}

GroupPresentation presentation_fully_horizontal(const Factorization& f,
                                                std::span<const int> kept_line_indices) {
    const int k = f.strands();
    const int r = f.size();
    std::vector<int> kept(kept_line_indices.begin(), kept_line_indices.end());
    for (std::size_t t = 0; t < kept.size(); ++t) {
        if (kept[t] < 1 || kept[t] > r)
            throw ValidationError("kept line index out of range");
        if (t > 0 && kept[t - 1] >= kept[t])
            throw ValidationError("kept line indices must be strictly increasing");
    }
    GroupPresentation p;
    p.generators = meridian_names(k);
    for (int i : kept)
        p.generators.push_back("g" + std::to_string(i));
    const int rank = k + static_cast<int>(kept.size());
    for (int i = 1; i <= r; ++i) {
        std::vector<FreeWord> images = artin_images(f.entry(i));
        auto pos = std::lower_bound(kept.begin(), kept.end(), i);
        if (pos != kept.end() && *pos == i) {
            int slot = k + 1 + static_cast<int>(pos - kept.begin());
            for (int j = 1; j <= k; ++j)
                p.relators.push_back(conjugation_relator(rank, slot, j, images[static_cast<std::size_t>(j) - 1]));
        } else {
            for (int j = 1; j < k; ++j)
                p.relators.push_back(fixed_word_relator(rank, j, images[static_cast<std::size_t>(j) - 1]));
        }
    }
    return p;
}

GroupPresentation presentation_projective(const Factorization& f) {
    const int d = f.strands();
    GroupPresentation p;
    p.generators = meridian_names(d);
    for (int i = 1; i <= f.size(); ++i) {
        std::vector<FreeWord> images = artin_images(f.entry(i));
        for (int j = 1; j < d; ++j)
            p.relators.push_back(fixed_word_relator(d, j, images[static_cast<std::size_t>(j) - 1]));
    }
    p.relators.push_back(surjection_relator(d));
    return p;
}

GroupPresentation presentation_generic(const Factorization& f,
                                       std::span<const GenericFiberEntry> data,
                                       bool projective) {
    const int d = f.strands();
    const int r = f.size();
    if (static_cast<int>(data.size()) != r)
        throw ValidationError("generic fiber data must have one record per entry");
    for (int i = 1; i <= r; ++i) {
        const GenericFiberEntry& e = data[static_cast<std::size_t>(i) - 1];
        if (e.conjugator.strands() != d || e.local_word.strands() != d)
            throw ValidationError("generic fiber data strand count mismatch");
        for (int idx : e.indices)
            if (idx < 1 || idx > d - 1)
                throw ValidationError("band index out of range");
        for (int v : e.local_word.letters()) {
            if (v < 0)
                throw ValidationError("local word must be positive");
            if (std::find(e.indices.begin(), e.indices.end(), v) == e.indices.end())
                throw ValidationError("local word uses a band outside its index set");
        }
        if (!braids_equal(star(e.conjugator, e.local_word), f.entry(i)))
            throw OracleMismatchError("entry is not the conjugate of its local word");
    }

    GroupPresentation p;
    p.generators = meridian_names(d);
    const int last = projective ? r - 1 : r;
    for (int i = 1; i <= last; ++i) {
        const GenericFiberEntry& e = data[static_cast<std::size_t>(i) - 1];
        const BraidWord eta_inv = invert(e.conjugator);
        std::vector<FreeWord> images = artin_images(e.local_word);
        for (int j : e.indices) {
            std::vector<int> letters{-j};
            const FreeWord& img = images[static_cast<std::size_t>(j) - 1];
            letters.insert(letters.end(), img.letters().begin(), img.letters().end());
            p.relators.push_back(artin_act(eta_inv, FreeWord(d, letters)));
        }
    }
    if (projective)
        p.relators.push_back(surjection_relator(d));
    return p;
}

namespace {

// Smith normal form of the exponent-sum matrix, invariant factors ascending.
std::vector<long long> smith_invariants(std::vector<std::vector<long long>> m) {
    std::vector<long long> factors;
    const std::size_t rows = m.size();
    const std::size_t cols = rows ? m[0].size() : 0;
    std::size_t t = 0;
    while (t < rows && t < cols) {
        std::size_t pr = t, pc = t;
        bool found = false;
        for (std::size_t i = t; i < rows; ++i)
            for (std::size_t j = t; j < cols; ++j)
                if (m[i][j] != 0 &&
                    (!found || std::llabs(m[i][j]) < std::llabs(m[pr][pc]))) {
                    pr = i;
                    pc = j;
                    found = true;
                }
        if (!found)
            break;
        std::swap(m[t], m[pr]);
        for (std::size_t i = 0; i < rows; ++i)
            std::swap(m[i][t], m[i][pc]);

        bool clean = false;
        while (!clean) {
            clean = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (m[i][t] == 0)
                    continue;
                long long q = m[i][t] / m[t][t];
                for (std::size_t j = t; j < cols; ++j)
                    m[i][j] -= q * m[t][j];
                if (m[i][t] != 0) {
                    std::swap(m[t], m[i]);
                    clean = false;
                }
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (m[t][j] == 0)
                    continue;
                long long q = m[t][j] / m[t][t];
                for (std::size_t i = t; i < rows; ++i)
                    m[i][j] -= q * m[i][t];
                if (m[t][j] != 0) {
                    for (std::size_t i = 0; i < rows; ++i)
                        std::swap(m[i][t], m[i][j]);
                    clean = false;
                }
            }
            if (clean) {
                // Pivot must divide the rest of the submatrix.
                for (std::size_t i = t + 1; i < rows && clean; ++i)
                    for (std::size_t j = t + 1; j < cols && clean; ++j)
                        if (m[i][j] % m[t][t] != 0) {
                            for (std::size_t jj = t; jj < cols; ++jj)
                                m[t][jj] += m[i][jj];
                            clean = false;
                        }
            }
        }
        factors.push_back(std::llabs(m[t][t]));
        ++t;
    }
    return factors;
}

} // namespace

std::vector<long long> abelianize(const GroupPresentation& p) {
    check_presentation(p);
    const std::size_t g = p.generators.size();
    std::vector<std::vector<long long>> m;
    m.reserve(p.relators.size());
    for (const FreeWord& r : p.relators) {
        std::vector<long long> row(g, 0);
        for (int v : r.letters())
            row[static_cast<std::size_t>(std::abs(v)) - 1] += v > 0 ? 1 : -1;
        m.push_back(std::move(row));
    }
    std::vector<long long> factors = smith_invariants(std::move(m));
    std::vector<long long> out;
    for (long long f : factors)
        if (f > 1)
            out.push_back(f);
    for (std::size_t z = factors.size(); z < g; ++z)
        out.push_back(0);
    return out;
}

namespace {

std::vector<int> cyclic_reduce(std::vector<int> w) {
    std::vector<int> reduced;
    for (int v : w) {
        if (!reduced.empty() && reduced.back() == -v)
            reduced.pop_back();
        else
            reduced.push_back(v);
    }
    std::size_t lo = 0, hi = reduced.size();
    while (hi - lo >= 2 && reduced[lo] == -reduced[hi - 1]) {
        ++lo;
        --hi;
    }
    return std::vector<int>(reduced.begin() + static_cast<long>(lo),
                            reduced.begin() + static_cast<long>(hi));
}

// Least rotation over the word and its inverse: equality class under
// cyclic permutation and inversion.
std::vector<int> canonical_cyclic(const std::vector<int>& w) {
    std::vector<int> best;
    bool have = false;
    auto consider = [&](const std::vector<int>& base) {
        for (std::size_t s = 0; s < base.size(); ++s) {
            std::vector<int> rot;
            rot.reserve(base.size());
            rot.insert(rot.end(), base.begin() + static_cast<long>(s), base.end());
            rot.insert(rot.end(), base.begin(), base.begin() + static_cast<long>(s));
            if (!have || rot < best) {
                best = std::move(rot);
                have = true;
            }
        }
    };
    if (w.empty())
        return {};
    consider(w);
    std::vector<int> inv;
    for (auto it = w.rbegin(); it != w.rend(); ++it)
        inv.push_back(-*it);
    consider(inv);
    return best;
}

std::vector<std::vector<int>> tidy_relators(const std::vector<std::vector<int>>& in) {
    std::vector<std::vector<int>> canon;
    std::vector<std::vector<int>> out;
    for (const std::vector<int>& w : in) {
        std::vector<int> red = cyclic_reduce(w);
        if (red.empty())
            continue;
        std::vector<int> c = canonical_cyclic(red);
        if (std::find(canon.begin(), canon.end(), c) != canon.end())
            continue;
        canon.push_back(std::move(c));
        out.push_back(std::move(red));
    }
    return out;
}

} // namespace

GroupPresentation tietze_simplify(const GroupPresentation& p, int budget) {
    check_presentation(p);
    std::vector<std::string> names = p.generators;
    std::vector<std::vector<int>> relators;
    relators.reserve(p.relators.size());
    for (const FreeWord& r : p.relators)
        relators.push_back(r.letters());
    relators = tidy_relators(relators);

    while (budget > 0) {
        int gen = 0;
        std::size_t which = 0;
        for (int g = 1; g <= static_cast<int>(names.size()) && gen == 0; ++g) {
            std::size_t best = relators.size();
            for (std::size_t t = 0; t < relators.size(); ++t) {
                int count = 0;
                for (int v : relators[t])
                    if (std::abs(v) == g)
                        ++count;
                if (count == 1 &&
                    (best == relators.size() || relators[t].size() < relators[best].size()))
                    best = t;
            }
            if (best != relators.size()) {
                gen = g;
                which = best;
            }
        }
        if (gen == 0)
            break;

        std::vector<int> defining = relators[which];
        relators.erase(relators.begin() + static_cast<long>(which));
        std::size_t at = 0;
        while (std::abs(defining[at]) != gen)
            ++at;
        std::rotate(defining.begin(), defining.begin() + static_cast<long>(at), defining.end());
        // defining = gen^e w; replacement for gen is w^-1 (e = 1) or w (e = -1).
        std::vector<int> tail(defining.begin() + 1, defining.end());
        std::vector<int> repl;
        if (defining[0] > 0)
            for (auto it = tail.rbegin(); it != tail.rend(); ++it)
                repl.push_back(-*it);
        else
            repl = tail;

        for (std::vector<int>& r : relators) {
            std::vector<int> next;
            for (int v : r) {
                if (std::abs(v) != gen) {
                    next.push_back(v);
                    continue;
                }
                if (v > 0)
                    next.insert(next.end(), repl.begin(), repl.end());
                else
                    for (auto it = repl.rbegin(); it != repl.rend(); ++it)
                        next.push_back(-*it);
            }
            r = std::move(next);
        }
        for (std::vector<int>& r : relators)
            for (int& v : r)
                if (std::abs(v) > gen)
                    v += v > 0 ? -1 : 1;
        names.erase(names.begin() + (gen - 1));
        relators = tidy_relators(relators);
        --budget;
    }

    GroupPresentation out;
    out.generators = std::move(names);
    const int rank = static_cast<int>(out.generators.size());
    for (const std::vector<int>& r : relators)
        out.relators.push_back(FreeWord(rank, r));
    return out;
}

namespace {

std::vector<std::vector<int>> all_permutations(int m) {
    std::vector<int> base(static_cast<std::size_t>(m));
    std::iota(base.begin(), base.end(), 0);
    std::vector<std::vector<int>> out;
    do {
        out.push_back(base);
    } while (std::next_permutation(base.begin(), base.end()));
    return out;
}

std::vector<int> compose_perm(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        out[i] = b[static_cast<std::size_t>(a[i])];
    return out;
}

std::vector<int> invert_perm(const std::vector<int>& a) {
    std::vector<int> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        out[static_cast<std::size_t>(a[i])] = static_cast<int>(i);
    return out;
}

bool generates_full(const std::vector<std::vector<int>>& gens, std::size_t order) {
    std::vector<std::vector<int>> seen;
    std::vector<int> id(gens.empty() ? 0 : gens[0].size());
    std::iota(id.begin(), id.end(), 0);
    seen.push_back(id);
    for (std::size_t t = 0; t < seen.size(); ++t)
        for (const std::vector<int>& g : gens) {
            std::vector<int> next = compose_perm(seen[t], g);
            if (std::find(seen.begin(), seen.end(), next) == seen.end())
                seen.push_back(std::move(next));
        }
    return seen.size() == order;
}

} // namespace

long long count_homs_to_small_symmetric(const GroupPresentation& p, int m) {
    check_presentation(p);
    if (m < 2 || m > 4)
        throw ValidationError("symmetric target must have 2 to 4 symbols");
    if (p.generators.size() > 6)
        throw ValidationError("hom counting is bounded to 6 generators; simplify first");

    const std::vector<std::vector<int>> perms = all_permutations(m);
    const std::size_t order = perms.size();
    const std::size_t g = p.generators.size();
    std::vector<std::size_t> choice(g, 0);
    long long count = 0;
    while (true) {
        std::vector<std::vector<int>> images;
        images.reserve(g);
        for (std::size_t i = 0; i < g; ++i)
            images.push_back(perms[choice[i]]);
        bool ok = true;
        for (const FreeWord& r : p.relators) {
            std::vector<int> acc(static_cast<std::size_t>(m));
            std::iota(acc.begin(), acc.end(), 0);
            for (int v : r.letters()) {
                const std::vector<int>& img = images[static_cast<std::size_t>(std::abs(v)) - 1];
                acc = compose_perm(acc, v > 0 ? img : invert_perm(img));
            }
            for (std::size_t i = 0; i < acc.size() && ok; ++i)
                if (acc[i] != static_cast<int>(i))
                    ok = false;
            if (!ok)
                break;
        }
        if (ok && generates_full(images, order))
            ++count;

        std::size_t pos = 0;
        while (pos < g && ++choice[pos] == order) {
            choice[pos] = 0;
            ++pos;
        }
        if (pos == g)
            break;
    }
    return count;
}

} // namespace braidmono
