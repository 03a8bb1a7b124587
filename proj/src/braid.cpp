#include "braidmono/braid.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

#include "braidmono/errors.hpp"

namespace braidmono {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<char> seen(images_.size(), 0);
    for (int v : images_) {
        if (v < 1 || v > static_cast<int>(images_.size()) || seen[v - 1])
            throw ValidationError("permutation images are not a bijection of 1..d");
        seen[v - 1] = 1;
    }
}

Permutation Permutation::identity(int d) {
    std::vector<int> img(static_cast<std::size_t>(d));
    std::iota(img.begin(), img.end(), 1);
    return Permutation(std::move(img));
}

int Permutation::operator()(int i) const {
    if (i < 1 || i > degree())
        throw ValidationError("permutation argument out of range");
    return images_[static_cast<std::size_t>(i) - 1];
}

bool Permutation::is_identity() const {
    for (int i = 1; i <= degree(); ++i)
        if (images_[static_cast<std::size_t>(i) - 1] != i)
            return false;
    return true;
}

Permutation Permutation::then(const Permutation& next) const {
    if (degree() != next.degree())
        throw ValidationError("permutation degree mismatch");
    std::vector<int> img(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i)
        img[i] = next(images_[i]);
    return Permutation(std::move(img));
}

BraidWord::BraidWord(int strands, std::vector<int> letters)
    : strands_(strands), letters_(std::move(letters)) {
    if (strands < 1)
        throw ValidationError("strand count must be positive");
    for (int v : letters_)
        if (v == 0 || std::abs(v) > strands - 1)
            throw ValidationError("braid letter out of range 1..strands-1");
}

BraidWord BraidWord::identity(int strands) {
    return BraidWord(strands, {});
}

BraidWord BraidWord::generator(int strands, int i) {
    return BraidWord(strands, {i});
}

std::string BraidWord::str() const {
    if (letters_.empty())
        return "1";
    std::string s;
    for (std::size_t t = 0; t < letters_.size();) {
        std::size_t u = t;
        while (u < letters_.size() && letters_[u] == letters_[t])
            ++u;
        if (!s.empty())
            s += ' ';
        s += 's' + std::to_string(std::abs(letters_[t]));
        long long e = static_cast<long long>(u - t) * (letters_[t] > 0 ? 1 : -1);
        if (e != 1)
            s += '^' + std::to_string(e);
        t = u;
    }
    return s;
}

namespace {

void require_same_strands(const BraidWord& a, const BraidWord& b) {
    if (a.strands() != b.strands())
        throw ValidationError("braid strand-count mismatch");
}

} // namespace

BraidWord compose(const BraidWord& a, const BraidWord& b) {
    require_same_strands(a, b);
    std::vector<int> letters = a.letters();
    letters.insert(letters.end(), b.letters().begin(), b.letters().end());
    return BraidWord(a.strands(), std::move(letters));
}

BraidWord invert(const BraidWord& a) {
    std::vector<int> letters;
    letters.reserve(a.length());
    for (auto it = a.letters().rbegin(); it != a.letters().rend(); ++it)
        letters.push_back(-*it);
    return BraidWord(a.strands(), std::move(letters));
}

BraidWord conj(const BraidWord& a, const BraidWord& b) {
    return compose(compose(invert(b), a), b);
}

BraidWord star(const BraidWord& b, const BraidWord& a) {
    return compose(compose(b, a), invert(b));
}

BraidWord power(const BraidWord& a, int e) {
    const BraidWord base = e >= 0 ? a : invert(a);
    std::vector<int> letters;
    letters.reserve(base.length() * static_cast<std::size_t>(std::abs(e)));
    for (int t = 0; t < std::abs(e); ++t)
        letters.insert(letters.end(), base.letters().begin(), base.letters().end());
    return BraidWord(a.strands(), std::move(letters));
}

BraidWord free_reduce(const BraidWord& a) {
    std::vector<int> out;
    out.reserve(a.length());
    for (int v : a.letters()) {
        if (!out.empty() && out.back() == -v)
            out.pop_back();
        else
            out.push_back(v);
    }
    return BraidWord(a.strands(), std::move(out));
}

Permutation permutation_of(const BraidWord& a) {
    std::vector<int> img(static_cast<std::size_t>(a.strands()));
    std::iota(img.begin(), img.end(), 1);
    // img composed left to right: img[i] is where strand position i+1 ends up.
    // Applying the transposition (j, j+1) after the current permutation swaps
    // the two values j, j+1 wherever they occur.
    for (int v : a.letters()) {
        int j = std::abs(v);
        for (auto& x : img) {
            if (x == j)
                x = j + 1;
            else if (x == j + 1)
                x = j;
        }
    }
    return Permutation(std::move(img));
}

long long exponent_sum(const BraidWord& a) {
    long long s = 0;
    for (int v : a.letters())
        s += v > 0 ? 1 : -1;
    return s;
}

BraidWord full_twist(int d) {
    if (d < 1)
        throw ValidationError("full_twist needs d >= 1");
    std::vector<int> letters;
    letters.reserve(static_cast<std::size_t>(d) * static_cast<std::size_t>(d - 1));
    for (int t = 0; t < d; ++t)
        for (int i = d - 1; i >= 1; --i)
            letters.push_back(i);
    return BraidWord(d, std::move(letters));
}

BraidWord full_twist_marked(int k) {
    if (k < 1)
        throw ValidationError("full_twist_marked needs k >= 1");
    std::vector<int> letters;
    letters.reserve(static_cast<std::size_t>(k) * static_cast<std::size_t>(k + 1));
    for (int t = 0; t < k; ++t) {
        letters.push_back(k);
        for (int i = k; i >= 1; --i)
            letters.push_back(i);
    }
    return BraidWord(k + 1, std::move(letters));
}

BraidWord partial_garside(int i, int j, int d) {
    if (!(1 <= i && i <= j && j <= d))
        throw ValidationError("partial_garside needs 1 <= i <= j <= d");
    // Garside half-twist of B_m as s_1 (s_2 s_1) ... (s_{m-1} ... s_1), then
    // shifted up by i-1.
    std::vector<int> letters;
    int m = j - i + 1;
    for (int row = 1; row < m; ++row)
        for (int col = row; col >= 1; --col)
            letters.push_back(col + i - 1);
    return BraidWord(d, std::move(letters));
}

BraidWord shift_embed(const BraidWord& a, int l, int d2) {
    if (l < 0 || l + a.strands() > d2)
        throw ValidationError("shift_embed target does not fit: need l + strands <= d2");
    std::vector<int> letters;
    letters.reserve(a.length());
    for (int v : a.letters())
        letters.push_back(v > 0 ? v + l : v - l);
    return BraidWord(d2, std::move(letters));
}

BraidWord forget_strand(const BraidWord& a, int s) {
    if (s < 1 || s > a.strands() || a.strands() < 2)
        throw ValidationError("forget_strand position out of range");
    std::vector<int> letters;
    letters.reserve(a.length());
    int p = s;
    for (int v : a.letters()) {
        int j = std::abs(v);
        if (j == p)
            p = p + 1;
        else if (j == p - 1)
            p = p - 1;
        else if (j > p)
            letters.push_back(v > 0 ? j - 1 : -(j - 1));
        else
            letters.push_back(v);
    }
    return BraidWord(a.strands() - 1, std::move(letters));
}

BraidWord pseudo_coxeter(std::span<const BraidWord> xs) {
    if (xs.empty())
        throw ValidationError("pseudo_coxeter of an empty tuple");
    BraidWord acc = xs.back();
    for (std::size_t t = xs.size() - 1; t-- > 0;)
        acc = compose(acc, xs[t]);
    return acc;
}

namespace {

// Substitution image of the free letter v under one braid letter g.
void act_letter(int g, int v, FreeWord& out) {
    int j = std::abs(g);
    int i = std::abs(v);
    bool pos = v > 0;
    if (g > 0) {
        if (i == j) {
            out.push_reduce(pos ? j + 1 : -(j + 1));
        } else if (i == j + 1) {
            if (pos) {
                out.push_reduce(j + 1);
                out.push_reduce(j);
                out.push_reduce(-(j + 1));
            } else {
                out.push_reduce(j + 1);
                out.push_reduce(-j);
                out.push_reduce(-(j + 1));
            }
        } else {
            out.push_reduce(v);
        }
    } else {
        if (i == j + 1) {
            out.push_reduce(pos ? j : -j);
        } else if (i == j) {
            if (pos) {
                out.push_reduce(-j);
                out.push_reduce(j + 1);
                out.push_reduce(j);
            } else {
                out.push_reduce(-j);
                out.push_reduce(-(j + 1));
                out.push_reduce(j);
            }
        } else {
            out.push_reduce(v);
        }
    }
}

} // namespace

FreeWord artin_act(const BraidWord& b, const FreeWord& w, std::size_t cap) {
    if (b.strands() != w.rank())
        throw ValidationError("artin_act rank mismatch: strands != free rank");
    FreeWord cur = w;
    for (int g : b.letters()) {
        FreeWord next(w.rank());
        for (int v : cur.letters())
            act_letter(g, v, next);
        if (next.length() > cap)
            throw ResourceLimitError("artin_act free-word length cap exceeded");
        cur = std::move(next);
    }
    return cur;
}

std::vector<FreeWord> artin_images(const BraidWord& b, std::size_t cap) {
    std::vector<FreeWord> imgs;
    imgs.reserve(static_cast<std::size_t>(b.strands()));
    for (int i = 1; i <= b.strands(); ++i)
        imgs.push_back(artin_act(b, FreeWord::generator(b.strands(), i), cap));
    return imgs;
}

bool braids_equal(const BraidWord& a, const BraidWord& b, std::size_t cap) {
    require_same_strands(a, b);
    if (exponent_sum(a) != exponent_sum(b))
        return false;
    if (!(permutation_of(a) == permutation_of(b)))
        return false;
    return is_identity_braid(compose(a, invert(b)), cap);
}

bool is_identity_braid(const BraidWord& a, std::size_t cap) {
    for (int i = 1; i <= a.strands(); ++i) {
        FreeWord mu = FreeWord::generator(a.strands(), i);
        if (!(artin_act(a, mu, cap) == mu))
            return false;
    }
    return true;
}

MarkedBraidWord::MarkedBraidWord(int k, BraidWord word) : k_(k), word_(std::move(word)) {
    if (k < 1)
        throw ValidationError("marked braid needs k >= 1");
    if (word_.strands() != k + 1)
        throw ValidationError("marked braid must have k+1 strands");
    if (!permutation_of(word_).fixes(k + 1))
        throw ValidationError("marked braid permutation must fix strand k+1");
}

} // namespace braidmono
