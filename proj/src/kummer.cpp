#include "braidmono/kummer.hpp"

#include <cstdlib>
#include <string>

#include "braidmono/errors.hpp"

namespace braidmono {

namespace {

int flat_circular(int n, int i, int j) {
    return (i - 1) * n + j;
}

int flat_radial(int k, int i, int j) {
    return (j - 1) * k + i;
}

// Ascending run of positive flat letters a..b (empty if a > b).
void push_run_up(std::vector<int>& out, int a, int b) {
    for (int v = a; v <= b; ++v)
        out.push_back(v);
}

// Ascending run of inverse flat letters a..b.
void push_run_up_inv(std::vector<int>& out, int a, int b) {
    for (int v = a; v <= b; ++v)
        out.push_back(-v);
}

// Descending run of positive flat letters b..a.
void push_run_down(std::vector<int>& out, int a, int b) {
    for (int v = b; v >= a; --v)
        out.push_back(v);
}

BraidWord word_on(int strands, std::vector<int> letters) {
    return BraidWord(strands, std::move(letters));
}

} // namespace

// alpha_{i,j} = (P_{i+1,j}^{k,n} Pbar_{i,j}^{k,n}) * s_{k,n}: the half-twist
// pulled across everything above it in the left-lexicographic chain.
BraidWord circular_half_twist(int n, int k, int i, int j) {
    int d = n * k + 1;
    int top = flat_circular(n, k, n);
    std::vector<int> letters;
    push_run_up(letters, flat_circular(n, i + 1, j), top);
    push_run_up_inv(letters, flat_circular(n, i, j), top);
    BraidWord body = word_on(d, std::move(letters));
    return star(body, BraidWord::generator(d, top));
}

// alpha_{i,j} = (P_{i+1,j}^{k,n-1} s_{k,n}^2 M_{split+1}^{k,n-1} Pbar_{i,j}^{split}) * s_split.
BraidWord circular_half_twist_mid(int n, int k, int i, int j, int split_flat) {
    int d = n * k + 1;
    int top = flat_circular(n, k, n);
    std::vector<int> letters;
    push_run_up(letters, flat_circular(n, i + 1, j), top - 1);
    letters.push_back(top);
    letters.push_back(top);
    push_run_down(letters, split_flat + 1, top - 1);
    push_run_up_inv(letters, flat_circular(n, i, j), split_flat);
    BraidWord body = word_on(d, std::move(letters));
    return star(body, BraidWord::generator(d, split_flat));
}

// alpha_{i,j} = (P_{i+1,j}^{k,n-1} s_{k,n}^2 M_{i,j}^{k,n-1}) * s_{i,j}.
BraidWord circular_half_twist_low(int n, int k, int i, int j) {
    int d = n * k + 1;
    int top = flat_circular(n, k, n);
    std::vector<int> letters;
    push_run_up(letters, flat_circular(n, i + 1, j), top - 1);
    letters.push_back(top);
    letters.push_back(top);
    push_run_down(letters, flat_circular(n, i, j), top - 1);
    BraidWord body = word_on(d, std::move(letters));
    return star(body, BraidWord::generator(d, flat_circular(n, i, j)));
}

LiftSpec::LiftSpec(int n, int k, LiftSystem system)
    : n_(n), k_(k), system_(system), sk2_image_(BraidWord::identity(1)) {
    if (n < 1 || k < 1)
        throw ValidationError("lift spec needs n >= 1 and k >= 1");
    if (system == LiftSystem::straight2 && n != 2)
        throw ValidationError("the straight-line system requires n = 2");

    int d = target_strands();
    gen_images_.reserve(static_cast<std::size_t>(k_ > 0 ? k_ - 1 : 0));
    switch (system_) {
    case LiftSystem::circular: {
        for (int i = 1; i <= k_ - 1; ++i) {
            BraidWord img = BraidWord::identity(d);
            for (int j = 1; j <= n_; ++j)
                img = compose(img, circular_half_twist(n_, k_, i, j));
            gen_images_.push_back(img);
        }
        // s_k^2 -> s_{k,n}^2 s_{k,n-1} ... s_{k,1}
        std::vector<int> letters;
        int top = flat_circular(n_, k_, n_);
        letters.push_back(top);
        push_run_down(letters, flat_circular(n_, k_, 1), top);
        sk2_image_ = word_on(d, std::move(letters));
        break;
    }
    case LiftSystem::radial: {
        for (int i = 1; i <= k_ - 1; ++i) {
            std::vector<int> letters;
            for (int j = 1; j <= n_; ++j)
                letters.push_back(flat_radial(k_, i, j));
            gen_images_.push_back(word_on(d, std::move(letters)));
        }
        // s_k^2 -> r_{k,n}^2 (descending run nk-1..k) b_2^-1 ... b_n^-1
        std::vector<int> letters;
        int top = flat_radial(k_, k_, n_);
        letters.push_back(top);
        letters.push_back(top);
        push_run_down(letters, flat_radial(k_, k_, 1), top - 1);
        for (int j = 2; j <= n_; ++j)
            push_run_up_inv(letters, flat_radial(k_, 1, j), flat_radial(k_, k_ - 1, j));
        sk2_image_ = word_on(d, std::move(letters));
        break;
    }
    case LiftSystem::straight2: {
        for (int i = 1; i <= k_ - 1; ++i)
            gen_images_.push_back(word_on(d, {i, 2 * k_ - i + 1}));
        sk2_image_ = word_on(d, {k_ + 1, k_, k_ + 1});
        break;
    }
    }
}

int LiftSpec::fixed_strand() const {
    return system_ == LiftSystem::straight2 ? k_ + 1 : n_ * k_ + 1;
}

const BraidWord& LiftSpec::image_of_generator(int i) const {
    if (i < 1 || i > k_ - 1)
        throw ValidationError("generator index out of range 1..k-1");
    return gen_images_[static_cast<std::size_t>(i) - 1];
}

const BraidWord& LiftSpec::image_of_sk_squared() const {
    return sk2_image_;
}

BraidWord lift_braid(const LiftSpec& spec, const BraidWord& b) {
    if (b.strands() != spec.k() + 1)
        throw ValidationError("lift input must live on k+1 strands");
    if (!permutation_of(b).fixes(spec.k() + 1))
        throw ValidationError("lift input must fix the marked strand k+1");
    if (spec.n() == 1)
        return b;

    const BraidWord reduced = free_reduce(b);
    const int k = spec.k();
    const std::vector<int>& in = reduced.letters();
    std::vector<int> out;
    const BraidWord sk2_inv = invert(spec.image_of_sk_squared());
    for (std::size_t t = 0; t < in.size();) {
        int v = in[t];
        if (std::abs(v) != k) {
            const BraidWord& img =
                v > 0 ? spec.image_of_generator(v) : invert(spec.image_of_generator(-v));
            out.insert(out.end(), img.letters().begin(), img.letters().end());
            ++t;
            continue;
        }
        std::size_t u = t;
        while (u < in.size() && in[u] == v)
            ++u;
        std::size_t run = u - t;
        if (run % 2 != 0)
            throw ValidationError("lift input has an odd power of s_k; not in the even "
                                  "subgroup the cover morphism is defined on");
        const BraidWord& img = v > 0 ? spec.image_of_sk_squared() : sk2_inv;
        for (std::size_t c = 0; c < run / 2; ++c)
            out.insert(out.end(), img.letters().begin(), img.letters().end());
        t = u;
    }
    return BraidWord(spec.target_strands(), std::move(out));
}

BraidWord lift_braid(const LiftSpec& spec, const MarkedBraidWord& b) {
    if (b.k() != spec.k())
        throw ValidationError("lift input k does not match the spec");
    return lift_braid(spec, b.word());
}

BraidWord lift_braid_forget(const LiftSpec& spec, const BraidWord& b) {
    return forget_strand(lift_braid(spec, b), spec.fixed_strand());
}

Factorization lift_factorization(const LiftSpec& spec, const Factorization& T, bool forget) {
    if (T.strands() != spec.k() + 1)
        throw ValidationError("lift input factorization must live on k+1 strands");
    if (!T.marked())
        throw ValidationError("lift input factorization must be marked");
    if (T.size() < 1)
        throw ValidationError("lift input factorization needs at least the x=0 entry");

    if (spec.n() == 1)
        return forget ? forget_strand_all(T, spec.fixed_strand()) : T;

    const int r = T.size() - 1;
    const BraidWord lifted_last = lift_braid(spec, T.entry(T.size()));
    std::vector<BraidWord> entries;
    std::vector<std::string> labels;
    entries.reserve(static_cast<std::size_t>(spec.n()) * r + 1);
    BraidWord conjugator = BraidWord::identity(spec.target_strands());
    for (int j = 0; j < spec.n(); ++j) {
        for (int i = 1; i <= r; ++i) {
            BraidWord lifted = lift_braid(spec, T.entry(i));
            entries.push_back(j == 0 ? lifted : free_reduce(conj(lifted, conjugator)));
            std::string base = T.label(i);
            labels.push_back(base.empty() ? "block " + std::to_string(j)
                                          : base + " (block " + std::to_string(j) + ")");
        }
        conjugator = compose(conjugator, lifted_last);
    }
    entries.push_back(power(lifted_last, spec.n()));
    labels.push_back("x=0 lifted");

    bool marked = spec.system() != LiftSystem::straight2;
    Factorization out(spec.target_strands(), marked, std::move(entries), std::move(labels));
    return forget ? forget_strand_all(out, spec.fixed_strand()) : out;
}

BraidWord infinity_braid(const Factorization& f) {
    BraidWord twist =
        f.marked() ? full_twist_marked(f.strands() - 1) : full_twist(f.strands());
    return compose(twist, invert(pseudo_coxeter(f)));
}

BraidWord kummer_infinity_braid(const LiftSpec& spec, const Factorization& T) {
    if (T.strands() != spec.k() + 1 || !T.marked())
        throw ValidationError("kummer infinity braid needs a marked factorization on k+1 strands");
    BraidWord base = compose(power(full_twist_marked(spec.k()), spec.n()),
                             power(invert(pseudo_coxeter(T)), spec.n()));
    return lift_braid(spec, base);
}

namespace {

// Radial generator (i,j) written in circular flat letters.
BraidWord radial_generator_in_circular(int n, int k, int i, int j) {
    int d = n * k + 1;
    if (i < k)
        return circular_half_twist(n, k, i, j);
    if (j == n)
        return BraidWord::generator(d, flat_circular(n, k, n));
    // r_{k,j} = b_{j+1}^-1 s_{k,j} b_{j+1} with b_{j+1} = r_{k-1,j+1} ... r_{1,j+1}.
    BraidWord beta = BraidWord::identity(d);
    for (int t = k - 1; t >= 1; --t)
        beta = compose(beta, circular_half_twist(n, k, t, j + 1));
    return conj(BraidWord::generator(d, flat_circular(n, k, j)), beta);
}

// Straight-line generator (index 1..2k) written in radial flat letters (n=2).
BraidWord straight_generator_in_radial(int k, int m) {
    int d = 2 * k + 1;
    auto rho = [&](int i, int j) { return BraidWord::generator(d, flat_radial(k, i, j)); };
    if (m <= k - 1)
        return rho(m, 1);
    if (m >= k + 2)
        return rho(2 * k + 1 - m, 2);
    if (m == k + 1)
        return rho(k, 2);
    // m == k: the arc through 0, pulled across the second ray.
    BraidWord beta2 = BraidWord::identity(d);
    for (int t = k - 1; t >= 1; --t)
        beta2 = compose(beta2, rho(t, 2));
    return star(compose(rho(k, 2), beta2), rho(k, 1));
}

BraidWord substitute_letters(const BraidWord& w, int strands,
                             const std::vector<BraidWord>& images) {
    std::vector<int> out;
    for (int v : w.letters()) {
        const BraidWord& img = images[static_cast<std::size_t>(std::abs(v)) - 1];
        if (v > 0) {
            out.insert(out.end(), img.letters().begin(), img.letters().end());
        } else {
            BraidWord inv = invert(img);
            out.insert(out.end(), inv.letters().begin(), inv.letters().end());
        }
    }
    return BraidWord(strands, std::move(out));
}

} // namespace

BraidWord to_circular_letters(const LiftSpec& spec, const BraidWord& w) {
    int d = spec.target_strands();
    if (w.strands() != d)
        throw ValidationError("conversion input must live on nk+1 strands");
    if (spec.system() == LiftSystem::circular || spec.n() == 1)
        return w;
    int n = spec.n();
    int k = spec.k();
    if (spec.system() == LiftSystem::radial) {
        std::vector<BraidWord> images;
        images.reserve(static_cast<std::size_t>(d) - 1);
        for (int p = 1; p <= d - 1; ++p) {
            int i = (p - 1) % k + 1;
            int j = (p - 1) / k + 1;
            images.push_back(radial_generator_in_circular(n, k, i, j));
        }
        return substitute_letters(w, d, images);
    }
    // straight2: rewrite into radial letters, then recurse.
    std::vector<BraidWord> images;
    images.reserve(static_cast<std::size_t>(d) - 1);
    for (int m = 1; m <= d - 1; ++m)
        images.push_back(straight_generator_in_radial(k, m));
    BraidWord in_radial = substitute_letters(w, d, images);
    return to_circular_letters(LiftSpec(n, k, LiftSystem::radial), in_radial);
}

} // namespace braidmono
