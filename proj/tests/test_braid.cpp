#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "braidmono/braid.hpp"
#include "braidmono/errors.hpp"

using namespace braidmono;

namespace {

BraidWord bw(int strands, std::vector<int> letters) {
    return BraidWord(strands, std::move(letters));
}

// Random word avoiding immediate cancellations so lengths are honest.
BraidWord random_word(std::mt19937_64& rng, int strands, int len) {
    std::uniform_int_distribution<int> gen(1, strands - 1);
    std::uniform_int_distribution<int> sgn(0, 1);
    std::vector<int> letters;
    while (static_cast<int>(letters.size()) < len) {
        int v = gen(rng) * (sgn(rng) ? 1 : -1);
        if (!letters.empty() && letters.back() == -v)
            continue;
        letters.push_back(v);
    }
    return BraidWord(strands, std::move(letters));
}

} // namespace

TEST_CASE("free words reduce and invert") {
    FreeWord w(3, {1, 2, -2, -1, 3});
    CHECK(w.letters() == std::vector<int>{3});
    CHECK(FreeWord(3, {1, -1}).is_identity());
    FreeWord u(3, {1, 2, 3});
    CHECK(u.inverse().letters() == std::vector<int>{-3, -2, -1});
    CHECK((u * u.inverse()).is_identity());
    CHECK_THROWS_AS(FreeWord(2, {3}), ValidationError);
    CHECK_THROWS_AS(FreeWord(2, {0}), ValidationError);
}

TEST_CASE("braid word construction and text form") {
    CHECK_THROWS_AS(bw(3, {3}), ValidationError);
    CHECK_THROWS_AS(bw(1, {1}), ValidationError);
    CHECK(BraidWord::identity(4).empty());
    CHECK(bw(3, {1, 1, 1, 1, -2}).str() == "s1^4 s2^-1");
    CHECK(BraidWord::identity(2).str() == "1");
}

TEST_CASE("compose, invert, conj, star are definition unfolding") {
    BraidWord s1 = BraidWord::generator(3, 1);
    BraidWord s2 = BraidWord::generator(3, 2);
    CHECK(conj(s1, s2).letters() == std::vector<int>{-2, 1, 2});
    CHECK(star(s2, s1).letters() == std::vector<int>{2, 1, -2});
    CHECK(conj(s1, BraidWord::identity(3)) == s1);
    CHECK(invert(bw(3, {1, -2})).letters() == std::vector<int>{2, -1});
    CHECK_THROWS_AS(compose(s1, BraidWord::generator(4, 1)), ValidationError);
    CHECK(power(s1, 3).letters() == std::vector<int>{1, 1, 1});
    CHECK(power(s1, -2).letters() == std::vector<int>{-1, -1});
    CHECK(power(s1, 0).empty());
    CHECK(free_reduce(bw(3, {1, 2, -2, -1, 1})).letters() == std::vector<int>{1});
}

TEST_CASE("permutation and exponent sum") {
    Permutation p = permutation_of(BraidWord::generator(3, 1));
    CHECK(p(1) == 2);
    CHECK(p(2) == 1);
    CHECK(p(3) == 3);
    CHECK(permutation_of(bw(5, {3, 3})).is_identity());
    CHECK(exponent_sum(full_twist(6)) == 30);
    CHECK(exponent_sum(bw(3, {1, -2, -2})) == -1);

    // Homomorphisms: permutation and exponent sum respect composition.
    std::mt19937_64 rng(11);
    for (int t = 0; t < 20; ++t) {
        BraidWord a = random_word(rng, 5, 12);
        BraidWord b = random_word(rng, 5, 12);
        CHECK(permutation_of(compose(a, b)) == permutation_of(a).then(permutation_of(b)));
        CHECK(exponent_sum(compose(a, b)) == exponent_sum(a) + exponent_sum(b));
        // Conjugation invariance.
        CHECK(exponent_sum(conj(a, b)) == exponent_sum(a));
        BraidWord c = conj(a, b);
        Permutation pa = permutation_of(a);
        Permutation pb = permutation_of(b);
        // Conjugate permutations have the same cycle type; spot-check fixed-point count.
        int fa = 0, fc = 0;
        Permutation pc = permutation_of(c);
        for (int i = 1; i <= 5; ++i) {
            fa += pa.fixes(i);
            fc += pc.fixes(i);
        }
        CHECK(fa == fc);
    }
}

TEST_CASE("artin action base cases") {
    FreeWord mu1 = FreeWord::generator(3, 1);
    CHECK(artin_act(BraidWord::generator(3, 1), mu1) == FreeWord::generator(3, 2));
    FreeWord w(3, {1, -3, 2});
    CHECK(artin_act(BraidWord::identity(3), w) == w);
    CHECK(artin_act(bw(3, {1, 1}), mu1) == FreeWord(3, {2, 1, -2}));
    CHECK_THROWS_AS(artin_act(BraidWord::generator(4, 1), mu1), ValidationError);

    // Inverse letter is the inverse substitution.
    FreeWord mu2 = FreeWord::generator(3, 2);
    CHECK(artin_act(bw(3, {-1}), mu2) == mu1);
    CHECK(artin_act(bw(3, {-1}), mu1) == FreeWord(3, {-1, 2, 1}));
    CHECK(artin_act(bw(3, {1, -1}), w) == w);
}

TEST_CASE("artin action respects the braid relations") {
    std::mt19937_64 rng(12);
    for (int d = 3; d <= 5; ++d) {
        std::uniform_int_distribution<int> gen(1, d);
        std::uniform_int_distribution<int> sgn(0, 1);
        for (int t = 0; t < 10; ++t) {
            std::vector<int> letters;
            for (int u = 0; u < 6; ++u)
                letters.push_back(gen(rng) * (sgn(rng) ? 1 : -1));
            FreeWord w(d, letters);
            for (int i = 1; i + 1 <= d - 1; ++i) {
                BraidWord lhs = bw(d, {i, i + 1, i});
                BraidWord rhs = bw(d, {i + 1, i, i + 1});
                CHECK(artin_act(lhs, w) == artin_act(rhs, w));
            }
            for (int i = 1; i <= d - 1; ++i)
                for (int j = i + 2; j <= d - 1; ++j)
                    CHECK(artin_act(bw(d, {i, j}), w) == artin_act(bw(d, {j, i}), w));
        }
    }
}

TEST_CASE("artin action fixes the boundary word") {
    std::mt19937_64 rng(13);
    for (int d = 2; d <= 6; ++d) {
        // (u_d ... u_1)^-1 = u_1^-1 u_2^-1 ... u_d^-1
        std::vector<int> letters;
        for (int i = 1; i <= d; ++i)
            letters.push_back(-i);
        FreeWord mu_inf(d, letters);
        for (int t = 0; t < 10; ++t) {
            BraidWord b = random_word(rng, d, 15);
            CHECK(artin_act(b, mu_inf) == mu_inf);
        }
    }
}

TEST_CASE("equality oracle on classic pairs") {
    CHECK(braids_equal(bw(3, {1, 2, 1}), bw(3, {2, 1, 2})));
    CHECK(braids_equal(bw(4, {1, 3}), bw(4, {3, 1})));
    CHECK_FALSE(braids_equal(bw(2, {1}), bw(2, {-1})));
    CHECK(is_identity_braid(BraidWord::identity(5)));
    CHECK_FALSE(is_identity_braid(bw(3, {1})));
    CHECK_THROWS_AS(braids_equal(bw(2, {1}), bw(3, {1})), ValidationError);
}

TEST_CASE("equality oracle is congruent with composition") {
    std::mt19937_64 rng(14);
    for (int t = 0; t < 10; ++t) {
        BraidWord a = random_word(rng, 4, 10);
        BraidWord b = random_word(rng, 4, 10);
        BraidWord c = random_word(rng, 4, 10);
        // a ~ conj-free rewriting of itself.
        BraidWord a2 = compose(a, compose(b, invert(b)));
        CHECK(braids_equal(a, a2));
        CHECK(braids_equal(compose(a, c), compose(a2, c)));
        CHECK(braids_equal(compose(c, a), compose(c, a2)));
        // Symmetry and reflexivity.
        CHECK(braids_equal(a, a));
        CHECK(braids_equal(a2, a) == braids_equal(a, a2));
    }
}

TEST_CASE("full twist is central and matches hand forms") {
    CHECK(full_twist(2).letters() == std::vector<int>{1, 1});
    CHECK(full_twist(1).empty());
    CHECK(braids_equal(full_twist(3), bw(3, {2, 2, 1, 2, 2, 1})));
    for (int d = 2; d <= 5; ++d)
        for (int i = 1; i <= d - 1; ++i)
            CHECK(braids_equal(compose(full_twist(d), BraidWord::generator(d, i)),
                               compose(BraidWord::generator(d, i), full_twist(d))));
}

TEST_CASE("marked full twist is the same central element") {
    for (int k = 1; k <= 5; ++k) {
        BraidWord m = full_twist_marked(k);
        CHECK(m.strands() == k + 1);
        CHECK(braids_equal(m, full_twist(k + 1)));
    }
    CHECK(full_twist_marked(2).letters() == std::vector<int>{2, 2, 1, 2, 2, 1});
}

TEST_CASE("partial garside elements") {
    for (int d = 2; d <= 5; ++d)
        CHECK(braids_equal(power(partial_garside(1, d, d), 2), full_twist(d)));
    CHECK(partial_garside(2, 2, 5).empty());
    CHECK(exponent_sum(power(partial_garside(5, 7, 9), 2)) == 6);
    CHECK(partial_garside(5, 7, 9).letters() == std::vector<int>{5, 6, 5});
    CHECK_THROWS_AS(partial_garside(3, 2, 5), ValidationError);
    // Half-twist squared on a band is the shifted full twist of the band.
    CHECK(braids_equal(power(partial_garside(3, 5, 6), 2), shift_embed(full_twist(3), 2, 6)));
}

TEST_CASE("shift embed") {
    BraidWord s = shift_embed(BraidWord::generator(2, 1), 2, 5);
    CHECK(s == BraidWord::generator(5, 3));
    CHECK_THROWS_AS(shift_embed(BraidWord::generator(2, 1), 4, 5), ValidationError);
    CHECK(shift_embed(bw(3, {1, -2}), 1, 4).letters() == std::vector<int>{2, -3});
}

TEST_CASE("forget strand position rule") {
    CHECK(forget_strand(BraidWord::identity(3), 2) == BraidWord::identity(2));
    CHECK(forget_strand(bw(3, {2, 2, 1}), 3).letters() == std::vector<int>{1});
    CHECK_THROWS_AS(forget_strand(bw(3, {1}), 4), ValidationError);

    // On stabilizer words the deletion is a homomorphism.
    std::mt19937_64 rng(15);
    int d = 6, s = 4;
    auto random_stabilizer = [&](int len) {
        while (true) {
            BraidWord cand = random_word(rng, d, len);
            if (permutation_of(cand).fixes(s))
                return cand;
        }
    };
    for (int t = 0; t < 10; ++t) {
        BraidWord a = random_stabilizer(6);
        BraidWord b = random_stabilizer(6);
        CHECK(braids_equal(forget_strand(compose(a, b), s),
                           compose(forget_strand(a, s), forget_strand(b, s))));
    }
}

TEST_CASE("pseudo coxeter element") {
    BraidWord s1 = BraidWord::generator(3, 1);
    BraidWord s2 = BraidWord::generator(3, 2);
    std::vector<BraidWord> xs{s1, s2};
    CHECK(pseudo_coxeter(xs).letters() == std::vector<int>{2, 1});
    std::vector<BraidWord> one{bw(3, {1, -2})};
    CHECK(pseudo_coxeter(one) == bw(3, {1, -2}));
    // Smooth-curve list for n = 3: three packages of (s1, s2).
    std::vector<BraidWord> smooth{s1, s2, s1, s2, s1, s2};
    CHECK(braids_equal(pseudo_coxeter(smooth), full_twist(3)));
}

TEST_CASE("marked braid membership is the permutation condition") {
    CHECK_NOTHROW(MarkedBraidWord(2, bw(3, {1})));
    CHECK_NOTHROW(MarkedBraidWord(2, bw(3, {2, 2})));
    CHECK_THROWS_AS(MarkedBraidWord(2, bw(3, {2})), ValidationError);
    CHECK_THROWS_AS(MarkedBraidWord(2, bw(4, {1})), ValidationError);
}

TEST_CASE("length cap raises a resource error") {
    // Powers of s1 s2^-1 in B_3 grow free-word images exponentially.
    BraidWord pump = power(bw(3, {1, -2}), 40);
    CHECK_THROWS_AS(artin_act(pump, FreeWord::generator(3, 1), 5000), ResourceLimitError);
    CHECK_NOTHROW(artin_act(bw(3, {1, -2}), FreeWord::generator(3, 1), 5000));
}
