#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <map>
#include <string>
#include <vector>

#include "braidmono/errors.hpp"
#include "braidmono/fixtures.hpp"
#include "braidmono/kummer.hpp"
#include "braidmono/zvk.hpp"

using namespace braidmono;

namespace {

BraidWord bw(int strands, std::vector<int> letters) {
    return BraidWord(strands, std::move(letters));
}

// Pipelines are pure; replay each at most once per test binary.
const PipelineReport& cached(const std::string& name) {
    static std::map<std::string, PipelineReport> cache;
    auto it = cache.find(name);
    if (it == cache.end())
        it = cache.emplace(name, run_pipeline(name)).first;
    return it->second;
}

} // namespace

TEST_CASE("pipeline registry lists twelve names") {
    const std::vector<std::string> names = pipeline_names();
    CHECK(names.size() == 12);
    CHECK(std::find(names.begin(), names.end(), "zariski-sextic") != names.end());
    CHECK(std::find(names.begin(), names.end(), "hesse") != names.end());
}

TEST_CASE("every registered pipeline replays without oracle failures") {
    for (const std::string& name : pipeline_names()) {
        CAPTURE(name);
        const PipelineReport& rep = cached(name);
        CHECK(rep.name == name);
        CHECK_FALSE(rep.notes.empty());
    }
}

TEST_CASE("unknown pipeline names are rejected") {
    CHECK_THROWS_AS(run_pipeline("nope"), ValidationError);
}

TEST_CASE("pipeline replay is deterministic") {
    const PipelineReport a = run_pipeline("smooth(n=2)");
    const PipelineReport b = run_pipeline("smooth(n=2)");
    CHECK(a.result.entries() == b.result.entries());
    CHECK(a.result.labels() == b.result.labels());
    CHECK(a.notes == b.notes);
    CHECK(a.soft_diffs == b.soft_diffs);
}

TEST_CASE("smooth pipelines flatten to exact generator packages") {
    for (int n = 2; n <= 5; ++n) {
        const PipelineReport& rep = cached("smooth(n=" + std::to_string(n) + ")");
        REQUIRE(rep.result.size() == n * (n - 1));
        CHECK(rep.result.strands() == n);
        for (int p = 0; p < n; ++p)
            for (int q = 1; q <= n - 1; ++q)
                CHECK(rep.result.entry(p * (n - 1) + q) == BraidWord::generator(n, q));
        CHECK(is_generic(rep.result));
        CHECK(rep.soft_diffs.empty());
    }
}

TEST_CASE("transcript divergences are confined to the documented spots") {
    CHECK(cached("zariski-sextic").soft_diffs.empty());
    CHECK(cached("nine-cusp").soft_diffs.empty());
    CHECK(cached("nodal-cubic").soft_diffs.empty());
    CHECK(cached("hesse").soft_diffs.empty());
    CHECK(cached("ceva9").soft_diffs.size() == 5);
    CHECK(cached("maclane").soft_diffs.size() == 4);
    CHECK(cached("dual-quartic").soft_diffs.size() == 1);
    CHECK(cached("cubic-tangents").soft_diffs.size() == 2);
}

TEST_CASE("nodal cubic tuple closes with a nontrivial braid") {
    const PipelineReport& rep = cached("nodal-cubic");
    REQUIRE(rep.result.size() == 3);
    CHECK(rep.result.strands() == 4);
    CHECK(rep.result.marked());
    CHECK_FALSE(is_generic(rep.result));
    CHECK(braids_equal(infinity_braid(rep.result),
                       conj(bw(4, {1, 2}), bw(4, {3, 3, 2}))));
}

TEST_CASE("ceva9 and maclane land on nine and eight strands") {
    const PipelineReport& nine = cached("ceva9");
    CHECK(nine.result.strands() == 9);
    CHECK(nine.result.size() == 12);
    CHECK(is_generic(nine.result));

    const PipelineReport& eight = cached("maclane");
    CHECK(eight.result.strands() == 8);
    CHECK(eight.result.size() == 12);
    CHECK(is_generic(eight.result));
}

TEST_CASE("hesse arrangement lands on twelve strands") {
    const PipelineReport& rep = cached("hesse");
    CHECK(rep.result.strands() == 12);
    REQUIRE(rep.result.size() == 21);
    CHECK(rep.result.label(21) == "vertical pencil");
}

TEST_CASE("dual quartic rows decompose the generic tuple") {
    const PipelineReport& rep = cached("dual-quartic");
    const std::vector<GenericFiberEntry> rows = dual_quartic_fiber_entries();
    REQUIRE(static_cast<int>(rows.size()) == rep.result.size());
    for (int i = 1; i <= rep.result.size(); ++i) {
        CAPTURE(i);
        const GenericFiberEntry& row = rows[i - 1];
        CHECK(braids_equal(star(row.conjugator, row.local_word), rep.result.entry(i)));
        REQUIRE(row.indices.size() == 1);
        for (int letter : row.local_word.letters())
            CHECK(std::abs(letter) == row.indices[0]);
    }
}

TEST_CASE("dual quartic fiber presentation collapses to three generators") {
    const PipelineReport& rep = cached("dual-quartic");
    const std::vector<GenericFiberEntry> rows = dual_quartic_fiber_entries();
    const GroupPresentation p = presentation_generic(rep.result, rows, false);
    CHECK(p.generators.size() == 6);
    REQUIRE(p.relators.size() == 14);
    // One relator per row; none is vacuous before simplification.
    for (const FreeWord& r : p.relators)
        CHECK_FALSE(r.is_identity());
    // The commutation of m4 with m5 and the two short definitions appear
    // verbatim among the raw relators.
    const auto& rel = p.relators;
    CHECK(std::find(rel.begin(), rel.end(), FreeWord(6, {-4, 5, 4, -5})) != rel.end());
    CHECK(std::find(rel.begin(), rel.end(), FreeWord(6, {2, -1, -2, 4})) != rel.end());
    CHECK(std::find(rel.begin(), rel.end(), FreeWord(6, {4, -3, -4, 6})) != rel.end());
    CHECK(abelianize(p) == std::vector<long long>{0});

    // Generator elimination bottoms out at three meridians. The bounded
    // move set keeps nine relator classes; the four long ones are
    // consequences that only relator composition would remove.
    const GroupPresentation q = tietze_simplify(p, 2000);
    CHECK(q.generators ==
          std::vector<std::string>{"m4", "m5", "m6"});
    CHECK(q.relators.size() == 9);
    CHECK(abelianize(q) == std::vector<long long>{0});
    const auto& srel = q.relators;
    CHECK(std::find(srel.begin(), srel.end(), FreeWord(3, {-1, 2, 1, -2})) !=
          srel.end());
    CHECK(std::find(srel.begin(), srel.end(),
                    FreeWord(3, {-1, 3, 1, 3, -1, -3})) != srel.end());
    CHECK(std::find(srel.begin(), srel.end(),
                    FreeWord(3, {-2, 3, 2, 3, -2, -3})) != srel.end());
    // Quotient counts are presentation invariants.
    CHECK(count_homs_to_small_symmetric(p, 3) ==
          count_homs_to_small_symmetric(q, 3));
}

TEST_CASE("cubic tangents affine group abelianizes to the integers") {
    const PipelineReport& rep = cached("cubic-tangents");
    REQUIRE(rep.result.size() == 18);
    // Affine complement of the curve alone: no kept vertical lines.
    const std::vector<int> kept;
    const GroupPresentation p = presentation_fully_horizontal(rep.result, kept);
    CHECK(abelianize(p) == std::vector<long long>{0});
}

TEST_CASE("cubic tangents transcript order fails the closing constraint") {
    const PipelineReport& rep = cached("cubic-tangents");
    std::vector<BraidWord> entries = rep.result.entries();
    std::reverse(entries.begin() + 1, entries.begin() + 5);
    const Factorization transcribed(6, false, entries);
    CHECK_FALSE(is_generic(transcribed));
    CHECK(is_generic(rep.result));
}
