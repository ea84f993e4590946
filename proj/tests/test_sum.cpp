#include <catch2/catch_amalgamated.hpp>

#include "segscan/oracle.hpp"
#include "segscan/sum.hpp"
#include "support.hpp"

using namespace segscan;
using segtest::Rng;

namespace {

PrefixIndex make_index(const std::vector<double>& values, const std::vector<double>& widths = {}) {
    std::vector<Element> es;
    for (std::size_t i = 0; i < values.size(); ++i)
        es.push_back({values[i], widths.empty() ? 1.0 : widths[i]});
    return build_prefix_index(es);
}

ScoredSegment oracle_best(const PrefixIndex& idx, LengthBounds b) {
    RunningBest best(ScoreMode::sum);
    for (const ScoredSegment& s : enumerate_feasible(idx, b)) best.consider(s);
    REQUIRE(best.engaged());
    return best.top();
}

}  // namespace

TEST_CASE("maximum sum segment on small fixtures") {
    SECTION("mixed signs") {
        const ScoredSegment s =
            max_sum_segment(make_index({2, -3, 4, -1, 2}), LengthBounds(2, 3));
        REQUIRE(s.seg == Segment{3, 5});
        REQUIRE(s.sum == 5.0);
    }
    SECTION("all negative still picks the least bad") {
        const ScoredSegment s = max_sum_segment(make_index({-1, -2, -3}), LengthBounds(2, 2));
        REQUIRE(s.seg == Segment{1, 2});
        REQUIRE(s.sum == -3.0);
    }
    SECTION("non-unit widths") {
        const ScoredSegment s =
            max_sum_segment(make_index({3, 1, -2}, {1, 2, 1}), LengthBounds(2, 3));
        REQUIRE(s.seg == Segment{1, 2});
        REQUIRE(s.sum == 4.0);
    }
    SECTION("no feasible segment") {
        REQUIRE_THROWS_AS(max_sum_segment(make_index({1.0}), LengthBounds(3, 4)),
                          NoFeasibleSegment);
    }
}

TEST_CASE("batch maximum over one batch of right ends") {
    const PrefixIndex idx = make_index({2, -3, 4, -1, 2});
    const LengthBounds b(2, 3);
    SECTION("single right end is the plain window maximum") {
        const ScoredSegment s = batch_max(idx, b, {5, 1});
        RunningBest expect(ScoreMode::sum);
        const auto w = idx.candidate_window(5, b);
        for (index_t t = w->first; t <= w->second; ++t) expect.consider(idx.score({t + 1, 5}));
        REQUIRE(s.seg == expect.top().seg);
    }
    SECTION("two right ends") {
        const ScoredSegment s = batch_max(idx, b, {4, 2});
        REQUIRE(s.seg == Segment{3, 5});
        REQUIRE(s.sum == 5.0);
    }
    SECTION("left group can carry the batch") {
        const PrefixIndex spike = make_index({5, -9, 1, 1, 5});
        const ScoredSegment s = batch_max(spike, LengthBounds(2, 4), {5, 1});
        REQUIRE(s.seg == Segment{3, 5});
        REQUIRE(s.sum == 7.0);
    }
}

TEST_CASE("group maxima combine to the window maximum") {
    Rng rng(5511);
    for (int round = 0; round < 150; ++round) {
        const index_t n = rng.nin(1, 150);
        const bool unit = rng.coin();
        const PrefixIndex idx =
            build_prefix_index(segtest::random_int_elements(rng, n, -10, 10, unit));
        const LengthBounds b =
            unit ? segtest::random_unit_bounds(rng, n) : segtest::random_weighted_bounds(rng, idx);
        for (const Batch& batch : batch_schedule(idx, b)) {
            const ScoredSegment got = batch_max(idx, b, batch);
            RunningBest expect(ScoreMode::sum);
            const auto bw = make_batch_windows(idx, b, batch);
            for (std::size_t r = 0; r < bw.win.size(); ++r) {
                const index_t j = bw.first_j + static_cast<index_t>(r);
                for (index_t t = bw.win[r].lo; t <= bw.win[r].hi; ++t)
                    expect.consider(idx.score({t + 1, j}));
            }
            REQUIRE(got.seg == expect.top().seg);
            REQUIRE(got.sum == expect.top().sum);
        }
    }
}

TEST_CASE("matches brute force exactly on integer inputs") {
    Rng rng(909090);
    for (int round = 0; round < 400; ++round) {
        const index_t n = rng.nin(1, 120);
        const bool unit = rng.coin();
        const PrefixIndex idx =
            build_prefix_index(segtest::random_int_elements(rng, n, -10, 10, unit));
        const LengthBounds b =
            unit ? segtest::random_unit_bounds(rng, n) : segtest::random_weighted_bounds(rng, idx);
        const ScoredSegment expect = oracle_best(idx, b);
        const ScoredSegment got = max_sum_segment(idx, b);
        REQUIRE(got.seg == expect.seg);
        REQUIRE(got.sum == expect.sum);
    }
}

TEST_CASE("tie-breaking is exact when most sums collide") {
    Rng rng(626262);
    for (int round = 0; round < 400; ++round) {
        const index_t n = rng.nin(1, 60);
        std::vector<Element> es;
        for (index_t i = 0; i < n; ++i)
            es.push_back({static_cast<double>(rng.iin(-1, 1)),
                          rng.coin() ? 1.0 : static_cast<double>(rng.iin(1, 3))});
        const PrefixIndex idx = build_prefix_index(es);
        const index_t i = rng.nin(1, n);
        const index_t j = rng.nin(i, n);
        const auto w = static_cast<index_t>(idx.cum_width(j) - idx.cum_width(i - 1));
        const auto total = static_cast<index_t>(idx.cum_width(n));
        const LengthBounds b(static_cast<double>(rng.nin(1, w)),
                             static_cast<double>(rng.nin(w, total)));
        const ScoredSegment expect = oracle_best(idx, b);
        const ScoredSegment got = max_sum_segment(idx, b);
        REQUIRE(got.seg == expect.seg);
        REQUIRE(got.sum == expect.sum);
    }
}

TEST_CASE("each prefix point feeds at most one heap per direction") {
    Rng rng(2);
    const index_t n = 20000;
    const PrefixIndex idx = build_prefix_index(segtest::random_int_elements(rng, n));
    Stats stats;
    max_sum_segment(idx, LengthBounds(16, 80), &stats);
    REQUIRE(stats.heap_inserts <= 2 * static_cast<std::uint64_t>(n));
}

TEST_CASE("streaming sum matches offline runs at every prefix") {
    Rng rng(417);
    for (int round = 0; round < 25; ++round) {
        const index_t n = rng.nin(1, 60);
        const auto es = segtest::random_int_elements(rng, n, -10, 10, rng.coin());
        const LengthBounds b(1 + rng.nin(0, 2), 1 + rng.nin(2, 6));
        SumScanner scan(b);
        PrefixIndex prefix;
        for (index_t i = 0; i < n; ++i) {
            scan.push(es[static_cast<std::size_t>(i)]);
            prefix.append(es[static_cast<std::size_t>(i)]);
            const auto streamed = scan.try_result();
            RunningBest offline(ScoreMode::sum);
            for (const ScoredSegment& s : enumerate_feasible(prefix, b)) offline.consider(s);
            REQUIRE(streamed.has_value() == offline.engaged());
            if (streamed) {
                REQUIRE(streamed->seg == offline.top().seg);
                REQUIRE(streamed->sum == offline.top().sum);
            }
        }
    }
}
