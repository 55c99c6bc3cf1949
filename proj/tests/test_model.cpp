#include "doctest.h"

#include "bcp/fixed.hpp"
#include "bcp/greedy.hpp"
#include "bcp/model.hpp"
#include "helpers.hpp"

using namespace bcp;
using helpers::inst_of;

TEST_CASE("parse_height reads exact decimals") {
    CHECK(parse_height("0.5") == kHalfUnit);
    CHECK(parse_height("1") == kUnit);
    CHECK(parse_height("1.0") == kUnit);
    CHECK(parse_height(".5") == kHalfUnit);
    CHECK(parse_height("2.25") == 2'250'000'000LL);
    CHECK(parse_height("0.333333333") == 333'333'333);
    CHECK(parse_height("0.000000001") == 1);
}

TEST_CASE("parse_height rounds the tenth fractional digit half-up") {
    CHECK(parse_height("0.3333333333") == 333'333'333);   // tail 3: down
    CHECK(parse_height("0.3333333335") == 333'333'334);   // tail 5: up
    CHECK(parse_height("0.0000000005") == 1);
    CHECK(parse_height("0.00000000049999") == 0);         // only the 10th digit decides
    CHECK(parse_height("0.9999999995") == kUnit);
}

TEST_CASE("parse_height rejects malformed text") {
    CHECK_THROWS_AS(parse_height(""), ValidationError);
    CHECK_THROWS_AS(parse_height("abc"), ValidationError);
    CHECK_THROWS_AS(parse_height("1.2.3"), ValidationError);
    CHECK_THROWS_AS(parse_height("0..5"), ValidationError);
    CHECK_THROWS_AS(parse_height("1e3"), ValidationError);
    CHECK_THROWS_AS(parse_height("."), ValidationError);
    CHECK_THROWS_AS(parse_height("99999999999"), ValidationError);
}

TEST_CASE("format_height prints trimmed decimals and round-trips") {
    CHECK(format_height(kHalfUnit) == "0.5");
    CHECK(format_height(kUnit) == "1");
    CHECK(format_height(1) == "0.000000001");
    CHECK(format_height(1'500'000'000LL) == "1.5");
    CHECK(format_height(0) == "0");
    for (Height v : {Height{1}, Height{999'999'999}, kHalfUnit, kUnit, Height{123'456'789}})
        CHECK(parse_height(format_height(v)) == v);
}

TEST_CASE("height_from_double rounds to the nearest billionth") {
    CHECK(height_from_double(0.1) == 100'000'000);
    CHECK(height_from_double(0.5) == kHalfUnit);
    CHECK(height_from_double(1.0) == kUnit);
    CHECK(height_from_double(1.0 / 3.0) == 333'333'333);
    CHECK_THROWS_AS(height_from_double(1.0 / 0.0), ValidationError);
}

TEST_CASE("normalize divides by the strip height half-up") {
    Instance raw;
    raw.strip_height = 2 * kUnit;
    raw.charts.push_back({0, {height_from_double(1.2), height_from_double(0.8)}});
    Instance norm = normalize(raw);
    CHECK(norm.charts[0].heights[0] == height_from_double(0.6));
    CHECK(norm.charts[0].heights[1] == height_from_double(0.4));
    CHECK(norm.strip_height == 2 * kUnit);

    Instance thirds;
    thirds.strip_height = 3 * kUnit;
    thirds.charts.push_back({0, {kUnit, 2 * kUnit}});
    Instance nt = normalize(thirds);
    CHECK(nt.charts[0].heights[0] == 333'333'333);
    CHECK(nt.charts[0].heights[1] == 666'666'667);
}

TEST_CASE("normalize rejects out-of-range heights") {
    Instance raw;
    raw.charts.push_back({0, {0}});
    CHECK_THROWS_WITH_AS(normalize(raw), "chart 0: non-positive height 0", ValidationError);

    Instance tall;
    tall.charts.push_back({0, {kHalfUnit}});
    tall.charts.push_back({1, {kUnit + 1}});
    CHECK_THROWS_WITH_AS(normalize(tall), "chart 1: height 1.000000001 exceeds strip height",
                         ValidationError);

    Instance empty;
    CHECK_THROWS_AS(normalize(empty), ValidationError);
    Instance bare;
    bare.charts.push_back({0, {}});
    CHECK_THROWS_AS(normalize(bare), ValidationError);
}

TEST_CASE("evaluate reports length, density, and violations") {
    Instance pair = inst_of({{0.9, 0.1}, {0.1, 0.9}});
    Packing both;
    both.start_cell = {{0, 1}, {1, 1}};
    PackingReport r = evaluate(pair, both);
    CHECK(r.feasible);
    CHECK(r.length == 2);
    CHECK(r.cell_loads.at(1) == kUnit);
    CHECK(r.cell_loads.at(2) == kUnit);
    CHECK(r.density == doctest::Approx(1.0));

    Instance lone = inst_of({{1.0, 0.1}});
    Packing at3;
    at3.start_cell = {{0, 3}};
    PackingReport r3 = evaluate(lone, at3);
    CHECK(r3.feasible);
    CHECK(r3.length == 2);  // occupied cells, not the max index

    Instance clash = inst_of({{0.6, 0.3}, {0.6, 0.3}});
    Packing stacked;
    stacked.start_cell = {{0, 1}, {1, 1}};
    PackingReport rc = evaluate(clash, stacked);
    CHECK_FALSE(rc.feasible);
    REQUIRE(rc.violations.size() == 1);
    CHECK(rc.violations[0].first == 1);
    CHECK(rc.violations[0].second == 1'200'000'000LL);
}

TEST_CASE("evaluate requires exact coverage") {
    Instance pair = inst_of({{0.9, 0.1}, {0.1, 0.9}});
    Packing missing;
    missing.start_cell = {{0, 1}};
    CHECK_THROWS_AS(evaluate(pair, missing), ValidationError);
    Packing wrong;
    wrong.start_cell = {{0, 1}, {7, 1}};
    CHECK_THROWS_AS(evaluate(pair, wrong), ValidationError);
}

TEST_CASE("left_justify closes gaps and pulls the packing to cell 1") {
    Instance two = inst_of({{0.9, 0.9}, {0.9, 0.9}});
    Packing gapped;
    gapped.start_cell = {{0, 1}, {1, 5}};
    Packing tight = left_justify(two, gapped);
    CHECK(tight.at(0) == 1);
    CHECK(tight.at(1) == 3);
    CHECK(occupied_count(two, tight) == 4);

    Instance lone = inst_of({{0.5, 0.5}});
    Packing off;
    off.start_cell = {{0, 4}};
    CHECK(left_justify(lone, off).at(0) == 1);
}

TEST_CASE("left_justify keeps feasibility and the occupied count") {
    // shift a justified packing right and check it comes back unchanged
    Instance inst = inst_of({{0.6, 0.3}, {0.6, 0.3}, {0.6, 0.3}});
    Packing base = pack_g(inst, input_order(inst));
    Packing shifted;
    for (const auto& [id, s] : base.start_cell) shifted.start_cell[id] = s + 3;
    Packing back = left_justify(inst, shifted);
    CHECK(back.start_cell == base.start_cell);

    Instance clash = inst_of({{0.6, 0.3}, {0.6, 0.3}});
    Packing bad;
    bad.start_cell = {{0, 1}, {1, 1}};
    CHECK_THROWS_AS(left_justify(clash, bad), ValidationError);
}

TEST_CASE("mirror_packing flips start cells within a frame") {
    Instance lone = inst_of({{0.5, 0.5}});
    Packing p;
    p.start_cell = {{0, 2}};
    Packing m = mirror_packing(lone, p, 5);
    CHECK(m.at(0) == 3);
    CHECK(mirror_packing(lone, m, 5).start_cell == p.start_cell);
}

TEST_CASE("chart shape helpers") {
    BarChart down{0, {height_from_double(0.9), height_from_double(0.4)}};
    CHECK(down.non_increasing());
    CHECK_FALSE(down.non_decreasing());
    CHECK(down.max_height() == height_from_double(0.9));
    BarChart flat{1, {kHalfUnit, kHalfUnit}};
    CHECK(flat.non_increasing());
    CHECK(flat.non_decreasing());
    CHECK(flat.first_bar() == kHalfUnit);
    CHECK(flat.second_bar() == kHalfUnit);
}

TEST_CASE("order and two-bar validation") {
    Instance pair = inst_of({{0.9, 0.1}, {0.1, 0.9}});
    validate_order(pair, {1, 0});
    validate_order(pair, {0});  // subsets are fine
    CHECK_THROWS_AS(validate_order(pair, {0, 0}), ValidationError);
    CHECK_THROWS_AS(validate_order(pair, {2}), ValidationError);
    require_two_bar(pair);
    Instance three = inst_of({{0.2, 0.3, 0.4}});
    CHECK_THROWS_AS(require_two_bar(three), MismatchError);
    Packing empty;
    CHECK_THROWS_AS(empty.at(0), ValidationError);
}
