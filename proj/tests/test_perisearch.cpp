#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <eulertop/perisearch.hpp>
#include <eulertop/varieties.hpp>

#include <algorithm>

using namespace eulertop;

namespace {

const TopConfig kRef{Rational(1), Rational(2), Rational(3), Rational(1)};

}  // namespace

TEST_CASE("period residual agrees with exact orbit arithmetic") {
    BodyState<Rational> s{Rational(1), Rational(1), Rational(1)};
    MpReal r = period_residual(kRef, s, 2, 256);
    auto path = orbit(kRef, s, 2);
    Rational exact = max_abs_diff(path[2], s);
    CHECK(abs(r - MpReal(exact, 256)) <= MpReal::parse("1e-70", 256));
    CHECK(r >= MpReal(0.01, 256));

    // A fixed point has zero residual at every period.
    BodyState<Rational> axis{Rational(3), Rational(0), Rational(0)};
    CHECK(period_residual(kRef, axis, 1, 256).is_zero());
    CHECK(period_residual(kRef, axis, 5, 256).is_zero());
}

TEST_CASE("residual propagates the singular point") {
    BodyState<Rational> sing{Rational(2), Rational(4), Rational(0)};
    CHECK_THROWS_AS(period_residual(kRef, sing, 1, 128), SingularPoint);
}

TEST_CASE("region validation rejects malformed boxes") {
    SearchRegion r = SearchRegion::cube(-1.0, 1.0, 5);
    CHECK(r.box[0][0] == -1.0);
    CHECK(r.box[2][1] == 1.0);
    CHECK_NOTHROW(r.validate());

    r.grid_resolution = 1;
    CHECK_THROWS(r.validate());
    CHECK_THROWS(SearchRegion::cube(2.0, -2.0, 5));  // factory validates eagerly

    r.grid_resolution = 5;
    r.box[1] = {2.0, -2.0};
    CHECK_THROWS(r.validate());
}

TEST_CASE("classification names are stable") {
    CHECK(std::string(classification_name(Classification::fixed_axis)) == "fixed_axis");
    CHECK(std::string(classification_name(Classification::singular_set)) == "singular_set");
    CHECK(std::string(classification_name(Classification::on_v3)) == "on_v3");
    CHECK(std::string(classification_name(Classification::genuine)) == "genuine");
}

TEST_CASE("small grid search finds only structural period-2 candidates") {
    SearchRegion region = SearchRegion::cube(-2.0, 2.0, 5);
    auto rep = newton_periodic_search(kRef, 2, region, 7);
    CHECK(rep.period == 2);
    CHECK(rep.starts == 125);
    CHECK(rep.starts == rep.converged + rep.dropped);

    for (const auto& c : rep.candidates) {
        CHECK(c.classification != Classification::genuine);
        CHECK(c.residual <= MpReal::parse("1e-30", region.precision));
        CHECK(c.reverified);
    }

    // The sorted, deduplicated candidate list is reproducible.
    auto rep2 = newton_periodic_search(kRef, 2, region, 7);
    REQUIRE(rep2.candidates.size() == rep.candidates.size());
    for (std::size_t i = 0; i < rep.candidates.size(); ++i) {
        CHECK(rep2.candidates[i].state == rep.candidates[i].state);
        CHECK(rep2.candidates[i].classification == rep.candidates[i].classification);
    }
}

TEST_CASE("period-3 candidates land on the cubic variety") {
    SearchRegion region = SearchRegion::cube(-3.0, 3.0, 7);
    auto rep = newton_periodic_search(kRef, 3, region, 7);
    bool found_on_v3 = false;
    for (const auto& c : rep.candidates) {
        CHECK(c.classification != Classification::genuine);
        if (c.classification == Classification::on_v3) {
            found_on_v3 = true;
            // Reconstruct xi and confirm the variety membership at scale.
            XiPoint<MpReal> xi = xi_from_state(kRef, c.state);
            CHECK(abs(v3_condition(xi)) <= MpReal::parse("1e-25", region.precision));
        }
    }
    CHECK(found_on_v3);
}
