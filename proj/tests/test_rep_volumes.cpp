#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>

#include "pool.hpp"
#include "repvol/error.hpp"
#include "repvol/rep_volumes.hpp"

using namespace repvol;

namespace {

std::vector<Rational> coefficients(const std::vector<VolumeEntry>& entries) {
    std::vector<Rational> out;
    for (const auto& e : entries) out.push_back(e.volume.coefficient());
    return out;
}

std::vector<Rational> coefficients(const std::vector<VolumeValue>& values) {
    std::vector<Rational> out;
    for (const auto& v : values) out.push_back(v.coefficient());
    return out;
}

std::vector<Rational> parse_all(std::initializer_list<const char*> items) {
    std::vector<Rational> out;
    for (const char* s : items) out.push_back(Rational::parse(s));
    return out;
}

}  // namespace

TEST_CASE("ehn admissibility") {
    const std::vector<std::int64_t> a237{2, 3, 7};
    CHECK(ehn_admissible(1, std::vector<std::int64_t>{1, 1, 1}, 0, a237));
    CHECK(ehn_admissible(1, std::vector<std::int64_t>{0}, 0, std::vector<std::int64_t>{2}));
    CHECK_FALSE(ehn_admissible(1, std::vector<std::int64_t>{0}, -1, std::vector<std::int64_t>{2}));
    // ceil(-1/2) = 0, so n = 1 fails the lower inequality at genus 1.
    CHECK_FALSE(ehn_admissible(1, std::vector<std::int64_t>{-1}, 1, std::vector<std::int64_t>{2}));
    CHECK(ehn_admissible(2, std::vector<std::int64_t>{-1}, 1, std::vector<std::int64_t>{2}));
    CHECK_THROWS_AS(ehn_admissible(0, std::vector<std::int64_t>{}, 0, std::vector<std::int64_t>{}),
                    PreconditionError);
    CHECK_THROWS_AS(ehn_admissible(1, std::vector<std::int64_t>{1}, 0, std::vector<std::int64_t>{}),
                    PreconditionError);
}

TEST_CASE("volume of a tuple") {
    const SeifertInvariants s(1, {{2, 1}});
    CHECK(volume_of_tuple(s, std::vector<std::int64_t>{1}, 0).coefficient() == Rational(1, 2));
    CHECK(volume_of_tuple(s, std::vector<std::int64_t>{0}, 0).coefficient() == Rational(0));

    // n_i = (k_i + 1) a_i - 1, n = 2 - 2g + sum k_i, here with k = (0, 1, -1).
    const SeifertInvariants s237(1, {{2, 1}, {3, 1}, {7, 1}});
    const std::vector<std::int64_t> k{0, 1, -1};
    std::vector<std::int64_t> n_list;
    for (std::size_t i = 0; i < k.size(); ++i) {
        n_list.push_back((k[i] + 1) * s237.fibers()[i].a - 1);
    }
    const std::int64_t n = 2 - 2 * 1 + std::accumulate(k.begin(), k.end(), std::int64_t{0});
    CHECK(volume_of_tuple(s237, n_list, n).coefficient() == Rational(7225, 1722));

    CHECK_THROWS_WITH_AS(volume_of_tuple(SeifertInvariants(1, {{2, 1}, {2, -1}}),
                                         std::vector<std::int64_t>{0, 0}, 0),
                         doctest::Contains("not SL2R-tilde: volume formula undefined"),
                         PreconditionError);
    CHECK_THROWS_AS(volume_of_tuple(s, std::vector<std::int64_t>{0}, -1), PreconditionError);
}

TEST_CASE("volume value float rendering") {
    const VolumeValue v(Rational(7225, 1722));
    const double exact = 7225.0 / 1722.0 * kFourPiSquared;
    CHECK(std::abs(v.float_value() - exact) <= 1e-14 * exact);
    CHECK_THROWS_AS(VolumeValue(Rational(-1, 2)), PreconditionError);
    CHECK((VolumeValue(Rational(1, 2)) + VolumeValue(Rational(1, 3))).coefficient() ==
          Rational(5, 6));
}

TEST_CASE("enumerated volume sets, frozen from an external brute-force run") {
    CHECK(coefficients(enumerate_volume_set(SeifertInvariants(1, {{2, 1}}))) ==
          parse_all({"0", "1/2"}));
    CHECK(coefficients(enumerate_volume_set(SeifertInvariants(1, {{3, 1}}))) ==
          parse_all({"0", "1/3", "4/3"}));
    CHECK(coefficients(enumerate_volume_set(SeifertInvariants(2, {{2, 1}}))) ==
          parse_all({"0", "1/2", "2", "9/2", "8", "25/2"}));
    CHECK(coefficients(enumerate_volume_set(SeifertInvariants(1, {{2, 1}, {3, 1}}))) ==
          parse_all({"0", "1/30", "2/15", "3/10", "8/15", "5/6", "49/30"}));

    const auto set237 = enumerate_volume_set(SeifertInvariants(1, {{2, 1}, {3, 1}, {7, 1}}));
    CHECK(set237.size() == 64);
    CHECK(set237.back().volume.coefficient() == Rational(7225, 1722));
    CHECK(coefficients(set237)[1] == Rational(1, 1722));

    const auto set_g2 = enumerate_volume_set(SeifertInvariants(2, {{3, -2}, {5, 1}}));
    CHECK(set_g2.size() == 49);
    CHECK(set_g2.back().volume.coefficient() == Rational(2704, 105));
}

TEST_CASE("enumeration preconditions") {
    CHECK_THROWS_WITH_AS(enumerate_volume_set(SeifertInvariants(0, {{2, 1}, {3, 1}, {7, 1}})),
                         doctest::Contains("positive genus"), PreconditionError);
    CHECK_THROWS_WITH_AS(enumerate_volume_set(SeifertInvariants(1, {})),
                         doctest::Contains("not SL2R-tilde"), PreconditionError);
    CHECK_THROWS_AS(brute_force_volume_set(SeifertInvariants(2, {})), PreconditionError);
}

TEST_CASE("witnesses are the lexicographically smallest (r, m)") {
    const auto set = enumerate_volume_set(SeifertInvariants(1, {{2, 1}}));
    REQUIRE(set.size() == 2);
    // 0 is reached by r = 0, m = 0 (and by r = 1 never); 1/2 first by r = 1, m = -1.
    CHECK(set[0].witness == AdmissibleTuple{{0}, 0});
    CHECK(set[1].witness == AdmissibleTuple{{1}, -1});
    CHECK(set[1].certificate.n_list == std::vector<std::int64_t>{1});
    CHECK(set[1].certificate.n == 1);
    CHECK(set[1].certificate.zeta == Rational(-1));
    CHECK(set[1].certificate.z_list == std::vector<Rational>{Rational(1)});
}

TEST_CASE("maximal volume") {
    CHECK(max_volume(SeifertInvariants(1, {{2, 1}})).coefficient() == Rational(1, 2));
    CHECK(max_volume(SeifertInvariants(1, {{2, 1}, {3, 1}, {7, 1}})).coefficient() ==
          Rational(7225, 1722));
    CHECK(max_volume(SeifertInvariants(2, {{2, 1}})).coefficient() == Rational(25, 2));
    CHECK_THROWS_AS(max_volume(SeifertInvariants(1, {{1, 1}})), PreconditionError);
    CHECK_THROWS_AS(max_volume(SeifertInvariants(2, {})), PreconditionError);
}

TEST_CASE("brute force on the exhaustive window matches the narrow window") {
    for (const SeifertInvariants& s :
         {SeifertInvariants(1, {{2, 1}}), SeifertInvariants(1, {{3, 1}}),
          SeifertInvariants(1, {{2, 1}, {3, -1}}), SeifertInvariants(2, {{2, 1}})}) {
        const auto wide = brute_force_volume_set(s, BruteForceWindow::wide(s));
        CHECK(coefficients(wide) == coefficients(brute_force_volume_set(s)));
        CHECK(coefficients(wide) == coefficients(enumerate_volume_set(s)));
    }
    CHECK(coefficients(brute_force_volume_set(SeifertInvariants(1, {{3, 1}}))) ==
          parse_all({"0", "1/3", "4/3"}));
}

TEST_CASE("property: invariants of the enumerated set over a random pool") {
    for (const auto& s : testing::random_seifert_pool(60, 99)) {
        CAPTURE(s.genus());
        CAPTURE(s.fibers().size());
        const auto set = enumerate_volume_set(s);
        const auto values = coefficients(set);

        CHECK(values == coefficients(brute_force_volume_set(s)));
        CHECK(std::is_sorted(values.begin(), values.end()));
        CHECK(std::adjacent_find(values.begin(), values.end()) == values.end());
        CHECK(values.front() == Rational(0));

        std::int64_t product = 1;
        for (const Fiber& f : s.fibers()) product *= f.a;
        const auto bound =
            product * (4 * s.genus() - 3 + static_cast<std::int64_t>(s.fibers().size()));
        CHECK(static_cast<std::int64_t>(set.size()) <= bound);

        if (classify_geometry(s) == GeometryClass::SL2RTilde) {
            CHECK(set.back().volume == max_volume(s));
        }

        CHECK(values == coefficients(enumerate_volume_set(normalize(s))));
        auto fibers = s.fibers();
        fibers.push_back(Fiber{1, 0});
        CHECK(values == coefficients(enumerate_volume_set(SeifertInvariants(s.genus(), fibers))));

        for (const auto& entry : set) {
            CHECK(certificate_consistent(s, entry.certificate, entry.volume));
            const auto& w = entry.witness;
            std::int64_t nonzero = 0;
            for (std::size_t i = 0; i < w.residues.size(); ++i) {
                CHECK(w.residues[i] >= 0);
                CHECK(w.residues[i] < s.fibers()[i].a);
                nonzero += w.residues[i] != 0;
            }
            CHECK(w.shift <= 2 * s.genus() - 2);
            CHECK(w.shift >= 2 - 2 * s.genus() - nonzero);
        }
    }
}

TEST_CASE("certificate checker rejects tampered certificates") {
    const SeifertInvariants s(1, {{2, 1}, {3, 1}});
    auto set = enumerate_volume_set(s);
    auto entry = set.back();
    REQUIRE(certificate_consistent(s, entry.certificate, entry.volume));
    auto bad = entry.certificate;
    bad.zeta += Rational(1, 7);
    CHECK_FALSE(certificate_consistent(s, bad, entry.volume));
    CHECK_FALSE(certificate_consistent(s, entry.certificate, set.front().volume));
}
