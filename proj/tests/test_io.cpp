#include <doctest.h>

#include "pfg/io.hpp"

using namespace pfg;
using nlohmann::json;

TEST_CASE("groups round-trip through JSON") {
    for (const FiniteGroup& g : {make_symmetric(3), make_dihedral(4), make_klein_four()}) {
        FiniteGroup back = group_from_json(group_to_json(g));
        CHECK(back.table() == g.table());
        CHECK(back.name() == g.name());
    }
}

TEST_CASE("group files with mismatched order are rejected") {
    json j = group_to_json(make_cyclic(3));
    j["order"] = 4;
    CHECK_THROWS_AS(group_from_json(j), ValidationError);
    CHECK_THROWS_AS(group_from_json(json::array()), ValidationError);
}

TEST_CASE("registry resolves the documented names") {
    CHECK(registry_group("Z6").order() == 6);
    CHECK(registry_group("D4").order() == 8);
    CHECK(registry_group("S4").order() == 24);
    CHECK(registry_group("V4").table() == registry_group("Klein4").table());
    CHECK(registry_group("Z2xZ4").order() == 8);
    CHECK(registry_group("Z2xZ2xZ3").order() == 12);
    CHECK_THROWS_AS(registry_group("Q8"), ValidationError);
    CHECK_THROWS_AS(registry_group("Z13"), ValidationError);
    for (const std::string& name : registry_names())
        CHECK(registry_group(name).name() == name);
}

TEST_CASE("PFS files load, validate, and round-trip") {
    json j = {{"carrier", "Z2"},
              {"triples", {{"1/2", "1/4", "1/8"}, {"1/4", "1/4", "1/4"}}}};
    LoadedPfs loaded = pfs_from_json(j);
    CHECK(loaded.group.order() == 2);
    CHECK(loaded.pfs.at(0).positive == Rational(1, 2));

    nlohmann::ordered_json out = pfs_to_json(loaded.group, loaded.pfs);
    CHECK(out["carrier"] == "Z2");
    LoadedPfs again = pfs_from_json(out);
    CHECK(pfs_equal(again.pfs, loaded.pfs));
}

TEST_CASE("PFS validation errors name the offending element") {
    json zero_den = {{"carrier", "Z2"},
                     {"triples", {{"1/2", "1/4", "1/8"}, {"3/0", "0", "0"}}}};
    CHECK_THROWS_WITH_AS(pfs_from_json(zero_den), doctest::Contains("element 1"),
                         ValidationError);
    json oversum = {{"carrier", "Z2"},
                    {"triples", {{"2/3", "1/4", "1/8"}, {"0", "0", "0"}}}};
    CHECK_THROWS_WITH_AS(pfs_from_json(oversum), doctest::Contains("element 0"),
                         ValidationError);
    json decimal = {{"carrier", "Z2"}, {"triples", {{"0.5", "0", "0"}, {"0", "0", "0"}}}};
    CHECK_THROWS_AS(pfs_from_json(decimal), ValidationError);
    json short_list = {{"carrier", "Z2"}, {"triples", {{"1/2", "1/4", "1/8"}}}};
    CHECK_THROWS_AS(pfs_from_json(short_list), ValidationError);
}

TEST_CASE("inline carriers survive serialization") {
    FiniteGroup g = FiniteGroup::from_table({{0, 1}, {1, 0}}, "mystery");
    PictureFuzzySet q = PictureFuzzySet::constant(2, {Rational(1, 2), Rational(0), Rational(0)});
    nlohmann::ordered_json out = pfs_to_json(g, q);
    CHECK(out["carrier"].is_object());  // unknown name, so the table is inlined
    LoadedPfs again = pfs_from_json(out);
    CHECK(again.group.table() == g.table());
    CHECK(pfs_equal(again.pfs, q));
}

TEST_CASE("map specs resolve against the carrier") {
    FiniteGroup z6 = registry_group("Z6");
    CHECK(resolve_map("identity", z6).map.map == identity_map(z6).map);
    CHECK(resolve_map("constant:0", z6).target.order() == 6);
    LoadedMap m = resolve_map("mod:3", z6);
    CHECK(m.target.order() == 3);
    CHECK(validate_homomorphism(m.source, m.target, m.map));
    FiniteGroup prod = registry_group("Z2xZ4");
    CHECK(resolve_map("proj:0", prod).target.order() == 2);
    CHECK(resolve_map("proj:1", prod).target.order() == 4);
    CHECK_THROWS_AS(resolve_map("proj:0", z6), ValidationError);
    CHECK_THROWS_AS(resolve_map("/nonexistent/map.json", z6), ValidationError);
}
