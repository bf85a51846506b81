#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "bisets/json_io.hpp"

using namespace bisets;
using nlohmann::json;

TEST_CASE("group spec round trips") {
    for (const char* text : {
             R"({"kind":"cyclic","n":6})",
             R"({"kind":"dihedral","n":4})",
             R"({"kind":"symmetric","n":4})",
             R"({"kind":"quaternion"})",
             R"({"kind":"klein4"})",
             R"({"kind":"table","table":[[0,1],[1,0]]})",
             R"({"kind":"perm","degree":3,"generators":[[1,0,2],[1,2,0]]})",
             R"({"kind":"product","factors":[{"kind":"cyclic","n":2},{"kind":"cyclic","n":3}]})",
         }) {
        json j = json::parse(text);
        GroupSpec spec = group_spec_from_json(j);
        CHECK(group_spec_to_json(spec) == j);
        CHECK_NOTHROW(validate_group(build_group(spec)));
    }
    // the documented examples build the advertised groups
    CHECK(build_group(group_spec_from_json(json::parse(R"({"kind":"dihedral","n":4})"))).order == 8);
    CHECK(build_group(group_spec_from_json(
                          json::parse(R"({"kind":"perm","degree":3,"generators":[[1,0,2],[1,2,0]]})")))
              .order == 6);
    CHECK(build_group(group_spec_from_json(json::parse(
                          R"({"kind":"product","factors":[{"kind":"cyclic","n":2},{"kind":"cyclic","n":3}]})")))
              .order == 6);

    CHECK_THROWS_AS(group_spec_from_json(json::parse(R"({"kind":"nope"})")), std::invalid_argument);
    CHECK_THROWS_AS(group_spec_from_json(json::parse(R"({"n":3})")), std::invalid_argument);
    CHECK_THROWS_AS(group_spec_from_json(json::parse(R"({"kind":"cyclic"})")), std::invalid_argument);
}

TEST_CASE("standard rep round trips") {
    FiniteGroup s3 = make_symmetric(3);
    Subgroup full = full_subgroup(s3);
    Subgroup c2a = subgroup_generated(s3, {1});
    Subgroup c2b = subgroup_generated(s3, {2});
    StandardRep rep{full, full, c2a, c2b, GroupHom{c2a, c2b, {0, 2}}};
    json j = rep_to_json(rep);
    StandardRep back = rep_from_json(s3, j);
    CHECK(reps_equal(back, rep));
    CHECK(j["L"] == json::array({0, 1}));  // sorted element arrays
    CHECK(j["gamma"] == json::array({json::array({0, 0}), json::array({1, 2})}));

    json bad = j;
    bad["gamma"] = json::array({json::array({0, 0})});  // misses an element of L
    CHECK_THROWS_AS(rep_from_json(s3, bad), std::invalid_argument);
    bad = j;
    bad["K"] = json::array({0, 3});  // gamma image not in K
    CHECK_THROWS_AS(rep_from_json(s3, bad), std::invalid_argument);
}

TEST_CASE("morphism round trips") {
    FiniteGroup s3 = make_symmetric(3);
    Subgroup full = full_subgroup(s3);
    Subgroup c2 = subgroup_generated(s3, {1});
    StandardRep ind{full, c2, c2, c2, identity_hom(c2)};
    StandardRep free_rep{full, c2, trivial_subgroup(s3), trivial_subgroup(s3),
                         identity_hom(trivial_subgroup(s3))};
    BisetMorphism m = hom_add(morphism_from_rep(ind, 2), morphism_from_rep(free_rep, -1));
    json j = morphism_to_json(m);
    BisetMorphism back = morphism_from_json(s3, j);
    CHECK(morphism_equal(back, m));
    // canceling terms vanish on load
    json cancel = j;
    cancel["terms"].push_back(
        json{{"rep", key_to_json(canonical_key(ind))}, {"coeff", -2}});
    BisetMorphism reduced = morphism_from_json(s3, cancel);
    CHECK(reduced.terms.size() == 1);
}

TEST_CASE("explicit bisets and gmaps serialize as tables") {
    FiniteGroup s3 = make_symmetric(3);
    Subgroup c2 = subgroup_generated(s3, {1});
    StandardRep rep{c2, c2, c2, c2, identity_hom(c2)};
    json j = explicit_biset_to_json(realize(rep));
    CHECK(j["size"] == 2);
    CHECK(j["left_action"].size() == 2);
    CHECK(j["right_action"].size() == 2);

    GMap f = single_orbit_gmap(c2, full_subgroup(s3), 3);
    json g = gmap_to_json(f);
    CHECK(g["orbit_map"] == json::array({0}));
    CHECK(g["witnesses"].size() == 1);
}

TEST_CASE("mackey data round trips and validates") {
    FiniteGroup s3 = make_symmetric(3);
    MackeyData d = burnside_example(s3);
    json spec = json{{"kind", "symmetric"}, {"n", 3}};
    json j = mackey_to_json(d, spec);
    LoadedMackey back = mackey_from_json(j);
    CHECK(back.data.subgroups.size() == d.subgroups.size());
    CHECK(validate_structure(back.data).pass);
    CHECK(check_M1(back.data).pass);

    json missing = j;
    missing["maps"].erase(missing["maps"].begin().key());
    CHECK_THROWS_AS(mackey_from_json(missing), std::invalid_argument);

    json badmat = j;
    for (auto& [key, val] : badmat["maps"].items()) {
        (void)key;
        val = json::array({json::array({})});  // wrong shape somewhere
        break;
    }
    CHECK_THROWS_AS(mackey_from_json(badmat), std::invalid_argument);

    json badvals = j;
    badvals["values"].erase(badvals["values"].begin().key());
    CHECK_THROWS_AS(mackey_from_json(badvals), std::invalid_argument);
}

TEST_CASE("check reports carry counterexamples") {
    FiniteGroup c2 = make_cyclic(2);
    MackeyData neg = fixed_point_example(c2, FgAbelianGroup{{3}}, {{{1}}, {{2}}});
    CheckReport rep = check_conjugation_invariance(neg);
    json j = check_report_to_json(rep);
    CHECK(j["verdict"] == "fail");
    REQUIRE(!j["failures"].empty());
    CHECK(j["failures"][0].contains("axiom"));
    CHECK(j["failures"][0].contains("instance"));
    CHECK(j["failures"][0].contains("left"));
    CHECK(j["failures"][0].contains("right"));
}
