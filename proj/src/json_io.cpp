#include "bisets/json_io.hpp"

#include <stdexcept>

namespace bisets {

namespace {

void require(bool cond, const std::string& what) {
    if (!cond) throw std::invalid_argument("schema: " + what);
}

std::vector<int> int_array(const json& j, const std::string& what) {
    require(j.is_array(), what + " must be an array");
    std::vector<int> out;
    for (const auto& v : j) {
        require(v.is_number_integer(), what + " must hold integers");
        out.push_back(v.get<int>());
    }
    return out;
}

std::vector<std::vector<int>> int_table(const json& j, const std::string& what) {
    require(j.is_array(), what + " must be an array");
    std::vector<std::vector<int>> out;
    for (const auto& row : j) out.push_back(int_array(row, what + " row"));
    return out;
}

}  // namespace

GroupSpec group_spec_from_json(const json& j) {
    require(j.is_object() && j.contains("kind") && j["kind"].is_string(),
            "group spec needs a string 'kind'");
    const std::string kind = j["kind"].get<std::string>();
    GroupSpec s;
    if (kind == "cyclic") {
        s.kind = GroupSpec::Kind::cyclic;
        require(j.contains("n") && j["n"].is_number_integer(), "cyclic needs integer 'n'");
        s.n = j["n"].get<int>();
    } else if (kind == "dihedral") {
        s.kind = GroupSpec::Kind::dihedral;
        require(j.contains("n") && j["n"].is_number_integer(), "dihedral needs integer 'n'");
        s.n = j["n"].get<int>();
    } else if (kind == "symmetric") {
        s.kind = GroupSpec::Kind::symmetric;
        require(j.contains("n") && j["n"].is_number_integer(), "symmetric needs integer 'n'");
        s.n = j["n"].get<int>();
    } else if (kind == "quaternion") {
        s.kind = GroupSpec::Kind::quaternion;
    } else if (kind == "klein4") {
        s.kind = GroupSpec::Kind::klein4;
    } else if (kind == "table") {
        s.kind = GroupSpec::Kind::table;
        require(j.contains("table"), "table spec needs 'table'");
        s.table = int_table(j["table"], "table");
    } else if (kind == "perm") {
        s.kind = GroupSpec::Kind::perm;
        require(j.contains("degree") && j["degree"].is_number_integer(),
                "perm needs integer 'degree'");
        s.degree = j["degree"].get<int>();
        require(j.contains("generators"), "perm needs 'generators'");
        s.generators = int_table(j["generators"], "generators");
    } else if (kind == "product") {
        s.kind = GroupSpec::Kind::product;
        require(j.contains("factors") && j["factors"].is_array(), "product needs 'factors'");
        for (const auto& f : j["factors"]) s.factors.push_back(group_spec_from_json(f));
    } else {
        throw std::invalid_argument("schema: unknown group kind '" + kind + "'");
    }
    return s;
}

json group_spec_to_json(const GroupSpec& spec) {
    json j;
    switch (spec.kind) {
        case GroupSpec::Kind::cyclic:
            j = {{"kind", "cyclic"}, {"n", spec.n}};
            break;
        case GroupSpec::Kind::dihedral:
            j = {{"kind", "dihedral"}, {"n", spec.n}};
            break;
        case GroupSpec::Kind::symmetric:
            j = {{"kind", "symmetric"}, {"n", spec.n}};
            break;
        case GroupSpec::Kind::quaternion:
            j = {{"kind", "quaternion"}};
            break;
        case GroupSpec::Kind::klein4:
            j = {{"kind", "klein4"}};
            break;
        case GroupSpec::Kind::table:
            j = {{"kind", "table"}, {"table", spec.table}};
            break;
        case GroupSpec::Kind::perm:
            j = {{"kind", "perm"}, {"degree", spec.degree}, {"generators", spec.generators}};
            break;
        case GroupSpec::Kind::product: {
            json factors = json::array();
            for (const auto& f : spec.factors) factors.push_back(group_spec_to_json(f));
            j = {{"kind", "product"}, {"factors", factors}};
            break;
        }
    }
    return j;
}

json subgroup_to_json(const Subgroup& h) { return json(h.elements); }

Subgroup subgroup_from_json(const FiniteGroup& g, const json& j) {
    return subgroup_from_elements(g, int_array(j, "subgroup"));
}

json rep_to_json(const StandardRep& rep) {
    json gamma = json::array();
    for (int i = 0; i < rep.L.size(); ++i)
        gamma.push_back(json::array({rep.L.elements[i], rep.gamma.images[i]}));
    return json{{"H2", rep.H2.elements},
                {"H1", rep.H1.elements},
                {"L", rep.L.elements},
                {"K", rep.K.elements},
                {"gamma", gamma}};
}

StandardRep rep_from_json(const FiniteGroup& g, const json& j) {
    require(j.is_object(), "standard rep must be an object");
    for (const char* field : {"H2", "H1", "L", "K", "gamma"})
        require(j.contains(field), std::string("standard rep needs '") + field + "'");
    StandardRep rep;
    rep.H2 = subgroup_from_json(g, j["H2"]);
    rep.H1 = subgroup_from_json(g, j["H1"]);
    rep.L = subgroup_from_json(g, j["L"]);
    rep.K = subgroup_from_json(g, j["K"]);
    std::vector<int> images(rep.L.size(), -1);
    require(j["gamma"].is_array(), "gamma must be an array of pairs");
    for (const auto& pair : j["gamma"]) {
        auto p = int_array(pair, "gamma pair");
        require(p.size() == 2, "gamma pair must have two entries");
        require(rep.L.contains(p[0]), "gamma pair domain element not in L");
        images[rep.L.pos(p[0])] = p[1];
    }
    for (int v : images) require(v >= 0, "gamma must cover all of L");
    rep.gamma = GroupHom{rep.L, rep.K, images};
    validate_rep(rep);
    return rep;
}

json key_to_json(const CanonicalKey& key) {
    json gamma = json::array();
    for (const auto& [l, k] : key.gamma) gamma.push_back(json::array({l, k}));
    return json{{"H2", key.H2}, {"H1", key.H1}, {"L", key.L}, {"K", key.K}, {"gamma", gamma}};
}

json morphism_to_json(const BisetMorphism& m) {
    json terms = json::array();
    for (const auto& [key, coeff] : m.terms)
        terms.push_back(json{{"rep", key_to_json(key)}, {"coeff", coeff}});
    return json{{"source", m.source.elements}, {"target", m.target.elements}, {"terms", terms}};
}

BisetMorphism morphism_from_json(const FiniteGroup& g, const json& j) {
    require(j.is_object() && j.contains("source") && j.contains("target") && j.contains("terms"),
            "morphism needs source/target/terms");
    BisetMorphism m;
    m.source = subgroup_from_json(g, j["source"]);
    m.target = subgroup_from_json(g, j["target"]);
    for (const auto& term : j["terms"]) {
        require(term.contains("rep") && term.contains("coeff"), "morphism term needs rep/coeff");
        StandardRep rep = rep_from_json(g, term["rep"]);
        require(rep.H2 == m.target && rep.H1 == m.source, "morphism term over wrong ambient pair");
        long long c = term["coeff"].get<long long>();
        if (c != 0) m.terms[canonical_key(rep)] += c;
    }
    for (auto it = m.terms.begin(); it != m.terms.end();)
        it = it->second == 0 ? m.terms.erase(it) : std::next(it);
    return m;
}

json matrix_morphism_to_json(const MatrixMorphism& m) {
    json src = json::array(), tgt = json::array(), entries = json::array();
    for (const auto& s : m.source_tuple) src.push_back(s.elements);
    for (const auto& t : m.target_tuple) tgt.push_back(t.elements);
    for (const auto& row : m.entries) {
        json jrow = json::array();
        for (const auto& e : row) jrow.push_back(morphism_to_json(e));
        entries.push_back(jrow);
    }
    return json{{"source_tuple", src}, {"target_tuple", tgt}, {"entries", entries}};
}

json gmap_to_json(const GMap& f) {
    json src = json::array(), tgt = json::array();
    for (const auto& s : f.source.orbits) src.push_back(s.elements);
    for (const auto& t : f.target.orbits) tgt.push_back(t.elements);
    return json{{"source", src},
                {"target", tgt},
                {"orbit_map", f.orbit_map},
                {"witnesses", f.witnesses}};
}

json check_report_to_json(const CheckReport& rep) {
    json failures = json::array();
    for (const auto& f : rep.failures)
        failures.push_back(json{{"axiom", f.axiom},
                                {"instance", f.instance},
                                {"left", f.left},
                                {"right", f.right}});
    return json{{"verdict", rep.pass ? "pass" : "fail"}, {"failures", failures}};
}

json explicit_biset_to_json(const ExplicitBiset& x) {
    return json{{"left_group", x.left_group.elements},
                {"right_group", x.right_group.elements},
                {"size", x.size},
                {"left_action", x.left_action},
                {"right_action", x.right_action}};
}

namespace {

std::string subgroup_key(const std::vector<int>& elements) { return json(elements).dump(); }

std::vector<int> parse_subgroup_key(const std::string& key) {
    json j = json::parse(key, nullptr, false);
    if (j.is_discarded() || !j.is_array())
        throw std::invalid_argument("schema: bad subgroup key '" + key + "'");
    return int_array(j, "subgroup key");
}

IntMatrix ll_table(const json& j, const std::string& what) {
    require(j.is_array(), what + " must be a matrix");
    IntMatrix out;
    for (const auto& row : j) {
        require(row.is_array(), what + " row must be an array");
        std::vector<long long> r;
        for (const auto& v : row) {
            require(v.is_number_integer(), what + " entries must be integers");
            r.push_back(v.get<long long>());
        }
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace

json mackey_to_json(const MackeyData& d, const json& group_spec) {
    json values = json::object();
    for (size_t i = 0; i < d.subgroups.size(); ++i)
        values[subgroup_key(d.subgroups[i].elements)] = d.values[i].factors;
    json maps = json::object();
    for (const auto& [hk, hom] : d.res_map)
        maps["res:" + subgroup_key(d.subgroups[hk.first].elements) + "<" +
             subgroup_key(d.subgroups[hk.second].elements)] = hom.matrix;
    for (const auto& [hk, hom] : d.ind_map)
        maps["ind:" + subgroup_key(d.subgroups[hk.first].elements) + "<" +
             subgroup_key(d.subgroups[hk.second].elements)] = hom.matrix;
    for (const auto& [gh, hom] : d.con_map)
        maps["con:" + std::to_string(gh.first) + "," +
             subgroup_key(d.subgroups[gh.second].elements)] = hom.matrix;
    return json{{"group", group_spec}, {"values", values}, {"maps", maps}};
}

LoadedMackey mackey_from_json(const json& j) {
    require(j.is_object() && j.contains("group") && j.contains("values") && j.contains("maps"),
            "mackey data needs group/values/maps");
    LoadedMackey out;
    out.spec = j["group"];
    out.group = std::make_shared<FiniteGroup>(build_group(group_spec_from_json(out.spec)));
    out.data.group = out.group.get();
    out.data.subgroups = enumerate_subgroups(*out.group);
    const int ns = static_cast<int>(out.data.subgroups.size());
    require(j["values"].is_object(), "'values' must be an object");
    out.data.values.resize(ns);
    std::vector<char> seen(ns, 0);
    for (const auto& [key, val] : j["values"].items()) {
        int idx = out.data.index_of(parse_subgroup_key(key));
        FgAbelianGroup grp;
        for (const auto& v : val) {
            require(v.is_number_integer() && v.get<long long>() >= 0,
                    "group factors must be non-negative integers");
            grp.factors.push_back(v.get<long long>());
        }
        out.data.values[idx] = std::move(grp);
        seen[idx] = 1;
    }
    for (int i = 0; i < ns; ++i)
        require(seen[i], "missing value for subgroup " + subgroup_key(out.data.subgroups[i].elements));

    require(j["maps"].is_object(), "'maps' must be an object");
    for (const auto& [key, val] : j["maps"].items()) {
        auto colon = key.find(':');
        require(colon != std::string::npos, "map key needs a kind prefix: " + key);
        std::string kind = key.substr(0, colon);
        std::string rest = key.substr(colon + 1);
        IntMatrix matrix = ll_table(val, key);
        if (kind == "res" || kind == "ind") {
            auto lt = rest.find('<');
            require(lt != std::string::npos, "res/ind key needs 'H<K': " + key);
            int h = out.data.index_of(parse_subgroup_key(rest.substr(0, lt)));
            int k = out.data.index_of(parse_subgroup_key(rest.substr(lt + 1)));
            require(is_subgroup_of(out.data.subgroups[h], out.data.subgroups[k]),
                    "res/ind key is not a nested pair: " + key);
            AbHom hom;
            if (kind == "res")
                hom = AbHom{out.data.values[k], out.data.values[h], std::move(matrix)};
            else
                hom = AbHom{out.data.values[h], out.data.values[k], std::move(matrix)};
            require(ab_well_defined(hom), "matrix not well defined: " + key);
            ab_normalize(hom);
            if (kind == "res")
                out.data.res_map.emplace(std::make_pair(h, k), std::move(hom));
            else
                out.data.ind_map.emplace(std::make_pair(h, k), std::move(hom));
        } else if (kind == "con") {
            auto comma = rest.find(',');
            require(comma != std::string::npos, "con key needs 'g,H': " + key);
            int g = std::stoi(rest.substr(0, comma));
            require(g >= 0 && g < out.group->order, "con element out of range: " + key);
            int h = out.data.index_of(parse_subgroup_key(rest.substr(comma + 1)));
            int hg = out.data.index_of(conjugate_subgroup(out.data.subgroups[h], g));
            AbHom hom{out.data.values[h], out.data.values[hg], std::move(matrix)};
            require(ab_well_defined(hom), "matrix not well defined: " + key);
            ab_normalize(hom);
            out.data.con_map.emplace(std::make_pair(g, h), std::move(hom));
        } else {
            throw std::invalid_argument("schema: unknown map kind in key '" + key + "'");
        }
    }
    // completeness
    for (int h = 0; h < ns; ++h)
        for (int k = 0; k < ns; ++k) {
            if (!is_subgroup_of(out.data.subgroups[h], out.data.subgroups[k])) continue;
            require(out.data.res_map.count({h, k}) == 1,
                    "missing res map for " + subgroup_key(out.data.subgroups[h].elements) + "<" +
                        subgroup_key(out.data.subgroups[k].elements));
            require(out.data.ind_map.count({h, k}) == 1,
                    "missing ind map for " + subgroup_key(out.data.subgroups[h].elements) + "<" +
                        subgroup_key(out.data.subgroups[k].elements));
        }
    for (int h = 0; h < ns; ++h)
        for (int g = 0; g < out.group->order; ++g)
            require(out.data.con_map.count({g, h}) == 1,
                    "missing con map for g=" + std::to_string(g) + ", H=" +
                        subgroup_key(out.data.subgroups[h].elements));
    return out;
}

}  // namespace bisets
