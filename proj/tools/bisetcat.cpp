// Command-line frontend: group inspection, biset algebra, category
// computations and Mackey verification with machine-readable output.
//
// Exit codes: 0 success, 2 malformed input, 3 oracle mismatch,
// 4 Mackey but not conjugation invariant, 5 axiom failure.

#include <fstream>
#include <iostream>
#include <random>
#include <set>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "bisets/biset.hpp"
#include "bisets/category.hpp"
#include "bisets/group.hpp"
#include "bisets/json_io.hpp"
#include "bisets/mackey.hpp"

using namespace bisets;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitBadInput = 2;
constexpr int kExitOracleMismatch = 3;
constexpr int kExitNotConjugationInvariant = 4;
constexpr int kExitAxiomFailure = 5;

struct Options {
    std::string format = "json";
    unsigned seed = 12345;
};

// Accepts either a JSON group spec or a shorthand name such as S3, D4, Q8,
// C6, V4/klein4, A4, S4.
GroupSpec parse_group_arg(const std::string& arg) {
    json j = json::parse(arg, nullptr, false);
    if (!j.is_discarded()) return group_spec_from_json(j);
    std::string name = arg;
    GroupSpec s;
    auto numeric_suffix = [&](size_t from) { return std::stoi(name.substr(from)); };
    if (name == "klein4" || name == "V4") {
        s.kind = GroupSpec::Kind::klein4;
    } else if (name == "Q8" || name == "quaternion") {
        s.kind = GroupSpec::Kind::quaternion;
    } else if (name == "A4") {
        s.kind = GroupSpec::Kind::perm;
        s.degree = 4;
        s.generators = {{1, 2, 0, 3}, {0, 2, 3, 1}};
    } else if (name.size() > 1 && name[0] == 'C' && isdigit(name[1])) {
        s.kind = GroupSpec::Kind::cyclic;
        s.n = numeric_suffix(1);
    } else if (name.size() > 1 && name[0] == 'D' && isdigit(name[1])) {
        s.kind = GroupSpec::Kind::dihedral;
        s.n = numeric_suffix(1);
    } else if (name.size() > 1 && name[0] == 'S' && isdigit(name[1])) {
        s.kind = GroupSpec::Kind::symmetric;
        s.n = numeric_suffix(1);
    } else {
        throw std::invalid_argument("unknown group name '" + name + "'");
    }
    return s;
}

json parse_json_arg(const std::string& arg, const std::string& what) {
    json j = json::parse(arg, nullptr, false);
    if (j.is_discarded()) throw std::invalid_argument("malformed JSON for " + what);
    return j;
}

void emit(const Options& opt, const json& doc, const std::string& table_text) {
    if (opt.format == "table")
        std::cout << table_text;
    else
        std::cout << doc.dump(2) << "\n";
}

int cmd_group(const Options& opt, const std::string& group_arg, bool list_only) {
    FiniteGroup g = build_group(parse_group_arg(group_arg));
    auto subs = enumerate_subgroups(g);

    std::set<std::vector<int>> classes;
    for (const auto& h : subs) {
        std::vector<int> best = h.elements;
        for (int x = 0; x < g.order; ++x)
            best = std::min(best, conjugate_subgroup(h, x).elements);
        classes.insert(best);
    }

    json jsubs = json::array();
    for (const auto& h : subs) {
        json entry{{"elements", h.elements}, {"order", h.size()}};
        if (!list_only) entry["centralizer"] = centralizer(g, h).elements;
        jsubs.push_back(entry);
    }
    json jclasses = json::array();
    for (const auto& rep : classes) jclasses.push_back(rep);
    json doc{{"label", g.label},
             {"order", g.order},
             {"subgroup_count", subs.size()},
             {"subgroups", jsubs},
             {"conjugacy_classes", classes.size()},
             {"conjugacy_class_reps", jclasses}};
    std::string text = "group " + g.label + ": order " + std::to_string(g.order) + ", " +
                       std::to_string(subs.size()) + " subgroups, " +
                       std::to_string(classes.size()) + " conjugacy classes\n";
    for (const auto& h : subs)
        text += "  " + json(h.elements).dump() +
                (list_only ? std::string()
                           : "  centralizer " + json(centralizer(g, h).elements).dump()) +
                "\n";
    emit(opt, doc, text);
    return kExitOk;
}

int cmd_compose(const Options& opt, const std::string& group_arg, const std::string& rep2_arg,
                const std::string& rep1_arg, bool oracle, int sweep) {
    FiniteGroup g = build_group(parse_group_arg(group_arg));
    auto run_one = [&](const StandardRep& rep2, const StandardRep& rep1, json* out) -> bool {
        auto comps = compose_formula(rep2, rep1);
        if (out) {
            json jcomps = json::array();
            for (const auto& c : comps)
                jcomps.push_back(json{{"rep", rep_to_json(c)}, {"key", key_to_json(canonical_key(c))}});
            (*out)["components"] = jcomps;
        }
        if (!oracle) return true;
        std::multiset<CanonicalKey> formula, brute;
        for (const auto& c : comps) formula.insert(canonical_key(c));
        for (const auto& [rep, bp] : components(compose_bruteforce(realize(rep2), realize(rep1))))
            brute.insert(canonical_key(rep));
        return formula == brute;
    };

    if (sweep > 0) {
        auto subs = enumerate_subgroups(g);
        std::mt19937 rng(opt.seed);
        int done = 0, attempts = 0;
        while (done < sweep && attempts < sweep * 200) {
            ++attempts;
            const Subgroup& h3 = subs[rng() % subs.size()];
            const Subgroup& h2 = subs[rng() % subs.size()];
            const Subgroup& h1 = subs[rng() % subs.size()];
            auto reps2 = enumerate_indecomposables(h3, h2, subs);
            auto reps1 = enumerate_indecomposables(h2, h1, subs);
            if (reps2.empty() || reps1.empty()) continue;
            const StandardRep& r2 = reps2[rng() % reps2.size()];
            const StandardRep& r1 = reps1[rng() % reps1.size()];
            if (!run_one(r2, r1, nullptr)) {
                json doc{{"verdict", "mismatch"},
                         {"rep2", rep_to_json(r2)},
                         {"rep1", rep_to_json(r1)}};
                emit(opt, doc, "oracle mismatch\n");
                return kExitOracleMismatch;
            }
            ++done;
        }
        json doc{{"verdict", "ok"}, {"pairs_checked", done}, {"seed", opt.seed}};
        emit(opt, doc, "oracle sweep ok: " + std::to_string(done) + " pairs\n");
        return kExitOk;
    }

    StandardRep rep2 = rep_from_json(g, parse_json_arg(rep2_arg, "rep2"));
    StandardRep rep1 = rep_from_json(g, parse_json_arg(rep1_arg, "rep1"));
    json doc;
    bool ok = run_one(rep2, rep1, &doc);
    doc["oracle"] = oracle ? (ok ? "match" : "mismatch") : "skipped";
    std::string text;
    for (const auto& c : doc["components"]) text += c["key"].dump() + "\n";
    emit(opt, doc, text);
    return ok ? kExitOk : kExitOracleMismatch;
}

int cmd_factorize(const Options& opt, const std::string& group_arg, const std::string& rep_arg) {
    FiniteGroup g = build_group(parse_group_arg(group_arg));
    StandardRep rep = rep_from_json(g, parse_json_arg(rep_arg, "rep"));
    Factorization f = factorize(rep);
    auto part = [&](const StandardRep& r) {
        BisetClass c = classify(r);
        return json{{"rep", rep_to_json(r)},
                    {"restriction", c.restriction},
                    {"induction", c.induction},
                    {"conjugation", c.conjugation}};
    };
    auto inner = compose_formula(f.iso, f.res);
    auto outer = compose_formula(f.ind, inner.at(0));
    bool round_trip = outer.size() == 1 && canonical_key(outer[0]) == canonical_key(rep);
    json doc{{"ind", part(f.ind)},
             {"iso", part(f.iso)},
             {"res", part(f.res)},
             {"recomposition", round_trip ? "match" : "mismatch"}};
    if (f.realizing)
        doc["realizing"] = *f.realizing;
    else
        doc["realizing"] = nullptr;
    std::string text = std::string("factorized; iso is ") +
                       (f.realizing ? "conjugation (g=" + std::to_string(*f.realizing) + ")"
                                    : "not conjugation") +
                       "\n";
    emit(opt, doc, text);
    return round_trip ? kExitOk : kExitAxiomFailure;
}

int cmd_transpose(const Options& opt, const std::string& group_arg, const std::string& rep_arg) {
    FiniteGroup g = build_group(parse_group_arg(group_arg));
    StandardRep rep = rep_from_json(g, parse_json_arg(rep_arg, "rep"));
    StandardRep t = transpose(rep);
    json doc{{"transpose", rep_to_json(t)}, {"key", key_to_json(canonical_key(t))}};
    emit(opt, doc, doc["transpose"].dump() + "\n");
    return kExitOk;
}

int cmd_pullback(const Options& opt, const std::string& group_arg, const std::string& k_arg,
                 const std::string& h1_arg, int g1, const std::string& h2_arg, int g2,
                 bool oracle) {
    FiniteGroup g = build_group(parse_group_arg(group_arg));
    Subgroup k = subgroup_from_json(g, parse_json_arg(k_arg, "k"));
    Subgroup h1 = subgroup_from_json(g, parse_json_arg(h1_arg, "h1"));
    Subgroup h2 = subgroup_from_json(g, parse_json_arg(h2_arg, "h2"));
    GMap psi = single_orbit_gmap(h1, k, g1);
    GMap phi = single_orbit_gmap(h2, k, g2);
    PullbackResult pb = pullback(psi, phi);
    json orbits = json::array();
    int points = 0;
    for (const auto& o : pb.object.orbits) {
        orbits.push_back(json{{"stabilizer", o.elements}, {"size", g.order / o.size()}});
        points += g.order / o.size();
    }
    json doc{{"orbits", orbits},
             {"points", points},
             {"proj1", gmap_to_json(pb.proj1)},
             {"proj2", gmap_to_json(pb.proj2)}};
    if (oracle) {
        // brute force on explicit cosets
        GSetTable c1 = coset_table(h1), c2 = coset_table(h2), ck = coset_table(k);
        auto base = [&](const GSetTable& c, const Subgroup& s) {
            for (int p = 0; p < c.size; ++p) {
                int stab = 0;
                for (int x = 0; x < g.order; ++x)
                    if (c.action[x][p] == p) ++stab;
                bool fixed = true;
                for (int e : s.elements) fixed = fixed && c.action[e][p] == p;
                if (fixed && stab == s.size()) return p;
            }
            return -1;
        };
        int b1 = base(c1, h1), b2 = base(c2, h2), bk = base(ck, k);
        std::vector<std::pair<int, int>> pts;
        std::map<std::pair<int, int>, int> index;
        for (int x = 0; x < g.order; ++x)
            for (int y = 0; y < g.order; ++y) {
                std::pair<int, int> pt{c1.action[x][b1], c2.action[y][b2]};
                if (index.count(pt)) continue;
                if (ck.action[g.mul(x, g1)][bk] == ck.action[g.mul(y, g2)][bk]) {
                    index[pt] = static_cast<int>(pts.size());
                    pts.push_back(pt);
                }
            }
        bool match = static_cast<int>(pts.size()) == points;
        doc["oracle"] = match ? "match" : "mismatch";
        if (!match) {
            emit(opt, doc, "pullback oracle mismatch\n");
            return kExitOracleMismatch;
        }
    }
    emit(opt, doc, "pullback with " + std::to_string(pb.object.orbits.size()) + " orbits, " +
                       std::to_string(points) + " points\n");
    return kExitOk;
}

LoadedMackey load_mackey(const Options&, const std::string& data_file,
                         const std::string& example, const std::string& group_arg) {
    if (!data_file.empty()) {
        std::ifstream in(data_file);
        if (!in) throw std::invalid_argument("cannot open data file " + data_file);
        json j = json::parse(in, nullptr, false);
        if (j.is_discarded()) throw std::invalid_argument("malformed JSON in " + data_file);
        return mackey_from_json(j);
    }
    if (example == "burnside") {
        GroupSpec spec = parse_group_arg(group_arg.empty() ? "S3" : group_arg);
        LoadedMackey out;
        out.spec = group_spec_to_json(spec);
        out.group = std::make_shared<FiniteGroup>(build_group(spec));
        out.data = burnside_example(*out.group);
        return out;
    }
    if (example == "fixedpoint-c2-z3") {
        LoadedMackey out;
        out.spec = group_spec_to_json(GroupSpec{GroupSpec::Kind::cyclic, 2, 0, {}, {}, {}});
        out.group = std::make_shared<FiniteGroup>(make_cyclic(2));
        out.data = fixed_point_example(*out.group, FgAbelianGroup{{3}}, {{{1}}, {{2}}});
        return out;
    }
    throw std::invalid_argument("provide --data FILE or --example burnside|fixedpoint-c2-z3");
}

int cmd_mackey_check(const Options& opt, const LoadedMackey& lm) {
    CheckReport structure = validate_structure(lm.data);
    json doc{{"structure", check_report_to_json(structure)}};
    if (!structure.pass) {
        emit(opt, doc, "structure: fail\n");
        return kExitAxiomFailure;
    }
    CheckReport m2 = check_M2(lm.data);
    CheckReport m1 = check_M1(lm.data);
    CheckReport ci = check_conjugation_invariance(lm.data);
    doc["M2"] = check_report_to_json(m2);
    doc["M1"] = check_report_to_json(m1);
    doc["conjugation_invariance"] = check_report_to_json(ci);
    std::string text = std::string("structure: pass\nM2: ") + (m2.pass ? "pass" : "fail") +
                       "\nM1: " + (m1.pass ? "pass" : "fail") + "\nconjugation invariance: " +
                       (ci.pass ? "pass" : "fail") + "\n";
    emit(opt, doc, text);
    if (!m2.pass || !m1.pass) return kExitAxiomFailure;
    if (!ci.pass) return kExitNotConjugationInvariant;
    return kExitOk;
}

int cmd_mackey_factor(const Options& opt, const LoadedMackey& lm) {
    CheckReport structure = validate_structure(lm.data);
    if (!structure.pass) {
        emit(opt, json{{"structure", check_report_to_json(structure)}}, "structure: fail\n");
        return kExitAxiomFailure;
    }
    BuildFResult r = build_F(lm.data);
    if (!r.ok) {
        json doc{{"verdict", "refused"}, {"refusal", check_report_to_json(r.refusal)}};
        emit(opt, doc, "refused: not conjugation invariant\n");
        return kExitNotConjugationInvariant;
    }
    CheckReport fun = verify_functoriality(r.functor, lm.data);
    CheckReport agree = check_factorization_agreement(r.functor, lm.data);
    size_t pairs = 0;
    for (const auto& [p, keys] : r.functor.keys_by_pair) {
        for (const auto& [q, keys2] : r.functor.keys_by_pair)
            if (p.first == q.second) pairs += keys.size() * keys2.size();
    }
    json doc{{"verdict", fun.pass && agree.pass ? "pass" : "fail"},
             {"keys", r.functor.table.size()},
             {"pairs_checked", pairs},
             {"functoriality", check_report_to_json(fun)},
             {"agreement", check_report_to_json(agree)}};
    emit(opt, doc,
         std::string(fun.pass && agree.pass ? "pass" : "fail") + ": " +
             std::to_string(r.functor.table.size()) + " keys, " + std::to_string(pairs) +
             " composable pairs\n");
    return fun.pass && agree.pass ? kExitOk : kExitAxiomFailure;
}

int cmd_burnside_emit(const Options& opt, const std::string& group_arg) {
    GroupSpec spec = parse_group_arg(group_arg);
    FiniteGroup g = build_group(spec);
    MackeyData d = burnside_example(g);
    json doc = mackey_to_json(d, group_spec_to_json(spec));
    emit(opt, doc, doc.dump(2) + "\n");
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite-group biset calculus"};
    app.require_subcommand(1);
    Options opt;
    app.add_option("--format", opt.format, "output format")->check(CLI::IsMember({"json", "table"}));
    app.add_option("--seed", opt.seed, "seed for sampled sweeps");

    std::string group_arg, rep_arg, rep2_arg, k_arg, h1_arg, h2_arg, data_file, example;
    int g1 = 0, g2 = 0, sweep = 0;
    bool oracle = false;

    auto* group_cmd = app.add_subcommand("group", "inspect a group");
    group_cmd->add_option("spec", group_arg, "group spec JSON or name")->required();

    auto* subgroups_cmd = app.add_subcommand("subgroups", "list subgroups");
    subgroups_cmd->add_option("spec", group_arg, "group spec JSON or name")->required();

    auto* compose_cmd = app.add_subcommand("compose", "compose standard representations");
    compose_cmd->add_option("--group", group_arg, "ambient group")->required();
    compose_cmd->add_option("--rep2", rep2_arg, "outer representation JSON");
    compose_cmd->add_option("--rep1", rep_arg, "inner representation JSON");
    compose_cmd->add_flag("--oracle", oracle, "cross-check against the balanced product");
    compose_cmd->add_option("--sweep", sweep, "random composable pairs to cross-check");

    auto* factorize_cmd = app.add_subcommand("factorize", "ind/iso/res factorization");
    factorize_cmd->add_option("--group", group_arg, "ambient group")->required();
    factorize_cmd->add_option("--rep", rep_arg, "representation JSON")->required();

    auto* transpose_cmd = app.add_subcommand("transpose", "conjugate transpose");
    transpose_cmd->add_option("--group", group_arg, "ambient group")->required();
    transpose_cmd->add_option("--rep", rep_arg, "representation JSON")->required();

    auto* pullback_cmd = app.add_subcommand("pullback", "pullback of two orbit maps");
    pullback_cmd->add_option("--group", group_arg, "ambient group")->required();
    pullback_cmd->add_option("--k", k_arg, "target subgroup K")->required();
    pullback_cmd->add_option("--h1", h1_arg, "first source subgroup")->required();
    pullback_cmd->add_option("--g1", g1, "first witness");
    pullback_cmd->add_option("--h2", h2_arg, "second source subgroup")->required();
    pullback_cmd->add_option("--g2", g2, "second witness");
    pullback_cmd->add_flag("--oracle", oracle, "cross-check against explicit cosets");

    auto* mackey_cmd = app.add_subcommand("mackey", "Mackey functor checks");
    mackey_cmd->require_subcommand(1);
    auto* check_cmd = mackey_cmd->add_subcommand("check", "run the axiom checkers");
    auto* factor_cmd = mackey_cmd->add_subcommand("factor", "build and verify the factorization");
    for (auto* c : {check_cmd, factor_cmd}) {
        c->add_option("--data", data_file, "MackeyData JSON file");
        c->add_option("--example", example, "built-in example")
            ->check(CLI::IsMember({"burnside", "fixedpoint-c2-z3"}));
        c->add_option("--group", group_arg, "group for --example burnside");
    }

    auto* burnside_cmd = app.add_subcommand("burnside", "Burnside-ring functors");
    auto* emit_cmd = burnside_cmd->add_subcommand("emit", "emit MackeyData JSON");
    emit_cmd->add_option("--group", group_arg, "group spec JSON or name")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitBadInput;
    }

    try {
        if (group_cmd->parsed()) return cmd_group(opt, group_arg, false);
        if (subgroups_cmd->parsed()) return cmd_group(opt, group_arg, true);
        if (compose_cmd->parsed()) {
            if (sweep == 0 && (rep2_arg.empty() || rep_arg.empty()))
                throw std::invalid_argument("compose needs --rep2 and --rep1, or --sweep N");
            if (sweep > 0) oracle = true;
            return cmd_compose(opt, group_arg, rep2_arg, rep_arg, oracle, sweep);
        }
        if (factorize_cmd->parsed()) return cmd_factorize(opt, group_arg, rep_arg);
        if (transpose_cmd->parsed()) return cmd_transpose(opt, group_arg, rep_arg);
        if (pullback_cmd->parsed())
            return cmd_pullback(opt, group_arg, k_arg, h1_arg, g1, h2_arg, g2, oracle);
        if (check_cmd->parsed())
            return cmd_mackey_check(opt, load_mackey(opt, data_file, example, group_arg));
        if (factor_cmd->parsed())
            return cmd_mackey_factor(opt, load_mackey(opt, data_file, example, group_arg));
        if (emit_cmd->parsed()) return cmd_burnside_emit(opt, group_arg);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return kExitBadInput;
}
