#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "pfg/io.hpp"
#include "pfg/theorems.hpp"

using nlohmann::ordered_json;

namespace {

constexpr int kExitHolds = 0;
constexpr int kExitFails = 1;
constexpr int kExitUsage = 2;

struct Args {
    std::vector<std::string> pfs_paths;
    std::string group;
    std::string map_spec;
    std::string r, s, t;
    std::string mode = "pfsg";
    std::string kind = "pfsg";
    std::string side = "left";
    std::string out;
    std::vector<std::string> theorems;
    std::vector<std::string> groups;
    std::uint64_t seed = 7;
    int trials = 200;
    int max_order = 0;
    int element = 0;
    int chain_length = 1;
    bool strict = false;
    bool json = false;
    bool all = false;
};

pfg::LoadedPfs load_pfs_arg(const Args& a, std::size_t index = 0) {
    if (index >= a.pfs_paths.size())
        throw pfg::ValidationError("missing --pfs argument");
    pfg::LoadedPfs loaded = pfg::pfs_from_json(pfg::load_json_file(a.pfs_paths[index]));
    if (!a.group.empty()) {
        pfg::FiniteGroup g = pfg::resolve_group(a.group);
        if (g.table() != loaded.group.table())
            throw pfg::ValidationError("--group does not match the carrier in '" +
                                       a.pfs_paths[index] + "'");
        loaded.group = std::move(g);
    }
    return loaded;
}

void emit(const Args& a, const ordered_json& j, const std::string& human) {
    if (a.json)
        std::cout << j.dump() << '\n';
    else
        std::cout << human;
}

std::string witness_text(const pfg::PfsgWitness& w) {
    std::string s = pfg::clause_name(w.clause) + " at a=" + std::to_string(w.a);
    if (w.b >= 0)
        s += ", b=" + std::to_string(w.b);
    return s;
}

ordered_json witness_json(const std::optional<pfg::PfsgWitness>& w) {
    if (!w)
        return nullptr;
    ordered_json j;
    j["clause"] = pfg::clause_name(w->clause);
    j["a"] = w->a;
    j["b"] = w->b;
    return j;
}

int cmd_check(const Args& a) {
    pfg::LoadedPfs in = load_pfs_arg(a);
    pfg::PfsgVerdict v = pfg::is_pfsg(in.group, in.pfs);
    std::string label = a.mode;
    if (a.mode == "pfnsg" && v.holds)
        v = pfg::is_pfnsg_conjugation(in.group, in.pfs);
    ordered_json j;
    j["command"] = "check";
    j["mode"] = a.mode;
    j["holds"] = v.holds;
    j["witness"] = witness_json(v.witness);
    std::string human = label + (v.holds ? " holds\n" : " fails: " + witness_text(*v.witness) + "\n");
    emit(a, j, human);
    return v.holds ? kExitHolds : kExitFails;
}

int cmd_cut(const Args& a) {
    pfg::LoadedPfs in = load_pfs_arg(a);
    pfg::CutThreshold c = pfg::CutThreshold::make(
        pfg::Rational::parse(a.r), pfg::Rational::parse(a.s), pfg::Rational::parse(a.t));
    pfg::Subset cut = pfg::cut_set(in.pfs, c);
    std::string human;
    for (std::size_t i = 0; i < cut.size(); ++i)
        human += (i ? " " : "") + std::to_string(cut.members()[i]);
    human += '\n';
    ordered_json j;
    j["command"] = "cut";
    j["threshold"] = ordered_json::array({c.r.str(), c.s.str(), c.t.str()});
    j["members"] = cut.members();
    emit(a, j, human);
    return kExitHolds;
}

void write_or_print(const Args& a, const pfg::FiniteGroup& carrier, const pfg::PictureFuzzySet& q,
                    const char* command) {
    ordered_json file = pfg::pfs_to_json(carrier, q);
    if (!a.out.empty()) {
        pfg::save_json_file(a.out, file);
        emit(a, ordered_json{{"command", command}, {"out", a.out}},
             std::string("wrote ") + a.out + "\n");
        return;
    }
    std::string human;
    for (std::size_t i = 0; i < q.carrier_size(); ++i) {
        const pfg::PictureTriple& t = q.at(i);
        human += std::to_string(i) + ": (" + t.positive.str() + ", " + t.neutral.str() + ", " +
                 t.negative.str() + ")\n";
    }
    emit(a, file, human);
}

int cmd_coset(const Args& a) {
    pfg::LoadedPfs in = load_pfs_arg(a);
    if (a.side != "left" && a.side != "right")
        throw pfg::ValidationError("--side must be left or right");
    if (a.element < 0 || a.element >= in.group.order())
        throw pfg::ValidationError("--element out of range for carrier of order " +
                                   std::to_string(in.group.order()));
    pfg::PictureFuzzySet coset = a.side == "left" ? pfg::left_coset(in.group, in.pfs, a.element)
                                                  : pfg::right_coset(in.group, in.pfs, a.element);
    write_or_print(a, in.group, coset, "coset");
    return kExitHolds;
}

int cmd_product(const Args& a) {
    if (a.pfs_paths.size() != 2)
        throw pfg::ValidationError("product needs exactly two --pfs files");
    pfg::LoadedPfs lhs = pfg::pfs_from_json(pfg::load_json_file(a.pfs_paths[0]));
    pfg::LoadedPfs rhs = pfg::pfs_from_json(pfg::load_json_file(a.pfs_paths[1]));
    pfg::FiniteGroup carrier = pfg::make_product_group(lhs.group, rhs.group);
    pfg::PictureFuzzySet prod = pfg::cartesian_product(lhs.pfs, rhs.pfs);
    write_or_print(a, carrier, prod, "product");
    return kExitHolds;
}

int cmd_image(const Args& a) {
    pfg::LoadedPfs in = load_pfs_arg(a);
    if (a.map_spec.empty())
        throw pfg::ValidationError("image needs --map");
    pfg::LoadedMap m = pfg::resolve_map(a.map_spec, in.group);
    pfg::PictureFuzzySet img = pfg::image(m.map, in.pfs);
    write_or_print(a, m.target, img, "image");
    return kExitHolds;
}

int cmd_verify(const Args& a) {
    pfg::CampaignConfig cfg;
    cfg.groups = a.groups;
    cfg.trials = a.trials;
    cfg.seed = a.seed;
    cfg.strict = a.strict;
    if (!a.all)
        cfg.theorems = a.theorems;
    if (a.max_order > 0)
        cfg.max_product_order = a.max_order;
    std::vector<pfg::CampaignReport> reports = pfg::run_campaign(cfg);
    std::string jsonl = pfg::campaign_to_jsonl(reports);
    if (!a.out.empty()) {
        std::ofstream out(a.out);
        if (!out)
            throw pfg::ValidationError("cannot write file '" + a.out + "'");
        out << jsonl;
    }
    bool all_passed = true;
    if (a.json) {
        if (a.out.empty())
            std::cout << jsonl;
        for (const pfg::CampaignReport& r : reports)
            all_passed = all_passed && r.passed;
    } else {
        for (const pfg::CampaignReport& r : reports) {
            all_passed = all_passed && r.passed;
            std::cout << (r.passed ? "ok   " : "FAIL ") << r.theorem_id << "  instances="
                      << r.instances << " checks=" << r.checks << " non_vacuous=" << r.non_vacuous;
            if (r.lhs_true + r.lhs_false > 0)
                std::cout << " lhs_true=" << r.lhs_true << " lhs_false=" << r.lhs_false;
            if (r.low_coverage)
                std::cout << " (low coverage)";
            std::cout << '\n';
            if (r.counterexample)
                std::cout << "     counterexample: " << r.counterexample->dump() << '\n';
        }
        std::cout << (all_passed ? "all passed" : "FAILURES present") << '\n';
    }
    return all_passed ? kExitHolds : kExitFails;
}

int cmd_sample(const Args& a) {
    if (a.group.empty())
        throw pfg::ValidationError("sample needs --group");
    pfg::FiniteGroup g = pfg::resolve_group(a.group);
    pfg::PictureFuzzySet q = a.kind == "pfnsg"
                                 ? pfg::sample_pfnsg(g, a.seed, a.chain_length)
                                 : pfg::sample_pfsg(g, a.seed, a.chain_length);
    write_or_print(a, g, q, "sample");
    return kExitHolds;
}

int cmd_group(const Args& a) {
    if (a.group.empty())
        throw pfg::ValidationError("group needs --group");
    pfg::FiniteGroup g = pfg::resolve_group(a.group);
    const int cap = a.max_order > 0 ? a.max_order : pfg::subgroup_enumeration_cap();
    std::vector<pfg::Subset> subs = pfg::enumerate_subgroups(g, cap);
    ordered_json j;
    j["command"] = "group";
    j["name"] = g.name();
    j["order"] = g.order();
    j["abelian"] = g.is_abelian();
    j["identity"] = g.identity();
    ordered_json sj = ordered_json::array();
    std::string human = "group " + (g.name().empty() ? "(unnamed)" : g.name()) +
                        ", order " + std::to_string(g.order()) +
                        (g.is_abelian() ? ", abelian" : ", non-abelian") + "\nsubgroups:\n";
    for (const pfg::Subset& s : subs) {
        const bool normal = pfg::is_normal_subgroup(g, s);
        sj.push_back(ordered_json{{"members", s.members()}, {"normal", normal}});
        human += "  {";
        for (std::size_t i = 0; i < s.size(); ++i)
            human += (i ? "," : "") + std::to_string(s.members()[i]);
        human += normal ? "}  normal\n" : "}\n";
    }
    j["subgroups"] = std::move(sj);
    emit(a, j, human);
    return kExitHolds;
}

} // namespace

int main(int argc, char** argv) {
    Args a;
    CLI::App app{"Exact-arithmetic picture fuzzy set algebra over finite groups"};
    app.require_subcommand(1);

    auto add_common = [&](CLI::App* sub) {
        sub->add_flag("--json", a.json, "machine-readable JSON output");
        sub->add_option("--out", a.out, "write result to this file");
    };

    CLI::App* check = app.add_subcommand("check", "run a subgroup/normality predicate");
    check->add_option("--pfs", a.pfs_paths, "PFS file")->required()->expected(1);
    check->add_option("--group", a.group, "cross-check the carrier against this group");
    check->add_option("--mode", a.mode, "pfsg or pfnsg")
        ->check(CLI::IsMember({"pfsg", "pfnsg"}));
    add_common(check);

    CLI::App* cut = app.add_subcommand("cut", "compute a cut set");
    cut->add_option("--pfs", a.pfs_paths, "PFS file")->required()->expected(1);
    cut->add_option("--r", a.r, "positive threshold p/q")->required();
    cut->add_option("--s", a.s, "neutral threshold p/q")->required();
    cut->add_option("--t", a.t, "negative threshold p/q")->required();
    add_common(cut);

    CLI::App* coset = app.add_subcommand("coset", "compute a picture fuzzy coset");
    coset->add_option("--pfs", a.pfs_paths, "PFS file")->required()->expected(1);
    coset->add_option("--element", a.element, "translating element index")->required();
    coset->add_option("--side", a.side, "left or right")
        ->check(CLI::IsMember({"left", "right"}));
    add_common(coset);

    CLI::App* product = app.add_subcommand("product", "Cartesian product of two PFS");
    product->add_option("--pfs", a.pfs_paths, "two PFS files")->required()->expected(2);
    add_common(product);

    CLI::App* image = app.add_subcommand("image", "image of a PFS under a map");
    image->add_option("--pfs", a.pfs_paths, "PFS file")->required()->expected(1);
    image->add_option("--map", a.map_spec,
                      "identity | constant[:k] | mod:n | proj:0|1 | map file")
        ->required();
    add_common(image);

    CLI::App* verify = app.add_subcommand("verify", "run a verification campaign");
    verify->add_option("--theorem", a.theorems, "theorem tags to run (default: all)");
    verify->add_flag("--all", a.all, "run every theorem");
    verify->add_option("--groups", a.groups, "registry names or group files");
    verify->add_option("--trials", a.trials, "instances per theorem");
    verify->add_option("--seed", a.seed, "campaign seed");
    verify->add_flag("--strict", a.strict, "literal statement readings where they differ");
    verify->add_option("--max-order", a.max_order, "product group order cap");
    add_common(verify);

    CLI::App* sample = app.add_subcommand("sample", "sample a PFSG or PFNSG");
    sample->add_option("--group", a.group, "carrier group")->required();
    sample->add_option("--kind", a.kind, "pfsg or pfnsg")
        ->check(CLI::IsMember({"pfsg", "pfnsg"}));
    sample->add_option("--seed", a.seed, "sampler seed");
    sample->add_option("--chain-length", a.chain_length, "subgroup chain length");
    add_common(sample);

    CLI::App* group = app.add_subcommand("group", "inspect a group and its subgroups");
    group->add_option("--group", a.group, "registry name or group file")->required();
    group->add_option("--max-order", a.max_order, "subgroup enumeration cap");
    add_common(group);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (check->parsed())
            return cmd_check(a);
        if (cut->parsed())
            return cmd_cut(a);
        if (coset->parsed())
            return cmd_coset(a);
        if (product->parsed())
            return cmd_product(a);
        if (image->parsed())
            return cmd_image(a);
        if (verify->parsed())
            return cmd_verify(a);
        if (sample->parsed())
            return cmd_sample(a);
        if (group->parsed())
            return cmd_group(a);
        std::cerr << "error: no command\n";
        return kExitUsage;
    } catch (const pfg::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}
