#include "pfg/io.hpp"

#include <fstream>
#include <sstream>

namespace pfg {

using nlohmann::json;
using nlohmann::ordered_json;

ordered_json group_to_json(const FiniteGroup& g) {
    ordered_json j;
    j["order"] = g.order();
    ordered_json rows = ordered_json::array();
    for (int a = 0; a < g.order(); ++a) {
        ordered_json row = ordered_json::array();
        for (int b = 0; b < g.order(); ++b)
            row.push_back(g.op(a, b));
        rows.push_back(std::move(row));
    }
    j["table"] = std::move(rows);
    j["name"] = g.name();
    return j;
}

FiniteGroup group_from_json(const json& j) {
    if (!j.is_object() || !j.contains("order") || !j.contains("table"))
        throw ValidationError("group file must be an object with 'order' and 'table'");
    const int order = j.at("order").get<int>();
    std::vector<std::vector<int>> table = j.at("table").get<std::vector<std::vector<int>>>();
    if (static_cast<int>(table.size()) != order)
        throw ValidationError("group file: declared order " + std::to_string(order) +
                              " does not match table size " + std::to_string(table.size()));
    std::string name = j.value("name", std::string{});
    return FiniteGroup::from_table(table, std::move(name));
}

namespace {

FiniteGroup registry_lookup(const std::string& name, bool& ok);

FiniteGroup try_product_name(const std::string& name, bool& ok) {
    for (std::size_t pos = 1; pos + 1 < name.size(); ++pos) {
        if (name[pos] != 'x')
            continue;
        bool lok = false, rok = false;
        FiniteGroup left = registry_lookup(name.substr(0, pos), lok);
        if (!lok)
            continue;
        FiniteGroup right = registry_lookup(name.substr(pos + 1), rok);
        if (!rok)
            continue;
        ok = true;
        auto g = make_product_group(left, right);
        g.set_name(name);
        return g;
    }
    ok = false;
    return make_cyclic(1);
}

FiniteGroup registry_lookup(const std::string& name, bool& ok) {
    ok = true;
    auto suffix_int = [&](std::size_t from) -> int {
        try {
            std::size_t used = 0;
            int v = std::stoi(name.substr(from), &used);
            if (used != name.size() - from)
                return -1;
            return v;
        } catch (...) {
            return -1;
        }
    };
    if (name == "V4" || name == "Klein4")
        return make_klein_four();
    if (name.size() >= 2 && name[0] == 'Z' && name.find('x') == std::string::npos) {
        int n = suffix_int(1);
        if (n >= 1 && n <= 12)
            return make_cyclic(n);
    }
    if (name.size() >= 2 && name[0] == 'D') {
        int n = suffix_int(1);
        if (n >= 3 && n <= 6)
            return make_dihedral(n);
    }
    if (name == "S3")
        return make_symmetric(3);
    if (name == "S4")
        return make_symmetric(4);
    if (name.find('x') != std::string::npos)
        return try_product_name(name, ok);
    ok = false;
    return make_cyclic(1);
}

} // namespace

FiniteGroup registry_group(const std::string& name) {
    bool ok = false;
    FiniteGroup g = registry_lookup(name, ok);
    if (!ok)
        throw ValidationError("unknown group name '" + name + "'");
    return g;
}

std::vector<std::string> registry_names() {
    std::vector<std::string> names;
    for (int n = 1; n <= 12; ++n)
        names.push_back("Z" + std::to_string(n));
    for (int n = 3; n <= 6; ++n)
        names.push_back("D" + std::to_string(n));
    names.push_back("S3");
    names.push_back("S4");
    names.push_back("V4");
    names.push_back("Z2xZ4");
    return names;
}

namespace {

Rational rational_from_json(const json& v, std::size_t element) {
    try {
        if (v.is_string())
            return Rational::parse(v.get<std::string>());
        if (v.is_number_integer())
            return Rational(v.get<std::int64_t>());
    } catch (const Error& e) {
        throw ValidationError("element " + std::to_string(element) + ": " + e.what());
    }
    throw ValidationError("element " + std::to_string(element) +
                          ": rationals must be strings \"p/q\" or integers");
}

} // namespace

LoadedPfs pfs_from_json(const json& j) {
    if (!j.is_object() || !j.contains("carrier") || !j.contains("triples"))
        throw ValidationError("PFS file must be an object with 'carrier' and 'triples'");
    FiniteGroup group = j.at("carrier").is_string()
                            ? registry_group(j.at("carrier").get<std::string>())
                            : group_from_json(j.at("carrier"));
    const json& rows = j.at("triples");
    if (!rows.is_array())
        throw ValidationError("'triples' must be an array");
    std::vector<PictureTriple> triples;
    triples.reserve(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const json& row = rows[i];
        if (!row.is_array() || row.size() != 3)
            throw ValidationError("element " + std::to_string(i) +
                                  ": each triple must be an array of three rationals");
        PictureTriple t{rational_from_json(row[0], i), rational_from_json(row[1], i),
                        rational_from_json(row[2], i)};
        if (!t.valid())
            throw ValidationError("element " + std::to_string(i) + ": triple (" +
                                  t.positive.str() + "," + t.neutral.str() + "," +
                                  t.negative.str() + ") has component outside [0,1] or sum > 1");
        triples.push_back(std::move(t));
    }
    PictureFuzzySet pfs = PictureFuzzySet::make(static_cast<std::size_t>(group.order()),
                                                std::move(triples));
    return {std::move(group), std::move(pfs)};
}

ordered_json pfs_to_json(const FiniteGroup& carrier, const PictureFuzzySet& q) {
    if (q.carrier_size() != static_cast<std::size_t>(carrier.order()))
        throw ValidationError("carrier mismatch while serializing PFS");
    ordered_json j;
    bool by_name = false;
    if (!carrier.name().empty()) {
        bool ok = false;
        FiniteGroup named = registry_lookup(carrier.name(), ok);
        by_name = ok && named.table() == carrier.table();
    }
    if (by_name)
        j["carrier"] = carrier.name();
    else
        j["carrier"] = group_to_json(carrier);
    ordered_json rows = ordered_json::array();
    for (const PictureTriple& t : q.triples())
        rows.push_back(ordered_json::array({t.positive.str(), t.neutral.str(), t.negative.str()}));
    j["triples"] = std::move(rows);
    return j;
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ValidationError("cannot open file '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw ValidationError("JSON parse error in '" + path + "': " + e.what());
    }
}

void save_json_file(const std::string& path, const ordered_json& j) {
    std::ofstream out(path);
    if (!out)
        throw ValidationError("cannot write file '" + path + "'");
    out << j.dump(2) << '\n';
}

FiniteGroup resolve_group(const std::string& name_or_path) {
    bool ok = false;
    FiniteGroup g = registry_lookup(name_or_path, ok);
    if (ok)
        return g;
    return group_from_json(load_json_file(name_or_path));
}

LoadedMap resolve_map(const std::string& spec, const FiniteGroup& source) {
    auto starts = [&](const char* prefix) { return spec.rfind(prefix, 0) == 0; };
    if (spec == "identity")
        return {source, source, identity_map(source)};
    if (spec == "constant")
        return {source, source, constant_map(source, source, source.identity())};
    if (starts("constant:")) {
        int v = std::stoi(spec.substr(9));
        return {source, source, constant_map(source, source, v)};
    }
    if (starts("mod:")) {
        int n = std::stoi(spec.substr(4));
        if (n < 1)
            throw ValidationError("mod map modulus must be >= 1");
        return {source, make_cyclic(n), mod_map(source.order(), n)};
    }
    if (starts("proj:")) {
        int which = std::stoi(spec.substr(5));
        const std::string& name = source.name();
        auto pos = name.find('x');
        if (pos == std::string::npos)
            throw ValidationError("projection needs a product group carrier named \"AxB\"");
        FiniteGroup left = registry_group(name.substr(0, pos));
        FiniteGroup right = registry_group(name.substr(pos + 1));
        if (left.order() * right.order() != source.order())
            throw ValidationError("carrier does not look like the product its name suggests");
        return {source, which == 0 ? left : right, projection_map(left, right, which)};
    }
    json j = load_json_file(spec);
    if (!j.is_object() || !j.contains("map"))
        throw ValidationError("map file must be an object with 'map'");
    FiniteGroup src = j.contains("source") && j.at("source").is_string()
                          ? registry_group(j.at("source").get<std::string>())
                          : (j.contains("source") ? group_from_json(j.at("source")) : source);
    if (src.order() != source.order() || src.table() != source.table())
        throw ValidationError("map source group does not match the PFS carrier");
    FiniteGroup tgt = j.at("target").is_string() ? registry_group(j.at("target").get<std::string>())
                                                 : group_from_json(j.at("target"));
    GroupMap f{src.order(), tgt.order(), j.at("map").get<std::vector<int>>()};
    if (static_cast<int>(f.map.size()) != src.order())
        throw ValidationError("map length does not match source order");
    for (int v : f.map)
        if (v < 0 || v >= tgt.order())
            throw ValidationError("map value outside target group");
    return {std::move(src), std::move(tgt), std::move(f)};
}

} // namespace pfg
