#include "pfg/group.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <set>

namespace pfg {

FiniteGroup FiniteGroup::from_table(const std::vector<std::vector<int>>& table, std::string name) {
    const int n = static_cast<int>(table.size());
    if (n == 0)
        throw ValidationError("group table is empty");

    FiniteGroup g;
    g.order_ = n;
    g.name_ = std::move(name);
    g.table_.resize(static_cast<std::size_t>(n) * n);
    for (int a = 0; a < n; ++a) {
        if (static_cast<int>(table[a].size()) != n)
            throw ValidationError("group table row " + std::to_string(a) + " has wrong length");
        for (int b = 0; b < n; ++b) {
            int v = table[a][b];
            if (v < 0 || v >= n)
                throw ValidationError("group table entry (" + std::to_string(a) + "," +
                                      std::to_string(b) + ") = " + std::to_string(v) +
                                      " violates closure");
            g.table_[static_cast<std::size_t>(a) * n + b] = v;
        }
    }

    auto raw = [&](int a, int b) { return g.table_[static_cast<std::size_t>(a) * n + b]; };

    // Identity.
    int e = -1;
    for (int c = 0; c < n && e < 0; ++c) {
        bool ok = true;
        for (int a = 0; a < n && ok; ++a)
            ok = raw(c, a) == a && raw(a, c) == a;
        if (ok)
            e = c;
    }
    if (e < 0)
        throw ValidationError("group table has no identity element");
    g.identity_ = e;

    // Inverses.
    g.inverse_.assign(static_cast<std::size_t>(n), -1);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            if (raw(a, b) == e && raw(b, a) == e) {
                g.inverse_[static_cast<std::size_t>(a)] = b;
                break;
            }
        }
        if (g.inverse_[static_cast<std::size_t>(a)] < 0)
            throw ValidationError("element " + std::to_string(a) + " has no inverse");
    }

    // Associativity, O(n^3).
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (raw(raw(a, b), c) != raw(a, raw(b, c)))
                    throw ValidationError("associativity fails at (" + std::to_string(a) + "," +
                                          std::to_string(b) + "," + std::to_string(c) + ")");
    return g;
}

bool FiniteGroup::is_abelian() const {
    for (int a = 0; a < order_; ++a)
        for (int b = a + 1; b < order_; ++b)
            if (op(a, b) != op(b, a))
                return false;
    return true;
}

int FiniteGroup::element_order(int a) const {
    check_element(a);
    int k = 1;
    int x = a;
    while (x != identity_) {
        x = op(x, a);
        ++k;
    }
    return k;
}

FiniteGroup make_cyclic(int n) {
    if (n < 1)
        throw ValidationError("cyclic group order must be >= 1");
    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            table[a][b] = (a + b) % n;
    return FiniteGroup::from_table(table, "Z" + std::to_string(n));
}

FiniteGroup make_dihedral(int n) {
    if (n < 2)
        throw ValidationError("dihedral parameter must be >= 2");
    const int m = 2 * n;
    auto compose = [n](int x, int y) {
        if (x < n && y < n)
            return (x + y) % n;             // rotation * rotation
        if (x < n)
            return (y + x) % n + n;         // rotation * reflection
        if (y < n)
            return (x - y + n) % n + n;     // reflection * rotation
        return (x - y + 2 * n) % n;         // reflection * reflection
    };
    std::vector<std::vector<int>> table(m, std::vector<int>(m));
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            table[a][b] = compose(a, b);
    return FiniteGroup::from_table(table, "D" + std::to_string(n));
}

FiniteGroup make_symmetric(int n) {
    if (n < 1 || n > 5)
        throw ValidationError("symmetric group parameter must be in [1,5]");
    std::vector<std::vector<int>> perms;
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    do {
        perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));

    auto rank = [&](const std::vector<int>& q) {
        return static_cast<int>(std::lower_bound(perms.begin(), perms.end(), q) - perms.begin());
    };
    const int m = static_cast<int>(perms.size());
    std::vector<std::vector<int>> table(m, std::vector<int>(m));
    std::vector<int> comp(static_cast<std::size_t>(n));
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) {
            // (a∘b)(i) = a[b[i]]
            for (int i = 0; i < n; ++i)
                comp[static_cast<std::size_t>(i)] =
                    perms[a][static_cast<std::size_t>(perms[b][static_cast<std::size_t>(i)])];
            table[a][b] = rank(comp);
        }
    return FiniteGroup::from_table(table, "S" + std::to_string(n));
}

FiniteGroup make_klein_four() {
    auto g = make_product_group(make_cyclic(2), make_cyclic(2));
    g.set_name("V4");
    return g;
}

FiniteGroup make_product_group(const FiniteGroup& g, const FiniteGroup& h) {
    const int n = g.order() * h.order();
    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a) {
        int ga = a / h.order(), ha = a % h.order();
        for (int b = 0; b < n; ++b) {
            int gb = b / h.order(), hb = b % h.order();
            table[a][b] = g.op(ga, gb) * h.order() + h.op(ha, hb);
        }
    }
    std::string name = (g.name().empty() || h.name().empty()) ? "" : g.name() + "x" + h.name();
    return FiniteGroup::from_table(table, name);
}

Subset::Subset(std::vector<int> members) : members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool Subset::contains(int a) const {
    return std::binary_search(members_.begin(), members_.end(), a);
}

static void check_subset(const FiniteGroup& g, const Subset& s) {
    for (int a : s.members())
        if (a < 0 || a >= g.order())
            throw ValidationError("subset member " + std::to_string(a) +
                                  " out of range for group of order " + std::to_string(g.order()));
}

bool is_subgroup(const FiniteGroup& g, const Subset& s) {
    check_subset(g, s);
    if (s.empty())
        return false;
    for (int a : s.members()) {
        if (!s.contains(g.inverse(a)))
            return false;
        for (int b : s.members())
            if (!s.contains(g.op(a, b)))
                return false;
    }
    return true;
}

bool is_normal_subgroup(const FiniteGroup& g, const Subset& s) {
    if (!is_subgroup(g, s))
        return false;
    for (int x = 0; x < g.order(); ++x)
        for (int a : s.members())
            if (!s.contains(g.conjugate(a, x)))
                return false;
    return true;
}

Subset translate_left(const FiniteGroup& g, int a, const Subset& s) {
    check_subset(g, s);
    std::vector<int> out;
    out.reserve(s.size());
    for (int x : s.members())
        out.push_back(g.op(a, x));
    return Subset(std::move(out));
}

Subset translate_right(const FiniteGroup& g, const Subset& s, int a) {
    check_subset(g, s);
    std::vector<int> out;
    out.reserve(s.size());
    for (int x : s.members())
        out.push_back(g.op(x, a));
    return Subset(std::move(out));
}

int subgroup_enumeration_cap() {
    if (const char* env = std::getenv("PFG_MAX_ORDER")) {
        int v = std::atoi(env);
        if (v > 0)
            return v;
    }
    return 24;
}

static std::vector<int> close_under(const FiniteGroup& g, std::vector<int> seed) {
    std::set<int> h(seed.begin(), seed.end());
    h.insert(g.identity());
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<int> cur(h.begin(), h.end());
        for (int a : cur) {
            if (h.insert(g.inverse(a)).second)
                grew = true;
            for (int b : cur)
                if (h.insert(g.op(a, b)).second)
                    grew = true;
        }
    }
    return {h.begin(), h.end()};
}

std::vector<Subset> enumerate_subgroups(const FiniteGroup& g) {
    return enumerate_subgroups(g, subgroup_enumeration_cap());
}

std::vector<Subset> enumerate_subgroups(const FiniteGroup& g, int max_order) {
    if (g.order() > max_order)
        throw ResourceLimitError("subgroup enumeration: group order " + std::to_string(g.order()) +
                                 " exceeds cap " + std::to_string(max_order));
    // BFS over generated subgroups: extend each known subgroup by one
    // outside element and close.
    std::set<std::vector<int>> seen;
    std::vector<std::vector<int>> queue;
    queue.push_back(close_under(g, {}));
    seen.insert(queue.back());
    for (std::size_t i = 0; i < queue.size(); ++i) {
        std::vector<int> h = queue[i];
        for (int x = 0; x < g.order(); ++x) {
            if (std::binary_search(h.begin(), h.end(), x))
                continue;
            std::vector<int> ext = h;
            ext.push_back(x);
            auto closed = close_under(g, std::move(ext));
            if (seen.insert(closed).second)
                queue.push_back(std::move(closed));
        }
    }
    std::vector<Subset> out;
    out.reserve(seen.size());
    for (auto& m : seen)
        out.emplace_back(m);
    std::sort(out.begin(), out.end(), [](const Subset& a, const Subset& b) {
        if (a.size() != b.size())
            return a.size() < b.size();
        return a.members() < b.members();
    });
    return out;
}

bool validate_homomorphism(const FiniteGroup& src, const FiniteGroup& tgt, const GroupMap& f) {
    if (static_cast<int>(f.map.size()) != src.order() || f.source_order != src.order())
        throw ValidationError("map length does not match source group order");
    if (f.target_order != tgt.order())
        throw ValidationError("map target order does not match target group");
    for (int v : f.map)
        if (v < 0 || v >= tgt.order())
            throw ValidationError("map value " + std::to_string(v) + " outside target group");
    for (int a = 0; a < src.order(); ++a)
        for (int b = 0; b < src.order(); ++b)
            if (f(src.op(a, b)) != tgt.op(f(a), f(b)))
                return false;
    return true;
}

GroupMap identity_map(const FiniteGroup& g) {
    GroupMap f{g.order(), g.order(), std::vector<int>(static_cast<std::size_t>(g.order()))};
    std::iota(f.map.begin(), f.map.end(), 0);
    return f;
}

GroupMap constant_map(const FiniteGroup& src, const FiniteGroup& tgt, int value) {
    if (value < 0 || value >= tgt.order())
        throw ValidationError("constant map value outside target group");
    return GroupMap{src.order(), tgt.order(),
                    std::vector<int>(static_cast<std::size_t>(src.order()), value)};
}

GroupMap mod_map(int m, int n) {
    if (m < 1 || n < 1)
        throw ValidationError("mod map orders must be positive");
    GroupMap f{m, n, std::vector<int>(static_cast<std::size_t>(m))};
    for (int a = 0; a < m; ++a)
        f.map[static_cast<std::size_t>(a)] = a % n;
    return f;
}

GroupMap projection_map(const FiniteGroup& g, const FiniteGroup& h, int which) {
    if (which != 0 && which != 1)
        throw ValidationError("projection index must be 0 or 1");
    const int n = g.order() * h.order();
    GroupMap f{n, which == 0 ? g.order() : h.order(), std::vector<int>(static_cast<std::size_t>(n))};
    for (int a = 0; a < n; ++a)
        f.map[static_cast<std::size_t>(a)] = which == 0 ? a / h.order() : a % h.order();
    return f;
}

SubgroupLattice build_subgroup_lattice(const FiniteGroup& g) {
    SubgroupLattice lat;
    lat.subgroups = enumerate_subgroups(g);
    const int m = static_cast<int>(lat.subgroups.size());
    lat.proper.resize(static_cast<std::size_t>(m));
    lat.normal.resize(static_cast<std::size_t>(m));
    lat.chain_depth.assign(static_cast<std::size_t>(m), 1);
    lat.normal_chain_depth.assign(static_cast<std::size_t>(m), 0);

    auto included = [](const Subset& a, const Subset& b) {
        return std::includes(b.members().begin(), b.members().end(),
                             a.members().begin(), a.members().end());
    };
    for (int i = 0; i < m; ++i) {
        lat.normal[static_cast<std::size_t>(i)] = is_normal_subgroup(g, lat.subgroups[static_cast<std::size_t>(i)]);
        if (lat.subgroups[static_cast<std::size_t>(i)].size() == static_cast<std::size_t>(g.order()))
            lat.full = i;
    }
    // Subgroups are sorted by size, so DP in index order is topological.
    for (int i = 0; i < m; ++i) {
        int depth = 1;
        int ndepth = lat.normal[static_cast<std::size_t>(i)] ? 1 : 0;
        for (int j = 0; j < m; ++j) {
            if (j == i || lat.subgroups[static_cast<std::size_t>(j)].size() >=
                              lat.subgroups[static_cast<std::size_t>(i)].size())
                continue;
            if (!included(lat.subgroups[static_cast<std::size_t>(j)], lat.subgroups[static_cast<std::size_t>(i)]))
                continue;
            lat.proper[static_cast<std::size_t>(i)].push_back(j);
            depth = std::max(depth, 1 + lat.chain_depth[static_cast<std::size_t>(j)]);
            if (lat.normal[static_cast<std::size_t>(i)] && lat.normal[static_cast<std::size_t>(j)] &&
                lat.normal_chain_depth[static_cast<std::size_t>(j)] > 0)
                ndepth = std::max(ndepth, 1 + lat.normal_chain_depth[static_cast<std::size_t>(j)]);
        }
        lat.chain_depth[static_cast<std::size_t>(i)] = depth;
        lat.normal_chain_depth[static_cast<std::size_t>(i)] = ndepth;
    }
    return lat;
}

} // namespace pfg
