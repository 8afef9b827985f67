#include "triclub/dp_treewidth.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace triclub {

int r_A(const Graph& g, const VertexSet& a, int u, int v) {
    if (!a.contains(u) || !a.contains(v))
        throw std::invalid_argument("r_A: endpoint outside A");
    if (!g.has_edge(u, v)) return 0;
    int count = 0;
    for (int w : g.neighbors(u))
        if (a.contains(w) && g.has_edge(w, v)) ++count;
    return count;
}

int edges_in_neighborhood(const Graph& g, const VertexSet& a, int v) {
    if (!a.contains(v)) throw std::invalid_argument("edges_in_neighborhood: vertex outside A");
    std::vector<int> nb;
    for (int w : g.neighbors(v))
        if (a.contains(w)) nb.push_back(w);
    int count = 0;
    for (std::size_t i = 0; i < nb.size(); ++i)
        for (std::size_t j = i + 1; j < nb.size(); ++j)
            if (g.has_edge(nb[i], nb[j])) ++count;
    return count;
}

void DpTuple::normalize() {
    std::vector<std::pair<int, int>> mf;
    for (std::size_t i = 0; i < members.size(); ++i) mf.emplace_back(members[i], f_values[i]);
    std::sort(mf.begin(), mf.end());
    for (std::size_t i = 0; i < mf.size(); ++i) {
        members[i] = mf[i].first;
        f_values[i] = mf[i].second;
    }
    for (auto& b : family) std::sort(b.begin(), b.end());
    std::sort(family.begin(), family.end());
    family.erase(std::unique(family.begin(), family.end()), family.end());
}

namespace {

int f_of(const DpTuple& t, int v) {
    for (std::size_t i = 0; i < t.members.size(); ++i)
        if (t.members[i] == v) return t.f_values[i];
    return -1;
}

VertexSet as_set(const Graph& g, const std::vector<int>& vs) {
    return VertexSet::from_vertices(g.vertex_count(), vs);
}

bool family_has(const std::vector<std::vector<int>>& fam, const std::vector<int>& b) {
    return std::find(fam.begin(), fam.end(), b) != fam.end();
}

}  // namespace

bool introduce_compatible(const DpTuple& parent, const DpTuple& child, int v, const Graph& g,
                          int r) {
    VertexSet a = as_set(g, parent.members);
    if (!a.contains(v)) throw std::invalid_argument("introduce_compatible: v not in parent A");
    // Child must be over A \ {v}.
    std::vector<int> expected = parent.members;
    expected.erase(std::find(expected.begin(), expected.end(), v));
    if (child.members != expected) return false;

    for (int u : child.members)
        if (f_of(parent, u) != std::min(r, f_of(child, u) + r_A(g, a, u, v))) return false;
    if (f_of(parent, v) != std::min(r, edges_in_neighborhood(g, a, v))) return false;
    if (parent.family != child.family) return false;
    for (const auto& b : child.family) {
        bool hits = false;
        for (int x : b)
            if (g.has_edge(x, v)) {
                hits = true;
                break;
            }
        if (!hits) return false;
    }
    return true;
}

bool forget_compatible(const DpTuple& parent, const DpTuple& child, int v, const Graph& g,
                       int r) {
    std::vector<int> expected = parent.members;
    expected.insert(std::upper_bound(expected.begin(), expected.end(), v), v);
    if (child.members != expected) return false;

    if (f_of(child, v) != r) return false;
    for (int u : parent.members)
        if (f_of(child, u) != f_of(parent, u)) return false;

    for (const auto& b : child.family) {
        auto it = std::find(b.begin(), b.end(), v);
        if (it != b.end()) {
            std::vector<int> without(b);
            without.erase(std::find(without.begin(), without.end(), v));
            if (!family_has(parent.family, without)) return false;
        } else {
            if (!family_has(parent.family, b)) return false;
        }
    }

    std::vector<int> nv;
    for (int w : g.neighbors(v))
        if (std::binary_search(parent.members.begin(), parent.members.end(), w)) nv.push_back(w);
    if (!family_has(parent.family, nv)) return false;

    VertexSet aprime = as_set(g, child.members);
    for (int x : parent.members) {
        bool shared = false;
        for (const auto& b : child.family)
            if (std::binary_search(b.begin(), b.end(), x) &&
                std::binary_search(b.begin(), b.end(), v)) {
                shared = true;
                break;
            }
        if (shared) continue;
        if (g.has_edge(x, v)) continue;
        bool two = false;
        for (int w : child.members)
            if (w != x && w != v && g.has_edge(x, w) && g.has_edge(w, v)) {
                two = true;
                break;
            }
        if (!two) return false;
    }
    return true;
}

bool join_compatible(const DpTuple& parent, const DpTuple& left, const DpTuple& right,
                     const Graph& g, int r) {
    if (left.members != parent.members || right.members != parent.members) return false;

    std::vector<std::vector<int>> merged = left.family;
    merged.insert(merged.end(), right.family.begin(), right.family.end());
    std::sort(merged.begin(), merged.end());
    merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
    if (merged != parent.family) return false;

    VertexSet a = as_set(g, parent.members);
    for (int u : parent.members) {
        int e = edges_in_neighborhood(g, a, u);
        int f1 = f_of(left, u), f2 = f_of(right, u);
        int combined = (f1 == r || f2 == r) ? r : std::min(r, f1 + f2 - e);
        if (f_of(parent, u) != combined) return false;
    }

    for (const auto& p : left.family)
        for (const auto& q : right.family) {
            bool meet = false;
            for (int x : p)
                if (std::binary_search(q.begin(), q.end(), x)) {
                    meet = true;
                    break;
                }
            if (!meet) return false;
        }
    return true;
}

// ---------------------------------------------------------------------------
// Packed table engine.
// ---------------------------------------------------------------------------

namespace {

constexpr int kFBits = 6;
constexpr std::uint64_t kFMask = (1u << kFBits) - 1;

int get_f(std::uint64_t f, int pos) { return (int)((f >> (kFBits * pos)) & kFMask); }

std::uint64_t set_f(std::uint64_t f, int pos, int val) {
    f &= ~(kFMask << (kFBits * pos));
    f |= (std::uint64_t)val << (kFBits * pos);
    return f;
}

// Bag-local adjacency context for one nice node.
struct BagCtx {
    std::vector<int> bag;            // sorted global ids
    std::array<std::uint32_t, kMaxDpBag> adjb{};  // adjb[i]: positions adjacent to bag[i]

    static BagCtx build(const Graph& g, const std::vector<int>& bag) {
        if ((int)bag.size() > kMaxDpBag)
            throw ResourceLimit("bag of size " + std::to_string(bag.size()) +
                                " exceeds the supported DP width");
        BagCtx ctx;
        ctx.bag = bag;
        for (std::size_t i = 0; i < bag.size(); ++i)
            for (std::size_t j = 0; j < bag.size(); ++j)
                if (i != j && g.has_edge(bag[i], bag[j])) ctx.adjb[i] |= 1u << j;
        return ctx;
    }

    int pos_of(int v) const {
        auto it = std::lower_bound(bag.begin(), bag.end(), v);
        return (int)(it - bag.begin());
    }

    // Triangles of G[A] containing both u and v.
    int r_a(std::uint32_t a, int u, int v) const {
        if (!((adjb[u] >> v) & 1)) return 0;
        return __builtin_popcount(adjb[u] & adjb[v] & a);
    }

    // Edges of G[A] among N(v) ∩ A.
    int edges_nb(std::uint32_t a, int v) const {
        std::uint32_t nb = adjb[v] & a;
        int total = 0;
        std::uint32_t it = nb;
        while (it) {
            int i = __builtin_ctz(it);
            it &= it - 1;
            total += __builtin_popcount(adjb[i] & nb);
        }
        return total / 2;
    }
};

// Inserts a bit position `pos` worth of zero into a mask (shifting higher bits up).
std::uint32_t widen_mask(std::uint32_t m, int pos) {
    std::uint32_t low = m & ((1u << pos) - 1);
    std::uint32_t high = (m >> pos) << (pos + 1);
    return low | high;
}

// Removes bit position `pos` from a mask (the bit must be clear or is dropped).
std::uint32_t narrow_mask(std::uint32_t m, int pos) {
    std::uint32_t low = m & ((1u << pos) - 1);
    std::uint32_t high = (m >> (pos + 1)) << pos;
    return low | high;
}

std::uint64_t widen_f(std::uint64_t f, int pos) {
    std::uint64_t low = f & ((std::uint64_t{1} << (kFBits * pos)) - 1);
    std::uint64_t high = (f >> (kFBits * pos)) << (kFBits * (pos + 1));
    return low | high;
}

std::uint64_t narrow_f(std::uint64_t f, int pos) {
    std::uint64_t low = f & ((std::uint64_t{1} << (kFBits * pos)) - 1);
    std::uint64_t high = (f >> (kFBits * (pos + 1))) << (kFBits * pos);
    return low | high;
}

template <typename Fn>
std::uint64_t remap_family(std::uint64_t fam, Fn&& mask_map) {
    std::uint64_t out = 0;
    while (fam) {
        int m = __builtin_ctzll(fam);
        fam &= fam - 1;
        out |= std::uint64_t{1} << mask_map((std::uint32_t)m);
    }
    return out;
}

struct TableBuilder {
    long long states = 0;
    long long max_states;

    explicit TableBuilder(long long cap) : max_states(cap) {}

    void merge(NodeTable& t, const DpKey& key, int value, DpEntry::Tag tag, const DpKey& c1,
               const DpKey& c2 = {}) {
        auto it = t.find(key);
        if (it == t.end()) {
            if (++states > max_states) throw ResourceLimit("DP state cap exceeded");
            t.emplace(key, DpEntry{value, tag, c1, c2});
        } else if (value > it->second.value) {
            it->second = DpEntry{value, tag, c1, c2};
        }
    }

    NodeTable leaf() {
        NodeTable t;
        merge(t, DpKey{}, 0, DpEntry::Tag::leaf, DpKey{});
        return t;
    }

    NodeTable introduce(const NodeTable& child, const BagCtx& parent_ctx, int v, int r) {
        NodeTable out;
        int pv = parent_ctx.pos_of(v);
        std::uint32_t vbit = 1u << pv;
        std::uint32_t nv = parent_ctx.adjb[pv];
        for (const auto& [ck, ce] : child) {
            std::uint32_t ap = widen_mask(ck.a, pv);
            std::uint64_t fp = widen_f(ck.f, pv);
            std::uint64_t famp = remap_family(ck.fam, [&](std::uint32_t m) { return widen_mask(m, pv); });
            merge(out, DpKey{ap, fp, famp}, ce.value, DpEntry::Tag::intro_copy, ck);

            bool all_hit = true;
            std::uint64_t it = famp;
            while (it) {
                std::uint32_t b = (std::uint32_t)__builtin_ctzll(it);
                it &= it - 1;
                if ((b & nv) == 0) {
                    all_hit = false;
                    break;
                }
            }
            if (!all_hit) continue;

            std::uint32_t a = ap | vbit;
            std::uint64_t f = fp;
            std::uint32_t rest = ap;
            while (rest) {
                int u = __builtin_ctz(rest);
                rest &= rest - 1;
                f = set_f(f, u, std::min(r, get_f(fp, u) + parent_ctx.r_a(a, u, pv)));
            }
            f = set_f(f, pv, std::min(r, parent_ctx.edges_nb(a, pv)));
            merge(out, DpKey{a, f, famp}, ce.value + 1, DpEntry::Tag::intro_insert, ck);
        }
        return out;
    }

    NodeTable forget(const NodeTable& child, const BagCtx& child_ctx, int v, int r) {
        NodeTable out;
        int pv = child_ctx.pos_of(v);
        std::uint32_t vbit = 1u << pv;
        for (const auto& [ck, ce] : child) {
            if (!(ck.a & vbit)) {
                DpKey k{narrow_mask(ck.a, pv), narrow_f(ck.f, pv),
                        remap_family(ck.fam, [&](std::uint32_t m) { return narrow_mask(m, pv); })};
                merge(out, k, ce.value, DpEntry::Tag::forget_copy, ck);
                continue;
            }
            if (get_f(ck.f, pv) != r) continue;

            // Condition 5: every other member of A reaches v via a shared family
            // set, a direct edge, or a common neighbor inside A'.
            std::uint32_t cover = 0;
            std::uint64_t it = ck.fam;
            while (it) {
                std::uint32_t b = (std::uint32_t)__builtin_ctzll(it);
                it &= it - 1;
                if (b & vbit) cover |= b;
            }
            bool ok = true;
            std::uint32_t rest = ck.a & ~vbit;
            while (rest) {
                int x = __builtin_ctz(rest);
                rest &= rest - 1;
                if (cover & (1u << x)) continue;
                if ((child_ctx.adjb[pv] >> x) & 1) continue;
                if (child_ctx.adjb[x] & child_ctx.adjb[pv] & ck.a) continue;
                ok = false;
                break;
            }
            if (!ok) continue;

            std::uint64_t fam = 0;
            it = ck.fam;
            while (it) {
                std::uint32_t b = (std::uint32_t)__builtin_ctzll(it);
                it &= it - 1;
                fam |= std::uint64_t{1} << narrow_mask(b & ~vbit, pv);
            }
            fam |= std::uint64_t{1} << narrow_mask(child_ctx.adjb[pv] & (ck.a & ~vbit), pv);

            DpKey k{narrow_mask(ck.a & ~vbit, pv), narrow_f(set_f(ck.f, pv, 0), pv), fam};
            merge(out, k, ce.value, DpEntry::Tag::forget_insert, ck);
        }
        return out;
    }

    NodeTable join(const NodeTable& left, const NodeTable& right, const BagCtx& ctx, int r) {
        NodeTable out;
        std::map<std::uint32_t, std::vector<const std::pair<const DpKey, DpEntry>*>> by_a;
        for (const auto& kv : right) by_a[kv.first.a].push_back(&kv);
        std::map<std::uint32_t, std::array<int, kMaxDpBag>> edge_cache;
        for (const auto& [lk, le] : left) {
            auto it = by_a.find(lk.a);
            if (it == by_a.end()) continue;
            auto ec = edge_cache.find(lk.a);
            if (ec == edge_cache.end()) {
                std::array<int, kMaxDpBag> e{};
                std::uint32_t rest = lk.a;
                while (rest) {
                    int u = __builtin_ctz(rest);
                    rest &= rest - 1;
                    e[u] = ctx.edges_nb(lk.a, u);
                }
                ec = edge_cache.emplace(lk.a, e).first;
            }
            for (const auto* rkv : it->second) {
                const DpKey& rk = rkv->first;
                const DpEntry& re = rkv->second;
                bool meet = true;
                std::uint64_t pit = lk.fam;
                while (pit && meet) {
                    std::uint32_t p = (std::uint32_t)__builtin_ctzll(pit);
                    pit &= pit - 1;
                    std::uint64_t qit = rk.fam;
                    while (qit) {
                        std::uint32_t q = (std::uint32_t)__builtin_ctzll(qit);
                        qit &= qit - 1;
                        if ((p & q) == 0) {
                            meet = false;
                            break;
                        }
                    }
                }
                if (!meet) continue;
                std::uint64_t f = 0;
                std::uint32_t rest = lk.a;
                while (rest) {
                    int u = __builtin_ctz(rest);
                    rest &= rest - 1;
                    int f1 = get_f(lk.f, u), f2 = get_f(rk.f, u);
                    int val = (f1 == r || f2 == r) ? r : std::min(r, f1 + f2 - ec->second[u]);
                    f = set_f(f, u, val);
                }
                DpKey k{lk.a, f, lk.fam | rk.fam};
                merge(out, k, le.value + re.value - __builtin_popcount(lk.a),
                      DpEntry::Tag::join, lk, rk);
            }
        }
        return out;
    }
};

std::vector<int> postorder(const NiceTreeDecomposition& ntd) {
    std::vector<int> order;
    std::vector<std::pair<int, int>> stack{{ntd.root, 0}};
    while (!stack.empty()) {
        auto& [t, stage] = stack.back();
        if (stage < ntd.nodes[t].child_count) {
            int c = ntd.nodes[t].child[stage];
            ++stage;
            stack.emplace_back(c, 0);
        } else {
            order.push_back(t);
            stack.pop_back();
        }
    }
    return order;
}

}  // namespace

DpTable compute_table(const NiceTreeDecomposition& ntd, const Graph& g, int r,
                      const DpLimits& limits) {
    if (ntd.width() + 1 > kMaxDpBag)
        throw ResourceLimit("decomposition width " + std::to_string(ntd.width()) +
                            " exceeds the supported DP width");
    DpTable table;
    table.per_node.resize(ntd.nodes.size());
    TableBuilder tb(limits.max_states);
    for (int t : postorder(ntd)) {
        const NiceNode& nd = ntd.nodes[t];
        switch (nd.kind) {
            case NiceNode::Kind::leaf:
                table.per_node[t] = tb.leaf();
                break;
            case NiceNode::Kind::introduce: {
                BagCtx ctx = BagCtx::build(g, nd.bag);
                table.per_node[t] =
                    tb.introduce(table.per_node[nd.child[0]], ctx, nd.vertex, r);
                break;
            }
            case NiceNode::Kind::forget: {
                BagCtx ctx = BagCtx::build(g, ntd.nodes[nd.child[0]].bag);
                table.per_node[t] = tb.forget(table.per_node[nd.child[0]], ctx, nd.vertex, r);
                break;
            }
            case NiceNode::Kind::join: {
                BagCtx ctx = BagCtx::build(g, nd.bag);
                table.per_node[t] =
                    tb.join(table.per_node[nd.child[0]], table.per_node[nd.child[1]], ctx, r);
                break;
            }
        }
    }
    return table;
}

DpTuple decode_key(const NiceTreeDecomposition& ntd, int node, const DpKey& key) {
    const auto& bag = ntd.nodes[node].bag;
    DpTuple t;
    for (int i = 0; i < (int)bag.size(); ++i) {
        if ((key.a >> i) & 1) {
            t.members.push_back(bag[i]);
            t.f_values.push_back(get_f(key.f, i));
        }
    }
    std::uint64_t fam = key.fam;
    while (fam) {
        std::uint32_t m = (std::uint32_t)__builtin_ctzll(fam);
        fam &= fam - 1;
        std::vector<int> b;
        for (int i = 0; i < (int)bag.size(); ++i)
            if ((m >> i) & 1) b.push_back(bag[i]);
        t.family.push_back(b);
    }
    t.normalize();
    return t;
}

namespace {

void collect_witness(const DpTable& table, const NiceTreeDecomposition& ntd, int node,
                     const DpKey& key, std::set<int>& out) {
    const DpEntry& e = table.per_node[node].at(key);
    switch (e.tag) {
        case DpEntry::Tag::leaf:
            return;
        case DpEntry::Tag::intro_insert:
            out.insert(ntd.nodes[node].vertex);
            [[fallthrough]];
        case DpEntry::Tag::intro_copy:
        case DpEntry::Tag::forget_copy:
        case DpEntry::Tag::forget_insert:
            collect_witness(table, ntd, ntd.nodes[node].child[0], e.child1, out);
            return;
        case DpEntry::Tag::join:
            collect_witness(table, ntd, ntd.nodes[node].child[0], e.child1, out);
            collect_witness(table, ntd, ntd.nodes[node].child[1], e.child2, out);
            return;
    }
}

}  // namespace

SolveResult solve_treewidth(const Graph& g, const TreeDecomposition& td, int r, int ell,
                            const DpLimits& limits) {
    (void)ell;
    if (r < 1) throw std::invalid_argument("r must be >= 1");
    TdViolation v = validate(td, g);
    if (!v.ok())
        throw std::invalid_argument("solve_treewidth: invalid decomposition: " + to_string(v));

    SolveResult best;
    best.witness = VertexSet(g.vertex_count());

    int w = td.width();
    if ((long long)r > (long long)w * (w - 1) / 2) return best;  // degeneracy cutoff

    VertexSet alive = peel_low_triangle_vertices(g, r);
    if (alive.empty()) return best;
    InducedSubgraph sub = induced_subgraph(g, alive);
    const Graph& gp = sub.graph;

    TreeDecomposition tdp;
    tdp.edges = td.edges;
    tdp.bags.reserve(td.bags.size());
    for (const auto& bag : td.bags) {
        std::vector<int> nb;
        for (int x : bag)
            if (sub.new_id[x] >= 0) nb.push_back(sub.new_id[x]);
        std::sort(nb.begin(), nb.end());
        tdp.bags.push_back(nb);
    }

    NiceTreeDecomposition ntd = make_nice(tdp, gp);
    if (ntd.width() + 1 > kMaxDpBag)
        throw ResourceLimit("decomposition width " + std::to_string(ntd.width()) +
                            " exceeds the supported DP width");

    // Distinct guesses A_w = N[w] ∩ S for some center w; host node = first bag
    // containing the set. The DP answer for a guess depends only on the set.
    std::map<std::vector<int>, int> hosts;
    for (int p = 0; p < (int)ntd.nodes.size(); ++p) {
        const auto& bag = ntd.nodes[p].bag;
        int bs = (int)bag.size();
        for (std::uint32_t m = 1; m < (1u << bs); ++m) {
            std::vector<int> a;
            for (int i = 0; i < bs; ++i)
                if ((m >> i) & 1) a.push_back(bag[i]);
            bool centered = false;
            for (int wv : a) {
                bool all = true;
                for (int x : a)
                    if (x != wv && !gp.has_edge(wv, x)) {
                        all = false;
                        break;
                    }
                if (all) {
                    centered = true;
                    break;
                }
            }
            if (centered && !hosts.count(a)) hosts[a] = p;
        }
    }

    for (const auto& [aw, p] : hosts) {
        if (best.best_size == gp.vertex_count()) break;
        NiceTreeDecomposition rooted = reroot_for_guess(ntd, p, aw);
        DpTable table = compute_table(rooted, gp, r, limits);
        const auto& root_bag = rooted.nodes[rooted.root].bag;
        std::uint32_t full = (1u << root_bag.size()) - 1;
        for (const auto& [key, entry] : table.per_node[rooted.root]) {
            if (key.a != full) continue;
            bool all_r = true;
            for (int i = 0; i < (int)root_bag.size(); ++i)
                if (get_f(key.f, i) != r) {
                    all_r = false;
                    break;
                }
            if (!all_r) continue;
            if (entry.value < best.best_size) continue;
            std::set<int> members;
            collect_witness(table, rooted, rooted.root, key, members);
            if ((int)members.size() != entry.value)
                throw std::logic_error("dp witness size mismatch");
            std::vector<int> original;
            for (int x : members) original.push_back(sub.original_id[x]);
            std::sort(original.begin(), original.end());
            if (entry.value > best.best_size ||
                (entry.value == best.best_size && !best.witness.empty() &&
                 original < best.witness.to_vector())) {
                best.best_size = entry.value;
                best.witness = VertexSet::from_vertices(g.vertex_count(), original);
            }
        }
    }

    if (best.best_size > 0) {
        ProblemInstance check{g, r, 2, best.best_size};
        if (!verify_solution(check, best.witness).ok())
            throw std::logic_error("dp produced an invalid witness");
    }
    return best;
}

}  // namespace triclub
