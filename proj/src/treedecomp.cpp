#include "triclub/treedecomp.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>

namespace triclub {

std::string to_string(const TdViolation& v) {
    using K = TdViolation::Kind;
    switch (v.kind) {
        case K::none:
            return "ok";
        case K::malformed_tree:
            return "node graph is not a tree";
        case K::vertex_uncovered:
            return "vertex " + std::to_string(v.a) + " appears in no bag";
        case K::edge_uncovered:
            return "edge {" + std::to_string(v.a) + "," + std::to_string(v.b) +
                   "} has no common bag";
        case K::disconnected_occurrence:
            return "bags containing vertex " + std::to_string(v.a) + " are disconnected";
    }
    return "?";
}

namespace {

TdViolation check_decomposition_conditions(const std::vector<std::vector<int>>& bags,
                                           const std::vector<std::vector<int>>& node_adj,
                                           const Graph& g) {
    int nodes = (int)bags.size();
    std::vector<std::vector<int>> occ(g.vertex_count());
    for (int t = 0; t < nodes; ++t)
        for (int v : bags[t]) {
            if (v < 0 || v >= g.vertex_count()) return {TdViolation::Kind::vertex_uncovered, v, -1};
            occ[v].push_back(t);
        }
    for (int v = 0; v < g.vertex_count(); ++v)
        if (occ[v].empty()) return {TdViolation::Kind::vertex_uncovered, v, -1};

    for (auto [u, v] : g.edges()) {
        bool covered = false;
        for (int t : occ[u]) {
            if (std::binary_search(bags[t].begin(), bags[t].end(), v)) {
                covered = true;
                break;
            }
        }
        if (!covered) return {TdViolation::Kind::edge_uncovered, u, v};
    }

    // Connected occurrence: BFS over the node tree restricted to bags containing v.
    std::vector<char> in_occ(nodes, 0), seen(nodes, 0);
    for (int v = 0; v < g.vertex_count(); ++v) {
        for (int t : occ[v]) in_occ[t] = 1;
        std::queue<int> q;
        q.push(occ[v][0]);
        seen[occ[v][0]] = 1;
        int reached = 0;
        while (!q.empty()) {
            int t = q.front();
            q.pop();
            ++reached;
            for (int u : node_adj[t])
                if (in_occ[u] && !seen[u]) {
                    seen[u] = 1;
                    q.push(u);
                }
        }
        bool connected = reached == (int)occ[v].size();
        for (int t : occ[v]) in_occ[t] = seen[t] = 0;
        if (!connected) return {TdViolation::Kind::disconnected_occurrence, v, -1};
    }
    return {};
}

}  // namespace

TdViolation validate(const TreeDecomposition& td, const Graph& g) {
    int nodes = (int)td.bags.size();
    if (nodes == 0) {
        if (g.vertex_count() == 0) return {};
        return {TdViolation::Kind::vertex_uncovered, 0, -1};
    }
    if ((int)td.edges.size() != nodes - 1) return {TdViolation::Kind::malformed_tree, -1, -1};
    std::vector<std::vector<int>> node_adj(nodes);
    for (auto [a, b] : td.edges) {
        if (a < 0 || a >= nodes || b < 0 || b >= nodes || a == b)
            return {TdViolation::Kind::malformed_tree, a, b};
        node_adj[a].push_back(b);
        node_adj[b].push_back(a);
    }
    // Connectivity of the node tree (edge count already matches).
    std::vector<char> seen(nodes, 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    int reached = 0;
    while (!q.empty()) {
        int t = q.front();
        q.pop();
        ++reached;
        for (int u : node_adj[t])
            if (!seen[u]) {
                seen[u] = 1;
                q.push(u);
            }
    }
    if (reached != nodes) return {TdViolation::Kind::malformed_tree, -1, -1};
    for (const auto& b : td.bags)
        if (!std::is_sorted(b.begin(), b.end()) ||
            std::adjacent_find(b.begin(), b.end()) != b.end())
            return {TdViolation::Kind::malformed_tree, -1, -1};
    return check_decomposition_conditions(td.bags, node_adj, g);
}

TdViolation validate_nice(const NiceTreeDecomposition& ntd, const Graph& g,
                          bool require_empty_root) {
    using K = NiceNode::Kind;
    int n = (int)ntd.nodes.size();
    if (n == 0 || ntd.root < 0 || ntd.root >= n)
        return {TdViolation::Kind::malformed_tree, -1, -1};

    std::vector<std::vector<int>> node_adj(n);
    int edge_count = 0;
    for (int t = 0; t < n; ++t) {
        const NiceNode& nd = ntd.nodes[t];
        if (!std::is_sorted(nd.bag.begin(), nd.bag.end()))
            return {TdViolation::Kind::malformed_tree, t, -1};
        for (int c = 0; c < nd.child_count; ++c) {
            int ch = nd.child[c];
            if (ch < 0 || ch >= n || ntd.nodes[ch].parent != t)
                return {TdViolation::Kind::malformed_tree, t, ch};
            node_adj[t].push_back(ch);
            node_adj[ch].push_back(t);
            ++edge_count;
        }
        auto diff_one = [](const std::vector<int>& big, const std::vector<int>& small, int v) {
            std::vector<int> merged(small);
            merged.push_back(v);
            std::sort(merged.begin(), merged.end());
            return merged == big;
        };
        switch (nd.kind) {
            case K::leaf:
                if (nd.child_count != 0 || !nd.bag.empty())
                    return {TdViolation::Kind::malformed_tree, t, -1};
                break;
            case K::introduce: {
                if (nd.child_count != 1) return {TdViolation::Kind::malformed_tree, t, -1};
                const auto& cb = ntd.nodes[nd.child[0]].bag;
                if (!diff_one(nd.bag, cb, nd.vertex))
                    return {TdViolation::Kind::malformed_tree, t, -1};
                break;
            }
            case K::forget: {
                if (nd.child_count != 1) return {TdViolation::Kind::malformed_tree, t, -1};
                const auto& cb = ntd.nodes[nd.child[0]].bag;
                if (!diff_one(cb, nd.bag, nd.vertex))
                    return {TdViolation::Kind::malformed_tree, t, -1};
                break;
            }
            case K::join:
                if (nd.child_count != 2) return {TdViolation::Kind::malformed_tree, t, -1};
                if (ntd.nodes[nd.child[0]].bag != nd.bag || ntd.nodes[nd.child[1]].bag != nd.bag)
                    return {TdViolation::Kind::malformed_tree, t, -1};
                break;
        }
    }
    if (edge_count != n - 1) return {TdViolation::Kind::malformed_tree, -1, -1};
    if (require_empty_root && !ntd.nodes[ntd.root].bag.empty())
        return {TdViolation::Kind::malformed_tree, ntd.root, -1};

    std::vector<std::vector<int>> bags;
    bags.reserve(n);
    for (const auto& nd : ntd.nodes) bags.push_back(nd.bag);
    return check_decomposition_conditions(bags, node_adj, g);
}

namespace {

struct NiceBuilder {
    std::vector<NiceNode> nodes;

    int add(NiceNode::Kind kind, std::vector<int> bag, int vertex = -1) {
        NiceNode nd;
        nd.kind = kind;
        nd.vertex = vertex;
        nd.bag = std::move(bag);
        nodes.push_back(std::move(nd));
        return (int)nodes.size() - 1;
    }

    void attach(int parent, int child) {
        nodes[parent].child[nodes[parent].child_count++] = child;
        nodes[child].parent = parent;
    }

    // leaf + introduce chain building up `bag`; returns the top node.
    int leaf_chain(const std::vector<int>& bag) {
        int cur = add(NiceNode::Kind::leaf, {});
        std::vector<int> acc;
        for (int v : bag) {
            acc.push_back(v);
            int nxt = add(NiceNode::Kind::introduce, acc, v);
            attach(nxt, cur);
            cur = nxt;
        }
        return cur;
    }

    // Chain morphing `from` into `to` (forget from∖to ascending, then introduce
    // to∖from ascending) on top of node `cur` whose bag is `from`. Returns the top.
    int adapt(int cur, const std::vector<int>& from, const std::vector<int>& to) {
        std::vector<int> bag = from;
        for (int v : from) {
            if (!std::binary_search(to.begin(), to.end(), v)) {
                bag.erase(std::find(bag.begin(), bag.end(), v));
                int nxt = add(NiceNode::Kind::forget, bag, v);
                attach(nxt, cur);
                cur = nxt;
            }
        }
        for (int v : to) {
            if (!std::binary_search(from.begin(), from.end(), v)) {
                bag.insert(std::upper_bound(bag.begin(), bag.end(), v), v);
                int nxt = add(NiceNode::Kind::introduce, bag, v);
                attach(nxt, cur);
                cur = nxt;
            }
        }
        return cur;
    }
};

}  // namespace

NiceTreeDecomposition make_nice(const TreeDecomposition& td, const Graph& g) {
    TdViolation v = validate(td, g);
    if (!v.ok()) throw std::invalid_argument("make_nice: invalid decomposition: " + to_string(v));

    NiceBuilder nb;
    NiceTreeDecomposition out;
    if (td.bags.empty()) {
        out.root = nb.add(NiceNode::Kind::leaf, {});
        out.nodes = std::move(nb.nodes);
        return out;
    }

    int n = (int)td.bags.size();
    std::vector<std::vector<int>> node_adj(n);
    for (auto [a, b] : td.edges) {
        node_adj[a].push_back(b);
        node_adj[b].push_back(a);
    }

    // Iterative DFS from bag 0; builds the nice subtree for each td node.
    std::vector<int> parent(n, -2), order;
    parent[0] = -1;
    std::vector<int> stack{0};
    while (!stack.empty()) {
        int t = stack.back();
        stack.pop_back();
        order.push_back(t);
        for (int u : node_adj[t])
            if (parent[u] == -2) {
                parent[u] = t;
                stack.push_back(u);
            }
    }

    // top[t] = nice node whose bag equals td.bags[t], covering t's whole td subtree.
    std::vector<int> top(n, -1);
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        int t = *it;
        std::vector<int> child_tops;
        for (int u : node_adj[t])
            if (parent[u] == t) {
                int adapted = nb.adapt(top[u], td.bags[u], td.bags[t]);
                child_tops.push_back(adapted);
            }
        if (child_tops.empty()) {
            top[t] = nb.leaf_chain(td.bags[t]);
        } else {
            int cur = child_tops[0];
            for (std::size_t i = 1; i < child_tops.size(); ++i) {
                int j = nb.add(NiceNode::Kind::join, td.bags[t]);
                nb.attach(j, cur);
                nb.attach(j, child_tops[i]);
                cur = j;
            }
            top[t] = cur;
        }
    }

    // Forget everything above the td root so the nice root has an empty bag.
    int root = nb.adapt(top[order[0]], td.bags[order[0]], {});
    out.root = root;
    out.nodes = std::move(nb.nodes);
    return out;
}

namespace {

// Recomputes kind/vertex of a rewired node from its children's bags; inserts
// adapter nodes when a join's children disagree with its bag.
struct Rerooter {
    std::vector<NiceNode> nodes;

    int add(NiceNode::Kind kind, std::vector<int> bag, int vertex = -1) {
        NiceNode nd;
        nd.kind = kind;
        nd.vertex = vertex;
        nd.bag = std::move(bag);
        nodes.push_back(std::move(nd));
        return (int)nodes.size() - 1;
    }

    int leaf_chain(const std::vector<int>& bag) {
        int cur = add(NiceNode::Kind::leaf, {});
        std::vector<int> acc;
        for (int v : bag) {
            acc.push_back(v);
            int nxt = add(NiceNode::Kind::introduce, acc, v);
            nodes[nxt].child[0] = cur;
            nodes[nxt].child_count = 1;
            nodes[cur].parent = nxt;
            cur = nxt;
        }
        return cur;
    }

    // Single vertex by which small differs from big, or -1.
    static int one_vertex_diff(const std::vector<int>& big, const std::vector<int>& small) {
        if (big.size() != small.size() + 1) return -1;
        int extra = -1;
        std::size_t i = 0;
        for (int v : big) {
            if (i < small.size() && small[i] == v) {
                ++i;
            } else if (extra == -1) {
                extra = v;
            } else {
                return -1;
            }
        }
        return i == small.size() ? extra : -1;
    }

    // Makes `child` a valid single child of a join node with bag `bag` by
    // inserting an introduce/forget adapter if bags differ. Returns the child id
    // to attach directly under the join.
    int equalize(int child, const std::vector<int>& bag) {
        if (nodes[child].bag == bag) return child;
        int v = one_vertex_diff(bag, nodes[child].bag);
        if (v != -1) {
            int a = add(NiceNode::Kind::introduce, bag, v);
            nodes[a].child[0] = child;
            nodes[a].child_count = 1;
            nodes[child].parent = a;
            return a;
        }
        v = one_vertex_diff(nodes[child].bag, bag);
        if (v == -1) throw std::logic_error("reroot: adjacent bags differ by more than one vertex");
        int a = add(NiceNode::Kind::forget, bag, v);
        nodes[a].child[0] = child;
        nodes[a].child_count = 1;
        nodes[child].parent = a;
        return a;
    }

    // Assigns node t's kind from its (already rewired) children; inserts adapters
    // as needed. Children of t must already have t as parent.
    void fix_node(int t, std::vector<int> children) {
        NiceNode& nd = nodes[t];
        if (children.empty()) {
            if (!nd.bag.empty()) throw std::logic_error("reroot: nonempty leaf");
            nd.kind = NiceNode::Kind::leaf;
            nd.vertex = -1;
            nd.child_count = 0;
            return;
        }
        if (children.size() == 1) {
            int c = children[0];
            int v = one_vertex_diff(nodes[c].bag, nd.bag);
            if (v != -1) {
                nd.kind = NiceNode::Kind::forget;
                nd.vertex = v;
                nd.child[0] = c;
                nd.child_count = 1;
                nodes[c].parent = t;
                return;
            }
            v = one_vertex_diff(nd.bag, nodes[c].bag);
            if (v != -1) {
                nd.kind = NiceNode::Kind::introduce;
                nd.vertex = v;
                nd.child[0] = c;
                nd.child_count = 1;
                nodes[c].parent = t;
                return;
            }
            if (nodes[c].bag == nd.bag) {
                // Equal-bag unary node: turn into a join against a fresh leaf chain.
                int fresh = leaf_chain(nd.bag);
                nodes[t].kind = NiceNode::Kind::join;
                nodes[t].vertex = -1;
                nodes[t].child[0] = c;
                nodes[t].child[1] = fresh;
                nodes[t].child_count = 2;
                nodes[c].parent = t;
                nodes[fresh].parent = t;
                return;
            }
            throw std::logic_error("reroot: adjacent bags differ by more than one vertex");
        }
        // Two or three children: fold extras under join splitters of bag nd.bag.
        while (children.size() > 2) {
            int a = equalize(children[children.size() - 2], nodes[t].bag);
            int b = equalize(children[children.size() - 1], nodes[t].bag);
            children.pop_back();
            children.pop_back();
            int j = add(NiceNode::Kind::join, nodes[t].bag);
            nodes[j].child[0] = a;
            nodes[j].child[1] = b;
            nodes[j].child_count = 2;
            nodes[a].parent = j;
            nodes[b].parent = j;
            children.push_back(j);
        }
        int a = equalize(children[0], nodes[t].bag);
        int b = equalize(children[1], nodes[t].bag);
        nodes[t].kind = NiceNode::Kind::join;
        nodes[t].vertex = -1;
        nodes[t].child[0] = a;
        nodes[t].child[1] = b;
        nodes[t].child_count = 2;
        nodes[a].parent = t;
        nodes[b].parent = t;
    }
};

}  // namespace

NiceTreeDecomposition reroot_for_guess(const NiceTreeDecomposition& ntd, int p,
                                       const std::vector<int>& keep) {
    if (p < 0 || p >= (int)ntd.nodes.size())
        throw std::invalid_argument("reroot_for_guess: no such node");
    const auto& pbag = ntd.nodes[p].bag;
    for (int v : keep)
        if (!std::binary_search(pbag.begin(), pbag.end(), v))
            throw std::invalid_argument("reroot_for_guess: keep is not a subset of the bag of p");

    Rerooter rr;
    rr.nodes = ntd.nodes;

    // Path p -> old root.
    std::vector<int> path{p};
    while (rr.nodes[path.back()].parent != -1) path.push_back(rr.nodes[path.back()].parent);

    if (path.size() > 1) {
        // Edge orientations flip along the path: path[i] loses child path[i-1]
        // (its new parent) and gains its old parent path[i+1]. Rewire from the
        // old root down to p so each fix sees its final child list.
        for (std::size_t i = path.size(); i-- > 0;) {
            int t = path[i];
            std::vector<int> children;
            for (int c = 0; c < ntd.nodes[t].child_count; ++c) {
                int ch = ntd.nodes[t].child[c];
                if (i >= 1 && ch == path[i - 1]) continue;
                children.push_back(ch);
            }
            if (i + 1 < path.size()) children.push_back(path[i + 1]);
            for (int c : children) rr.nodes[c].parent = t;
            rr.fix_node(t, children);
        }
        rr.nodes[p].parent = -1;
    }

    // Forget chain above p shrinking the bag to exactly `keep`.
    int cur = p;
    std::vector<int> bag = rr.nodes[p].bag;
    std::vector<int> keep_sorted = keep;
    std::sort(keep_sorted.begin(), keep_sorted.end());
    for (int v : rr.nodes[p].bag) {
        if (!std::binary_search(keep_sorted.begin(), keep_sorted.end(), v)) {
            bag.erase(std::find(bag.begin(), bag.end(), v));
            int nxt = rr.add(NiceNode::Kind::forget, bag, v);
            rr.nodes[nxt].child[0] = cur;
            rr.nodes[nxt].child_count = 1;
            rr.nodes[cur].parent = nxt;
            cur = nxt;
        }
    }
    rr.nodes[cur].parent = -1;

    NiceTreeDecomposition out;
    out.nodes = std::move(rr.nodes);
    out.root = cur;
    return out;
}

TreeDecomposition heuristic_decomposition(const Graph& g) {
    int n = g.vertex_count();
    TreeDecomposition td;
    if (n == 0) {
        td.bags.push_back({});
        return td;
    }

    std::vector<std::set<int>> adj(n);
    for (int v = 0; v < n; ++v)
        for (int w : g.neighbors(v)) adj[v].insert(w);

    std::vector<char> eliminated(n, 0);
    std::vector<int> elim_index(n, -1);
    std::vector<std::vector<int>> bags;
    bags.reserve(n);

    auto fill_cost = [&](int v) {
        long long fill = 0;
        std::vector<int> nb(adj[v].begin(), adj[v].end());
        for (std::size_t i = 0; i < nb.size(); ++i)
            for (std::size_t j = i + 1; j < nb.size(); ++j)
                if (!adj[nb[i]].count(nb[j])) ++fill;
        return fill;
    };

    for (int step = 0; step < n; ++step) {
        int best = -1;
        long long best_fill = 0;
        for (int v = 0; v < n; ++v) {
            if (eliminated[v]) continue;
            long long f = fill_cost(v);
            if (best == -1 || f < best_fill) {
                best = v;
                best_fill = f;
            }
        }
        std::vector<int> bag(adj[best].begin(), adj[best].end());
        bag.push_back(best);
        std::sort(bag.begin(), bag.end());
        bags.push_back(bag);
        elim_index[best] = step;
        eliminated[best] = 1;
        std::vector<int> nb(adj[best].begin(), adj[best].end());
        for (int w : nb) adj[w].erase(best);
        for (std::size_t i = 0; i < nb.size(); ++i)
            for (std::size_t j = i + 1; j < nb.size(); ++j) {
                adj[nb[i]].insert(nb[j]);
                adj[nb[j]].insert(nb[i]);
            }
        adj[best].clear();
    }

    // Parent of bag k: the earliest-eliminated vertex among its other members.
    td.bags = bags;
    for (int k = 0; k < n; ++k) {
        int parent_step = n;
        for (int v : bags[k]) {
            if (elim_index[v] > k) parent_step = std::min(parent_step, elim_index[v]);
        }
        if (parent_step < n) {
            td.edges.emplace_back(k, parent_step);
        } else if (k + 1 < n) {
            td.edges.emplace_back(k, k + 1);  // ties components/roots into one tree
        }
    }
    return td;
}

}  // namespace triclub
