#include "rf/tree.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace rf {

StrongSubtree group_subtree(const std::vector<Node>& nodes) {
    std::map<int, std::vector<Node>> by_level;
    for (const auto& t : nodes) by_level[node_level(t)].push_back(t);
    StrongSubtree s;
    for (auto& [lvl, group] : by_level) {
        std::sort(group.begin(), group.end());
        group.erase(std::unique(group.begin(), group.end()), group.end());
        s.level_set.push_back(lvl);
        s.node_list.push_back(std::move(group));
    }
    return s;
}

SubtreeVerdict is_strong_subtree(const TreeParams& params, const std::vector<Node>& nodes,
                                 bool literal_condition_c) {
    SubtreeVerdict v;
    if (nodes.empty()) {
        v.violation = SubtreeViolation{'a', {}, "candidate set is empty"};
        return v;
    }
    for (const auto& t : nodes) check_node(params, t);

    StrongSubtree s = group_subtree(nodes);

    // (a) induced order is a tree: unique minimum, everything above it,
    // and all maximal chains of equal length.
    if (s.node_list.front().size() != 1) {
        v.violation = SubtreeViolation{'a', s.node_list.front()[1],
                                       "two minimal nodes: not uniquely rooted"};
        return v;
    }
    const Node& root = s.node_list.front().front();
    for (const auto& group : s.node_list)
        for (const auto& t : group)
            if (!is_prefix(root, t)) {
                v.violation = SubtreeViolation{'a', t, "node incomparable with the root"};
                return v;
            }

    // own-depth of each node = number of strict predecessors inside S
    std::map<Node, int> depth;
    std::set<Node> in_s(nodes.begin(), nodes.end());
    for (const auto& group : s.node_list)
        for (const auto& t : group) {
            int d = 0;
            for (const auto& u : in_s)
                if (u.size() < t.size() && is_prefix(u, t)) ++d;
            depth[t] = d;
        }

    // (b) every S-level sits inside a single T-level
    std::map<int, int> depth_to_level;
    for (const auto& [t, d] : depth) {
        auto it = depth_to_level.find(d);
        if (it == depth_to_level.end())
            depth_to_level[d] = node_level(t);
        else if (it->second != node_level(t)) {
            v.violation = SubtreeViolation{
                'b', t, "S-level " + std::to_string(d) + " meets two tree levels"};
            return v;
        }
    }

    // (a) balanced: maximal chains have equal cardinality, i.e. all leaves
    // share the maximal depth.
    int max_depth = 0;
    for (const auto& [t, d] : depth) max_depth = std::max(max_depth, d);
    for (const auto& [t, d] : depth) {
        bool has_child = false;
        for (const auto& u : in_s)
            if (u.size() > t.size() && is_prefix(t, u)) {
                has_child = true;
                break;
            }
        if (!has_child && d != max_depth) {
            v.violation = SubtreeViolation{'a', t, "maximal chains of different length"};
            return v;
        }
    }

    // (c) immediate S-successors: in the injective reading, distinct
    // immediate successors of s must extend distinct T-children of s.
    // The literal printed condition is vacuously true.
    if (!literal_condition_c) {
        for (const auto& [t, d] : depth) {
            if (d == max_depth) continue;
            // immediate successors = S-nodes of depth d+1 extending t
            std::set<int> directions;
            for (const auto& [u, du] : depth) {
                if (du != d + 1 || !is_prefix(t, u)) continue;
                int dir = u[t.size()];
                if (!directions.insert(dir).second) {
                    v.violation = SubtreeViolation{
                        'c', u, "two immediate successors of " + node_str(t) +
                                    " extend the same tree child"};
                    return v;
                }
            }
        }
    }

    v.ok = true;
    v.level_set = s.level_set;
    return v;
}

bool is_b_branching(const TreeParams& params, const StrongSubtree& s) {
    for (std::size_t i = 0; i + 1 < s.node_list.size(); ++i) {
        for (const auto& t : s.node_list[i]) {
            int children = 0;
            for (const auto& u : s.node_list[i + 1])
                if (is_prefix(t, u)) ++children;
            if (children != params.b) return false;
        }
    }
    return true;
}

StrongSubtree restrict_level_set(const TreeParams& params, const StrongSubtree& s,
                                 const std::vector<int>& sub_levels) {
    for (int lvl : sub_levels)
        if (std::find(s.level_set.begin(), s.level_set.end(), lvl) == s.level_set.end())
            throw DomainError("restriction level " + std::to_string(lvl) +
                              " not in the subtree's level set");
    if (sub_levels.empty()) throw DomainError("restriction to empty level set");

    // positions of kept levels within the old level set
    std::vector<std::size_t> keep;
    for (int lvl : sub_levels)
        keep.push_back(static_cast<std::size_t>(
            std::find(s.level_set.begin(), s.level_set.end(), lvl) - s.level_set.begin()));
    std::sort(keep.begin(), keep.end());

    auto children_of = [&](const Node& t, std::size_t pos) {
        std::vector<Node> r;
        for (const auto& u : s.node_list[pos])
            if (is_prefix(t, u)) r.push_back(u);
        return r;  // already sorted
    };

    StrongSubtree out;
    out.level_set = sub_levels;
    std::sort(out.level_set.begin(), out.level_set.end());

    // walk down from the kept-root: through skipped levels take the
    // lexicographically least continuation, at kept levels take all.
    std::vector<Node> frontier;
    {
        // descend from the subtree root to the first kept level, least branch
        Node cur = s.node_list.front().front();
        for (std::size_t pos = 1; pos <= keep.front(); ++pos)
            cur = children_of(cur, pos).front();
        frontier.push_back(cur);
    }
    out.node_list.push_back(frontier);
    for (std::size_t ki = 0; ki + 1 < keep.size(); ++ki) {
        std::vector<Node> next;
        for (const auto& t : frontier) {
            // all immediate branches at the next old level...
            std::vector<Node> branch = children_of(t, keep[ki] + 1);
            // ...then least continuations through skipped levels
            for (auto cur : branch) {
                for (std::size_t pos = keep[ki] + 2; pos <= keep[ki + 1]; ++pos)
                    cur = children_of(cur, pos).front();
                next.push_back(cur);
            }
        }
        std::sort(next.begin(), next.end());
        out.node_list.push_back(next);
        frontier = out.node_list.back();
    }
    return out;
}

TreeView tree_view(const TreeParams& params, const Node& root, std::optional<int> height_cap) {
    check_node(params, root);
    int remaining = params.height - node_level(root);
    int h = height_cap.value_or(remaining);
    if (h < 1 || h > remaining)
        throw DomainError("height cap " + std::to_string(h) + " out of range (remaining " +
                          std::to_string(remaining) + ")");
    return TreeView{params, root, TreeParams(params.b, h)};
}

Rat fw_density(const TreeSubset& A, const std::vector<int>& P) {
    if (P.empty()) throw DomainError("fw_density over empty level set");
    Rat sum = 0;
    for (int p : P) {
        if (p < 0 || p >= A.params().height) throw DomainError("level out of range in P");
        sum += Rat(Int(A.level(p).count()), pow_int(A.params().b, static_cast<unsigned>(p)));
    }
    return sum / Rat(static_cast<int>(P.size()));
}

std::size_t count_in_cone(const TreeSubset& A, const Node& t, int n) {
    const TreeParams& p = A.params();
    check_node(p, t);
    if (n < node_level(t) || n >= p.height) throw DomainError("target level out of range");
    // ranks of Succ(t) at level n form a contiguous block
    std::size_t width = 1;
    for (int i = node_level(t); i < n; ++i) width *= static_cast<std::size_t>(p.b);
    std::size_t lo = node_rank(p, t) * width;
    std::size_t c = 0;
    const BitVec& lv = A.level(n);
    for (std::size_t i = lo; i < lo + width; ++i)
        if (lv.get(i)) ++c;
    return c;
}

Rat relative_density(const TreeSubset& A, const Node& t, int n) {
    std::size_t width = 1;
    for (int i = node_level(t); i < n; ++i) width *= static_cast<std::size_t>(A.params().b);
    return Rat(Int(count_in_cone(A, t, n)), Int(width));
}

} // namespace rf
