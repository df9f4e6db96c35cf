#ifndef RF_TREE_HPP
#define RF_TREE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rf/bitvec.hpp"
#include "rf/lset.hpp"
#include "rf/rational.hpp"

namespace rf {

// Finite truncation of the b-homogeneous tree [b]^{<height}.
struct TreeParams {
    int b = 2;
    int height = 1;

    TreeParams() = default;
    TreeParams(int b_, int height_) : b(b_), height(height_) {
        if (b < 1) throw DomainError("branching degree must be >= 1");
        if (height < 1) throw DomainError("height must be >= 1");
    }

    // |T(n)| = b^n; materialized trees are kept at desk scale.
    std::size_t level_size(int n) const {
        if (n < 0 || n >= height) throw DomainError("level out of range");
        std::size_t s = 1;
        for (int i = 0; i < n; ++i) {
            if (s > (std::size_t{1} << 40) / static_cast<std::size_t>(b))
                throw ResourceError("level size exceeds materialization budget");
            s *= static_cast<std::size_t>(b);
        }
        return s;
    }

    bool operator==(const TreeParams& o) const { return b == o.b && height == o.height; }
};

// A node is a sequence over {1..b}; its length is its level.
using Node = std::vector<int>;

inline int node_level(const Node& t) { return static_cast<int>(t.size()); }

inline void check_node(const TreeParams& p, const Node& t) {
    if (node_level(t) >= p.height)
        throw DomainError("node level exceeds materialized height");
    for (int s : t)
        if (s < 1 || s > p.b)
            throw DomainError("node symbol " + std::to_string(s) + " outside {1.." +
                              std::to_string(p.b) + "}");
}

// lexicographic rank of t within its level (first symbol most significant)
inline std::size_t node_rank(const TreeParams& p, const Node& t) {
    std::size_t r = 0;
    for (int s : t) r = r * static_cast<std::size_t>(p.b) + static_cast<std::size_t>(s - 1);
    return r;
}

inline Node node_from_rank(const TreeParams& p, int level, std::size_t rank) {
    Node t(static_cast<std::size_t>(level));
    for (int i = level - 1; i >= 0; --i) {
        t[static_cast<std::size_t>(i)] = static_cast<int>(rank % static_cast<std::size_t>(p.b)) + 1;
        rank /= static_cast<std::size_t>(p.b);
    }
    return t;
}

inline bool is_prefix(const Node& s, const Node& t) {
    if (s.size() > t.size()) return false;
    for (std::size_t i = 0; i < s.size(); ++i)
        if (s[i] != t[i]) return false;
    return true;
}

inline Node node_concat(const Node& s, const Node& t) {
    Node r = s;
    r.insert(r.end(), t.begin(), t.end());
    return r;
}

inline std::string node_str(const Node& t) {
    if (t.empty()) return "()";
    std::string s = "(";
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(t[i]);
    }
    return s + ")";
}

// Subset of the tree as one bit-vector per level, indexed by node rank.
class TreeSubset {
public:
    TreeSubset() = default;
    explicit TreeSubset(const TreeParams& p) : params_(p) {
        levels_.reserve(static_cast<std::size_t>(p.height));
        for (int n = 0; n < p.height; ++n) levels_.emplace_back(p.level_size(n));
    }

    const TreeParams& params() const { return params_; }

    bool contains(const Node& t) const {
        check_node(params_, t);
        return levels_[t.size()].get(node_rank(params_, t));
    }
    void insert(const Node& t) {
        check_node(params_, t);
        levels_[t.size()].set(node_rank(params_, t), true);
    }
    void erase(const Node& t) {
        check_node(params_, t);
        levels_[t.size()].set(node_rank(params_, t), false);
    }

    const BitVec& level(int n) const {
        if (n < 0 || n >= params_.height) throw DomainError("level out of range");
        return levels_[static_cast<std::size_t>(n)];
    }
    BitVec& level_mut(int n) {
        if (n < 0 || n >= params_.height) throw DomainError("level out of range");
        return levels_[static_cast<std::size_t>(n)];
    }

    static TreeSubset full(const TreeParams& p) {
        TreeSubset a(p);
        for (int n = 0; n < p.height; ++n)
            for (std::size_t i = 0; i < a.levels_[n].size(); ++i) a.levels_[n].set(i);
        return a;
    }

    bool operator==(const TreeSubset& o) const {
        return params_ == o.params_ && levels_ == o.levels_;
    }

private:
    TreeParams params_;
    std::vector<BitVec> levels_;
};

// Strong subtree: nodes grouped by tree level plus the level set.
struct StrongSubtree {
    std::vector<int> level_set;                 // strictly increasing tree levels
    std::vector<std::vector<Node>> node_list;   // node_list[i] = nodes at level_set[i], sorted

    std::size_t node_count() const {
        std::size_t c = 0;
        for (const auto& g : node_list) c += g.size();
        return c;
    }
    std::vector<Node> all_nodes() const {
        std::vector<Node> r;
        for (const auto& g : node_list) r.insert(r.end(), g.begin(), g.end());
        return r;
    }
};

struct SubtreeViolation {
    char condition;     // 'a', 'b', 'c' or 'i' for malformed input
    Node witness;
    std::string detail;
};

struct SubtreeVerdict {
    bool ok = false;
    std::vector<int> level_set;
    std::optional<SubtreeViolation> violation;
};

// Checks the strong-subtree conditions of a flat candidate node set.
// Condition (c) is checked in the injective reading: distinct immediate
// successors in S extend distinct immediate successors in T. With
// literal_condition_c the printed (vacuous) form is used instead.
SubtreeVerdict is_strong_subtree(const TreeParams& params, const std::vector<Node>& nodes,
                                 bool literal_condition_c = false);

// b-branching check: every non-maximal node of S has exactly b immediate
// successors in S. Assumes `s` already passed is_strong_subtree.
bool is_b_branching(const TreeParams& params, const StrongSubtree& s);

// Groups a flat valid node set into a StrongSubtree (levels sorted).
StrongSubtree group_subtree(const std::vector<Node>& nodes);

// Restriction of a strong subtree to a sub-level-set. For skipped levels
// the branch through the least symbol is followed, so the result is
// deterministic. Keeps b-branching.
StrongSubtree restrict_level_set(const TreeParams& params, const StrongSubtree& s,
                                 const std::vector<int>& sub_levels);

// Re-indexed view of Succ(root) truncated to height_cap levels.
struct TreeView {
    TreeParams base;
    Node root;
    TreeParams view_params;

    Node to_base(const Node& v) const { return node_concat(root, v); }
    int to_base_level(int view_level) const { return node_level(root) + view_level; }
};

TreeView tree_view(const TreeParams& params, const Node& root,
                   std::optional<int> height_cap = std::nullopt);

// Furstenberg-Weiss measure: mean over p in P of dens_{T(p)}(A).
Rat fw_density(const TreeSubset& A, const std::vector<int>& P);

// dens of A within Succ(t) at tree level n  (relative density).
Rat relative_density(const TreeSubset& A, const Node& t, int n);

// Count of A-nodes below t at level n (helper shared with the searches).
std::size_t count_in_cone(const TreeSubset& A, const Node& t, int n);

} // namespace rf

#endif
