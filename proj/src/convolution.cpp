#include "rf/convolution.hpp"

#include <algorithm>

namespace rf {

ConvolutionContext::ConvolutionContext(int b, std::vector<int> P) : b_(b), P_(std::move(P)) {
    if (b_ < 1) throw DomainError("branching degree must be >= 1");
    if (P_.empty()) throw DomainError("convolution level set must be nonempty");
    if (!std::is_sorted(P_.begin(), P_.end()) ||
        std::adjacent_find(P_.begin(), P_.end()) != P_.end())
        throw DomainError("convolution level set must be strictly increasing");
    if (P_.front() < 0) throw DomainError("levels must be non-negative");

    n_P_ = P_.back() - static_cast<int>(P_.size()) + 1;
    p_parts_.resize(P_.size());
    pbar_parts_.resize(P_.size());
    for (std::size_t i = 0; i < P_.size(); ++i) {
        for (int n = 0; n < P_[i]; ++n) {
            if (std::binary_search(P_.begin(), P_.begin() + static_cast<long>(i), n))
                p_parts_[i].push_back(n);
            else
                pbar_parts_[i].push_back(n);
        }
    }
}

std::vector<Node> ConvolutionContext::enumerate_fillers() const {
    std::vector<Node> out;
    std::size_t total = 1;
    for (int i = 0; i < n_P_; ++i) total *= static_cast<std::size_t>(b_);
    out.reserve(total);
    Node x(static_cast<std::size_t>(n_P_), 1);
    for (std::size_t r = 0; r < total; ++r) {
        std::size_t v = r;
        for (int i = n_P_ - 1; i >= 0; --i) {
            x[static_cast<std::size_t>(i)] = static_cast<int>(v % static_cast<std::size_t>(b_)) + 1;
            v /= static_cast<std::size_t>(b_);
        }
        out.push_back(x);
    }
    return out;
}

std::map<int, int> canonical_iso(const std::vector<int>& P, const Node& x) {
    if (P.size() != x.size())
        throw DomainError("canonical isomorphism: sequence length " + std::to_string(x.size()) +
                          " does not match |P| = " + std::to_string(P.size()));
    std::map<int, int> m;
    for (std::size_t i = 0; i < P.size(); ++i) m[P[i]] = x[i];
    return m;
}

Node convolve(const ConvolutionContext& ctx, const Node& t, const Node& x) {
    const std::size_t i = t.size();
    if (i >= ctx.P().size()) throw DomainError("convolve: |t| must be < |P|");
    if (static_cast<int>(x.size()) != ctx.n_P())
        throw DomainError("convolve: filler must lie in X_P");
    for (int s : t)
        if (s < 1 || s > ctx.b()) throw DomainError("convolve: bad symbol in t");
    for (int s : x)
        if (s < 1 || s > ctx.b()) throw DomainError("convolve: bad symbol in x");

    const int p_i = ctx.P()[i];
    Node out(static_cast<std::size_t>(p_i), 0);
    const auto& pi = ctx.P_i(i);
    const auto& pbar = ctx.Pbar_i(i);
    for (std::size_t j = 0; j < pi.size(); ++j) out[static_cast<std::size_t>(pi[j])] = t[j];
    for (std::size_t j = 0; j < pbar.size(); ++j) out[static_cast<std::size_t>(pbar[j])] = x[j];
    return out;
}

StrongSubtree convolution_tree(const ConvolutionContext& ctx, const Node& x) {
    std::vector<Node> nodes;
    const std::size_t depth = ctx.P().size();
    // enumerate t in [b]^{<|P|}
    for (std::size_t i = 0; i < depth; ++i) {
        std::size_t count = 1;
        for (std::size_t j = 0; j < i; ++j) count *= static_cast<std::size_t>(ctx.b());
        for (std::size_t r = 0; r < count; ++r) {
            Node t(i);
            std::size_t v = r;
            for (std::size_t j = i; j-- > 0;) {
                t[j] = static_cast<int>(v % static_cast<std::size_t>(ctx.b())) + 1;
                v /= static_cast<std::size_t>(ctx.b());
            }
            nodes.push_back(convolve(ctx, t, x));
        }
    }
    return group_subtree(nodes);
}

AveragingEval averaging_identity_eval(const ConvolutionContext& ctx, const TreeSubset& A) {
    if (ctx.P().back() >= A.params().height)
        throw DomainError("averaging identity: max P exceeds materialized height");

    AveragingEval e;
    e.lhs = fw_density(A, ctx.P());

    const auto fillers = ctx.enumerate_fillers();
    Rat acc = 0;
    for (std::size_t i = 0; i < ctx.P().size(); ++i) {
        std::size_t t_count = 1;
        for (std::size_t j = 0; j < i; ++j) t_count *= static_cast<std::size_t>(ctx.b());
        Int hits = 0;
        for (std::size_t r = 0; r < t_count; ++r) {
            Node t(i);
            std::size_t v = r;
            for (std::size_t j = i; j-- > 0;) {
                t[j] = static_cast<int>(v % static_cast<std::size_t>(ctx.b())) + 1;
                v /= static_cast<std::size_t>(ctx.b());
            }
            for (const auto& x : fillers)
                if (A.contains(convolve(ctx, t, x))) ++hits;
        }
        acc += Rat(hits, Int(t_count) * Int(fillers.size()));
    }
    e.rhs = acc / Rat(static_cast<int>(ctx.P().size()));
    return e;
}

LiftResult lift_density_subtree(const ConvolutionContext& ctx, const TreeSubset& A) {
    if (ctx.P().back() >= A.params().height)
        throw DomainError("lift: max P exceeds materialized height");

    LiftResult best;
    bool have = false;
    for (const auto& x : ctx.enumerate_fillers()) {
        // FW density of A within the convolution subtree of x
        Rat sum = 0;
        std::size_t t_count = 1;
        for (std::size_t i = 0; i < ctx.P().size(); ++i) {
            Int hits = 0;
            for (std::size_t r = 0; r < t_count; ++r) {
                Node t(i);
                std::size_t v = r;
                for (std::size_t j = i; j-- > 0;) {
                    t[j] = static_cast<int>(v % static_cast<std::size_t>(ctx.b())) + 1;
                    v /= static_cast<std::size_t>(ctx.b());
                }
                if (A.contains(convolve(ctx, t, x))) ++hits;
            }
            sum += Rat(hits, Int(t_count));
            t_count *= static_cast<std::size_t>(ctx.b());
        }
        Rat d = sum / Rat(static_cast<int>(ctx.P().size()));
        if (!have || d > best.density) {
            best.x_star = x;
            best.density = d;
            have = true;
        }
    }
    best.subtree = convolution_tree(ctx, best.x_star);
    return best;
}

} // namespace rf
