#ifndef RF_CONVOLUTION_HPP
#define RF_CONVOLUTION_HPP

#include <map>
#include <vector>

#include "rf/tree.hpp"

namespace rf {

// Context for the convolution operation attached to a level set
// P = {p_0 < ... < p_{|P|-1}}. For each i, P_i holds the P-levels below
// p_i and Pbar_i the remaining levels below p_i; n_P = max(P)-|P|+1 and
// X_P = [b]^{n_P} is the filler space.
class ConvolutionContext {
public:
    ConvolutionContext(int b, std::vector<int> P);

    int b() const { return b_; }
    const std::vector<int>& P() const { return P_; }
    int n_P() const { return n_P_; }

    const std::vector<int>& P_i(std::size_t i) const { return p_parts_[i]; }
    const std::vector<int>& Pbar_i(std::size_t i) const { return pbar_parts_[i]; }

    // all fillers x in X_P in lexicographic order
    std::vector<Node> enumerate_fillers() const;

private:
    int b_;
    std::vector<int> P_;
    int n_P_;
    std::vector<std::vector<int>> p_parts_;
    std::vector<std::vector<int>> pbar_parts_;
};

// canonical isomorphism I_P: maps the i-th coordinate of x to level p_i
std::map<int, int> canonical_iso(const std::vector<int>& P, const Node& x);

// cv_P(t, x): the node of length p_{|t|} reading P_i-coordinates from t
// and the remaining ones from the prefix of x.
Node convolve(const ConvolutionContext& ctx, const Node& t, const Node& x);

// { cv_P(t,x) : t in [b]^{<|P|} } as a StrongSubtree with level set P.
StrongSubtree convolution_tree(const ConvolutionContext& ctx, const Node& x);

// Both sides of the averaging identity, evaluated exactly.
struct AveragingEval {
    Rat lhs;
    Rat rhs;
};
AveragingEval averaging_identity_eval(const ConvolutionContext& ctx, const TreeSubset& A);

// Lexicographically least filler maximizing the FW density of A inside
// the convolution subtree; d >= fw_density(A, P).
struct LiftResult {
    Node x_star;
    StrongSubtree subtree;
    Rat density;
};
LiftResult lift_density_subtree(const ConvolutionContext& ctx, const TreeSubset& A);

} // namespace rf

#endif
