#ifndef BMP_REDUCTIONS_HPP
#define BMP_REDUCTIONS_HPP

#include <string>
#include <vector>

#include "bmp/embed.hpp"
#include "bmp/io.hpp"
#include "bmp/model.hpp"

namespace bmp {

// A shortest-common-supersequence input: k binary strings.
struct ScsInput {
    std::vector<std::string> strings;  // characters '0'/'1'

    int k() const { return static_cast<int>(strings.size()); }
    int max_len() const;    // ell
    long long total_len() const;  // L
};

ScsInput make_scs_input(std::vector<std::string> strings);  // validates

// The structured placement-given instance I(p,q): a (2k+1)x(2k+1) grid with
// an all-0-row of 0^p, a seq-row "$ s_1 $ ... $ s_k $", an all-1-row of 1^q,
// and dummy "$" rows. For k = 1 the grid has only three rows, so the dummy
// rows are dropped and the special rows fill the whole grid.
struct IpqInstance {
    Instance instance;
    Placement placement;  // row-major by probe id
    int k = 0;
    long long L = 0;
};

IpqInstance build_ipq(const ScsInput& scs, int p, int q);

struct IpqResult {
    long long cost_excl = 0;      // optimum excluding the "$" mask
    long long cost_incl = 0;      // including the single "$" mask
    long long dollar_mask_cost = 0;
    std::string deposition01;     // non-"$" deposition, lexicographically least
    Solution witness;             // full schedule on the built instance
};

// Exact optimum of I(p,q) via the structural decomposition: one "$" mask
// first, uniform all-0/all-1 rows, and seq-row columns that decouple given
// the deposition and the rows' deposit positions.
IpqResult solve_ipq_exact(const ScsInput& scs, int p, int q);

struct ScsResult {
    int length = 0;
    std::string witness;
};

// SCS via the reduction: scan (p,q) by ascending p+q until the I(p,q)
// optimum meets the sharing-perfect closed form; lexicographically least
// witness among the minimal cells.
ScsResult extract_scs(const ScsInput& scs);

// Direct DP over the product of string positions; oracle for extract_scs.
ScsResult scs_exact_dp(const std::vector<std::string>& strings);

// 1D instance with one probe per vertex (its sorted incident edge tokens)
// plus $^(n+1) and #^(n+1) dummies, on a 1x(n+2) grid.
Instance build_hampath_instance(const GraphInput& g);

struct HampathCertificate {
    long long cost = 0;
    long long bound = 0;  // 2(n+1) + 4m - 2(n-1)
    bool achieves_bound = false;
    Solution witness;
};

// Cost of the 1D solution induced by a vertex order (dummies at the ends,
// every shared edge token deposited once for both endpoints).
HampathCertificate check_hampath_certificate(const GraphInput& g,
                                             const std::vector<int>& vertex_order);

// Global 1D optimum: all placements, dummies pinned to the ends when an
// all-"$" and an all-"#" probe are present (set pin_dummies=false to search
// unpinned). Embeddings optimized exactly per placement.
ExactResult solve_1d_exact(const Instance& instance,
                           const ExactBudget& budget = {},
                           bool pin_dummies = true);

// 2D lift of a 1D instance: pad each probe to length 4*n^2*ell+1 with a
// fresh token, add n^2-n single-"$" dummies, n x n grid.
Instance lift_1d_to_2d(const Instance& instance_1d);

}  // namespace bmp

#endif
