#pragma once

// Indicial functions: where an index of a nested minor lands in the
// original matrix.

#include "telinv/gfn.hpp"

#include <vector>

namespace telinv {

// Survivor map of deleting index r0: t stays if t < r0, else moves to t+1.
constexpr int kappa(int t, int r0) noexcept { return t + 1 - heav(r0 - t - 1); }

// base is the index at the current level; chain holds the indices deleted
// on the way down, outermost first.
struct IndexHistory {
    int base = 1;
    std::vector<int> chain;
};

// K successive deletions folded back to an original index.  With n > 0 the
// history is also checked against the level ranges of an n x n matrix.
int primed_index(int K, const IndexHistory& hist, int n = 0);

// primed_index with base replaced by 3 - base (the partner column of the
// innermost 2 x 2 level).
int reflected_primed_index(int K, const IndexHistory& hist, int n = 0);

// Alternate evaluators, kept for cross-checking against primed_index.
namespace forms {

// Product/sum closed form over the auxiliary u_k variables.
int primed_closed(int K, const IndexHistory& hist);

// Recursive substitution: the level-i form built from level i-1 by
// replacing the base with r_i + u and gating on H(+-(r_{i-1} - r_i + u - 1)).
int primed_substituted(int K, const IndexHistory& hist);

// 4 x 4 inverse: kappa(l, n), lambda(j, l, n), mu(j, l, n).
int kappa4(int l, int n, const IndexCalculus& c = IndexCalculus{});
int lambda4(int j, int l, int n, const IndexCalculus& c = IndexCalculus{});
int mu4(int j, int l, int n, const IndexCalculus& c = IndexCalculus{});

// 5 x 5 inverse, written with a nested sum over auxiliary (u, v).
int lambda5(int k, int m, int p, const IndexCalculus& c = IndexCalculus{});
int mu5(int i, int k, int m, int p, const IndexCalculus& c = IndexCalculus{});
int nu5(int i, int k, int m, int p, const IndexCalculus& c = IndexCalculus{});

// 5 x 5 inverse, written as the gated products of the loop-nest program.
int kappa_nest(int n, int q, const IndexCalculus& c = IndexCalculus{});
int lambda_nest(int l, int n, int q, const IndexCalculus& c = IndexCalculus{});
int mu_nest(int j, int l, int n, int q, const IndexCalculus& c = IndexCalculus{});
int nu_nest(int j, int l, int n, int q, const IndexCalculus& c = IndexCalculus{});

// Gamma-function encodings of the 4 x 4 row and column indices.  The
// Gamma(M-1) term can sit inside or outside the outer Gamma of the exponent;
// both placements are kept and the conformance report decides which holds.
int row_offset_gamma_inside(int M, int m);
int row_offset_gamma_outside(int M, int m);
int kappa_gamma_inside(int l, int n);
int kappa_gamma_outside(int l, int n);
int lambda_gamma(int j, int l, int n);
int mu_gamma(int j, int l, int n);

}  // namespace forms

// Gamma path for the 4 x 4 engine: the first variant that passed its truth
// table, or the direct value when none did.
int gamma_row_offset(int M, int m);
int gamma_kappa(int l, int n);
int gamma_lambda(int j, int l, int n);
int gamma_mu(int j, int l, int n);

std::vector<ConformanceEntry> index_conformance();

}  // namespace telinv
