#ifndef BPLAB_NUMERICS_HPP
#define BPLAB_NUMERICS_HPP

#include <utility>

namespace bplab::num {

// All quantities that can leave double range are computed and returned in
// natural-log space; plain-valued functions say so. Everything here is pure.

// log of the binomial coefficient, -inf outside 0 <= k <= n
double log_binom(long long n, long long k);

// log(exp(a) + exp(b)) with max-shift
double log_add_exp(double a, double b);

// unique real root of 4x^3 - 7x^2 + 5x - 1, bisected to 1e-12 residual;
// the critical edge probability separating the two regimes of the
// equality bp = n - alpha for random graphs
double p0();

// 1 + (p/(1-p))^2 - (1-p)^{-1/2}; negative below p0, positive above
double critical_sign(double p);

// (r-s)/(r+s+2) * ((1-p)/p)^{s+1}, the ratio driving the geometric decay
// of the decomposition-count series; plain value, may overflow to +inf
double decay_ratio(long long r, long long s, double p);
double log_decay_ratio(long long r, long long s, double p);

// series of biclique side-size counts and its closed-form cap:
// lhs = sum over l >= mu >= m', l + mu <= n' of C(n',l+mu) C(l+mu,l) q^{l mu},
// rhs = 2 C(n',m') (1 + q^{m'})^{n'}, q = p/(1-p); both in log space
double biclique_series_lhs(int nprime, int mprime, double p);
double biclique_series_rhs(int nprime, int mprime, double p);

// log of 2 (1-p)^{C(n',2)} [2 C(n',2) (1 + (p/(1-p))^2)^{n'}]^r, an upper
// bound on the probability that a random graph on n' vertices decomposes
// into at most r nonempty non-star bicliques
double decomp_prob_bound(long long nprime, long long r, double p);

// margin making 1 + (p/(1-p))^2 < (1-eps)(1-p)^{-1/2} strict: the smaller
// of p/2 and half the feasible gap; requires 0 < p < p0
double margin_eps(double p);

// smallest k whose candidate-count bound n^k (1-p)^{C(k,2)} drops below
// n^{-log_b(1-eps)} with eps = margin_eps(p), b = 1/(1-p). The count is
// taken in the crude form n^k rather than C(n,k): at reachable n the
// binomial form lands well short of 2 log_b n and the downstream
// expected-count checks only close under the crude form.
long long k_const(long long n, double p);

// same selector in the p = n^gamma regime, threshold n^{gamma+1/3},
// gamma in (-1/3, 0)
long long k_power(long long n, double gamma);

struct SeriesValue {
    double log_value; // natural log of the sum
    long long argmax_r;
};

// sum over r >= 1 of C(n,k+r) * decomp_prob_bound(k+r, r, p): the expected
// count of (k+r)-subsets inducing a decomposable subgraph
SeriesValue expected_W(long long n, long long k, double p);

// same sum started at r = 0 with k+1 in place of k
SeriesValue expected_Wprime(long long n, long long k, double p);

// log of h_i = C(k-1,i) C(n-k+1,k-i-1) / C(n,k-1) * (1-p)^{-C(i,2)},
// valid for 2 <= i <= k-2
double log_h_term(long long n, long long k, double p, long long i);

// (1-p)^{-i} (k-i-1)^2 / ((i+1)(n-2k+i+3)) = h_{i+1}/h_i,
// valid for 2 <= i <= k-3; plain value
double kappa_ratio(long long n, long long k, double p, long long i);

// smallest integer m > 3 with (1-2^{-12}p)^{-1/(80 m^2)} > 1+(p/(1-p))^{m+1};
// the minimum biclique side size selector for p in [p0, 1/2)
int m_selector(double p);

// smallest k with (1-2^{-12}p)^{k/(40 m^2)} < n^{-2}, m = m_selector(p);
// grows like ln n but the constant is astronomically large
long long k_mid(long long n, double p);

// 4 * sum over r >= 0 of ratio^{k+r} with ratio = n (1-2^{-12}p)^{k/(40 m^2)}
// and k = k_mid(n,p); geometric closed form, log space;
// DivergentSum when ratio >= 1
double expected_W_mid(long long n, double p);

// the three feasibility inequalities for the pair-family constants (a,c)
// plus the range constraints 0 < a < 0.01, 0 < c < 0.01; p in (p0, 1/2)
bool check_fk_constants(double p, double a, double c);

// first feasible pair on the grid a in {0.009, 0.0045, ...}, c = a/100;
// NoFeasiblePair when the grid exhausts
std::pair<double, double> fk_constants(double p);

// target order 2 (1+c) log_b(n) / (1 - a/2) of the pair-family subgraph,
// b = 1/(1-p); plain value, rounding left to callers
double fk_order(double n, double p, double a, double c);

} // namespace bplab::num

#endif
