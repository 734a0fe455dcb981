#include "bplab/numerics.hpp"

#include "bplab/errors.hpp"

#include <cmath>
#include <limits>

namespace bplab::num {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();
// terms below this relative size no longer move the running sum
const double kTruncLog = std::log(1e-30);

// log(1 + e^x), stable for large |x|
double log1p_exp(double x) {
    if (x > 36.0) return x;
    return std::log1p(std::exp(x));
}

void require_prob(double p) {
    if (!(p > 0.0 && p < 1.0)) throw BadArgs("p must lie in (0,1)");
}

double log_odds(double p) { return std::log(p) - std::log1p(-p); }

} // namespace

double log_binom(long long n, long long k) {
    if (k < 0 || k > n) return kNegInf;
    return std::lgamma(static_cast<double>(n) + 1.0) -
           std::lgamma(static_cast<double>(k) + 1.0) -
           std::lgamma(static_cast<double>(n - k) + 1.0);
}

double log_add_exp(double a, double b) {
    if (a == kNegInf) return b;
    if (b == kNegInf) return a;
    double hi = a > b ? a : b;
    double lo = a > b ? b : a;
    return hi + std::log1p(std::exp(lo - hi));
}

double p0() {
    static const double root = [] {
        auto f = [](double x) { return ((4.0 * x - 7.0) * x + 5.0) * x - 1.0; };
        double lo = 0.25, hi = 0.4;
        for (int i = 0; i < 200; ++i) {
            double mid = 0.5 * (lo + hi);
            if (f(mid) < 0.0)
                lo = mid;
            else
                hi = mid;
        }
        return 0.5 * (lo + hi);
    }();
    return root;
}

double critical_sign(double p) {
    require_prob(p);
    double q = p / (1.0 - p);
    return 1.0 + q * q - 1.0 / std::sqrt(1.0 - p);
}

double decay_ratio(long long r, long long s, double p) {
    require_prob(p);
    if (s < 0 || r <= s) throw BadArgs("decay_ratio needs r > s >= 0");
    double front = static_cast<double>(r - s) / static_cast<double>(r + s + 2);
    return front * std::pow((1.0 - p) / p, static_cast<double>(s + 1));
}

double log_decay_ratio(long long r, long long s, double p) {
    require_prob(p);
    if (s < 0 || r <= s) throw BadArgs("decay_ratio needs r > s >= 0");
    return std::log(static_cast<double>(r - s)) -
           std::log(static_cast<double>(r + s + 2)) -
           static_cast<double>(s + 1) * log_odds(p);
}

double biclique_series_lhs(int nprime, int mprime, double p) {
    require_prob(p);
    if (mprime < 2 || nprime < 2 * mprime)
        throw BadArgs("series needs m' >= 2 and n' >= 2m'");
    double lq = log_odds(p);
    double total = kNegInf;
    for (long long l = mprime; l + mprime <= nprime; ++l) {
        for (long long mu = mprime; mu <= l && l + mu <= nprime; ++mu) {
            double t = log_binom(nprime, l + mu) + log_binom(l + mu, l) +
                       static_cast<double>(l * mu) * lq;
            total = log_add_exp(total, t);
        }
    }
    return total;
}

double biclique_series_rhs(int nprime, int mprime, double p) {
    require_prob(p);
    if (mprime < 2 || nprime < 2 * mprime)
        throw BadArgs("series needs m' >= 2 and n' >= 2m'");
    double lq = log_odds(p);
    return std::log(2.0) + log_binom(nprime, mprime) +
           static_cast<double>(nprime) * log1p_exp(static_cast<double>(mprime) * lq);
}

double decomp_prob_bound(long long nprime, long long r, double p) {
    require_prob(p);
    if (nprime < 2 || r < 0) throw BadArgs("bound needs n' >= 2 and r >= 0");
    double c2 = 0.5 * static_cast<double>(nprime) * static_cast<double>(nprime - 1);
    double bracket = std::log(2.0) + std::log(c2) +
                     static_cast<double>(nprime) * log1p_exp(2.0 * log_odds(p));
    return std::log(2.0) + c2 * std::log1p(-p) + static_cast<double>(r) * bracket;
}

double margin_eps(double p) {
    if (!(p > 0.0) || !(p < p0())) throw NotBelowP0("p must lie in (0, p0)");
    double q = p / (1.0 - p);
    double gap = 1.0 - (1.0 + q * q) * std::sqrt(1.0 - p);
    double eps = std::min(p / 2.0, gap / 2.0);
    return eps;
}

namespace {

// ascending scan for the first k where the crude candidate count drops
// below the regime threshold (both in log space)
long long scan_k(double log_n, double log1mp, double log_thresh) {
    for (long long k = 1; k <= 30'000'000; ++k) {
        double c2 = 0.5 * static_cast<double>(k) * static_cast<double>(k - 1);
        double log_count = static_cast<double>(k) * log_n + c2 * log1mp;
        if (log_count < log_thresh) return k;
    }
    throw TooLarge("selector scan exhausted");
}

} // namespace

long long k_const(long long n, double p) {
    if (n < 2) throw BadArgs("k_const needs n >= 2");
    double eps = margin_eps(p); // also enforces 0 < p < p0
    double log_n = std::log(static_cast<double>(n));
    double log_b = -std::log1p(-p);
    double log_thresh = -(std::log1p(-eps) / log_b) * log_n;
    return scan_k(log_n, std::log1p(-p), log_thresh);
}

long long k_power(long long n, double gamma) {
    if (n < 2) throw BadArgs("k_power needs n >= 2");
    if (!(gamma > -1.0 / 3.0 && gamma < 0.0))
        throw BadArgs("gamma must lie in (-1/3, 0)");
    double log_n = std::log(static_cast<double>(n));
    double p = std::pow(static_cast<double>(n), gamma);
    double log_thresh = (gamma + 1.0 / 3.0) * log_n;
    return scan_k(log_n, std::log1p(-p), log_thresh);
}

namespace {

// shared tail sum for the two expected-count series: terms
// C(n, k0 + r) * decomp_prob_bound(k0 + r, r, p) for r in [r_lo, n - k0]
SeriesValue series_sum(long long n, long long k0, long long r_lo, double p) {
    double total = kNegInf;
    double best = kNegInf;
    double prev = kNegInf;
    long long argmax = r_lo;
    for (long long r = r_lo; k0 + r <= n; ++r) {
        double t = log_binom(n, k0 + r) + decomp_prob_bound(k0 + r, r, p);
        total = log_add_exp(total, t);
        if (t > best) {
            best = t;
            argmax = r;
        }
        // safe to truncate only once terms are both falling and negligible
        if (t < prev && t < total + kTruncLog) break;
        prev = t;
    }
    return {total, argmax};
}

} // namespace

SeriesValue expected_W(long long n, long long k, double p) {
    require_prob(p);
    if (k < 1 || k >= n) throw BadArgs("expected_W needs 1 <= k < n");
    return series_sum(n, k, 1, p);
}

SeriesValue expected_Wprime(long long n, long long k, double p) {
    require_prob(p);
    if (k < 1 || k + 1 > n) throw BadArgs("expected_Wprime needs 1 <= k <= n-1");
    return series_sum(n, k + 1, 0, p);
}

double log_h_term(long long n, long long k, double p, long long i) {
    require_prob(p);
    if (i < 2 || i > k - 2) throw BadArgs("h term needs 2 <= i <= k-2");
    double c2 = 0.5 * static_cast<double>(i) * static_cast<double>(i - 1);
    return log_binom(k - 1, i) + log_binom(n - k + 1, k - i - 1) -
           log_binom(n, k - 1) - c2 * std::log1p(-p);
}

double kappa_ratio(long long n, long long k, double p, long long i) {
    require_prob(p);
    if (i < 2 || i > k - 3) throw BadArgs("kappa needs 2 <= i <= k-3");
    long long denom = n - 2 * k + i + 3;
    if (denom <= 0) throw BadArgs("kappa needs n - 2k + i + 3 > 0");
    double top = static_cast<double>(k - i - 1);
    return std::pow(1.0 - p, -static_cast<double>(i)) * top * top /
           (static_cast<double>(i + 1) * static_cast<double>(denom));
}

int m_selector(double p) {
    if (!(p >= p0() && p < 0.5)) throw BadArgs("m selector needs p in [p0, 1/2)");
    double lq = log_odds(p); // negative since p < 1/2
    double shrink = -std::log1p(-p / 4096.0);
    for (int m = 4; m <= 10'000'000; ++m) {
        double lhs = shrink / (80.0 * static_cast<double>(m) * static_cast<double>(m));
        double rhs = std::log1p(std::exp(static_cast<double>(m + 1) * lq));
        if (lhs > rhs) return m;
    }
    throw TooLarge("m selector scan exhausted");
}

long long k_mid(long long n, double p) {
    if (n < 2) throw BadArgs("k_mid needs n >= 2");
    int m = m_selector(p); // also enforces p in [p0, 1/2)
    double x = std::log1p(-p / 4096.0); // negative
    double denom = 40.0 * static_cast<double>(m) * static_cast<double>(m);
    double log_n = std::log(static_cast<double>(n));
    auto holds = [&](long long k) {
        return static_cast<double>(k) * x / denom < -2.0 * log_n;
    };
    auto k0 = static_cast<long long>(std::floor(2.0 * log_n * denom / (-x))) + 1;
    while (k0 > 1 && holds(k0 - 1)) --k0;
    while (!holds(k0)) ++k0;
    return k0;
}

double expected_W_mid(long long n, double p) {
    long long k = k_mid(n, p);
    int m = m_selector(p);
    double x = std::log1p(-p / 4096.0);
    double denom = 40.0 * static_cast<double>(m) * static_cast<double>(m);
    double log_ratio = std::log(static_cast<double>(n)) +
                       static_cast<double>(k) * x / denom;
    if (log_ratio >= 0.0) throw DivergentSum("geometric ratio is not below 1");
    return std::log(4.0) + static_cast<double>(k) * log_ratio -
           std::log1p(-std::exp(log_ratio));
}

bool check_fk_constants(double p, double a, double c) {
    if (!(p > p0() && p < 0.5)) throw BadArgs("constants need p in (p0, 1/2)");
    if (!(a > 0.0 && a < 0.01 && c > 0.0 && c < 0.01)) return false;
    double q = p / (1.0 - p);
    // growth exponent of the dense-pair count stays under the edge budget
    double e1 = (a + 4.0 * c) / (a * (1.0 - a) * (1.0 + 2.0 * c));
    bool ok1 = e1 * (-0.5) * std::log1p(-p) < std::log1p(q * q);
    // collision probability of a pair beats a single edge
    double v = (1.0 - p) * (1.0 - p) + p * p;
    bool ok2 = (1.0 - 10.0 * a) / (1.0 - a / 2.0) * std::log(v) < std::log1p(-p);
    // the shrunk order still exceeds the cover threshold
    bool ok3 = (1.0 - 4.0 * a) * (1.0 + c) / (1.0 - a / 2.0) < 1.0;
    return ok1 && ok2 && ok3;
}

std::pair<double, double> fk_constants(double p) {
    double a = 0.009;
    for (int i = 0; i < 200; ++i) {
        double c = a / 100.0;
        if (check_fk_constants(p, a, c)) return {a, c};
        a /= 2.0;
    }
    throw NoFeasiblePair("halving grid exhausted");
}

double fk_order(double n, double p, double a, double c) {
    require_prob(p);
    if (!(n > 1.0)) throw BadArgs("fk_order needs n > 1");
    if (!(a >= 0.0 && a < 2.0 && c >= 0.0)) throw BadArgs("bad constants");
    double log_b = -std::log1p(-p);
    return 2.0 * (1.0 + c) * std::log(n) / log_b / (1.0 - a / 2.0);
}

} // namespace bplab::num
