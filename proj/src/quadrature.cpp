#include "qsnp/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>

namespace qsnp {

namespace {

// 15-point Kronrod extension of the 7-point Gauss rule on [-1, 1].
// Odd-index nodes carry the embedded Gauss rule.
constexpr int kNodes = 15;
constexpr double kX[kNodes] = {
    -0.991455371120812639206854697526329,
    -0.949107912342758524526189684047851,
    -0.864864423359769072789712788640926,
    -0.741531185599394439863864773280788,
    -0.586087235467691130294144838258730,
    -0.405845151377397166906606412076961,
    -0.207784955007898467600689403773245,
    0.0,
    0.207784955007898467600689403773245,
    0.405845151377397166906606412076961,
    0.586087235467691130294144838258730,
    0.741531185599394439863864773280788,
    0.864864423359769072789712788640926,
    0.949107912342758524526189684047851,
    0.991455371120812639206854697526329,
};
constexpr double kWK[kNodes] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
    0.204432940075298892414161999234649,
    0.190350578064785409913256402421014,
    0.169004726639267902826583426598550,
    0.140653259715525918745189590510238,
    0.104790010322250183839876322541518,
    0.063092092629978553290700663189204,
    0.022935322010529224963732008058970,
};
constexpr double kWG[7] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
    0.381830050505118944950369775488975,
    0.279705391489276667901467771423780,
    0.129484966168869693270611432679082,
};

struct Segment {
    double a, b;
    double value;
    double error;
    bool operator<(const Segment& o) const { return error < o.error; }
};

Segment evaluate(const std::function<double(double)>& f, double a, double b)
{
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    double k15 = 0.0, g7 = 0.0;
    for (int i = 0; i < kNodes; ++i) {
        const double fx = f(mid + half * kX[i]);
        k15 += kWK[i] * fx;
        if (i % 2 == 1) g7 += kWG[i / 2] * fx;
    }
    k15 *= half;
    g7 *= half;
    return {a, b, k15, std::abs(k15 - g7)};
}

}  // namespace

QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           double rel_tol, double abs_tol, int max_intervals)
{
    return integrate_split(f, a, b, {}, rel_tol, abs_tol, max_intervals);
}

QuadratureResult integrate_split(const std::function<double(double)>& f, double a, double b,
                                 const std::vector<double>& breakpoints,
                                 double rel_tol, double abs_tol, int max_intervals)
{
    QuadratureResult result;
    if (a == b) {
        result.converged = true;
        return result;
    }
    const double sign = (a < b) ? 1.0 : -1.0;
    if (sign < 0) std::swap(a, b);

    std::vector<double> edges{a, b};
    for (double p : breakpoints)
        if (p > a && p < b) edges.push_back(p);
    std::sort(edges.begin(), edges.end());

    std::priority_queue<Segment> heap;
    double total = 0.0, err = 0.0;
    for (size_t i = 0; i + 1 < edges.size(); ++i) {
        Segment s = evaluate(f, edges[i], edges[i + 1]);
        total += s.value;
        err += s.error;
        heap.push(s);
    }

    int n = static_cast<int>(heap.size());
    while (n < max_intervals) {
        if (err <= std::max(abs_tol, rel_tol * std::abs(total))) break;
        Segment worst = heap.top();
        heap.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        if (mid <= worst.a || mid >= worst.b) break;  // interval at machine resolution
        Segment left = evaluate(f, worst.a, mid);
        Segment right = evaluate(f, mid, worst.b);
        total += left.value + right.value - worst.value;
        err += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);
        ++n;
    }

    result.value = sign * total;
    result.error_estimate = err;
    result.intervals = n;
    result.converged = err <= std::max(abs_tol, rel_tol * std::abs(total));
    return result;
}

}  // namespace qsnp
