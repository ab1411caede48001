#include "e2sieve/quadrature.hpp"

#include "e2sieve/error.hpp"

#include <array>
#include <cmath>
#include <queue>
#include <string>
#include <vector>

namespace e2sieve {

namespace {

// Kronrod 15-point nodes / weights and the embedded Gauss 7-point weights.
constexpr std::array<long double, 8> kXk = {
    0.991455371120812639206854697526329L, 0.949107912342758524526189684047851L,
    0.864864423359769072789712788640926L, 0.741531185599394439863864773280788L,
    0.586087235467691130294144845693013L, 0.405845151377397166906606412076961L,
    0.207784955007898467600689403773245L, 0.000000000000000000000000000000000L};
constexpr std::array<long double, 8> kWk = {
    0.022935322010529224963732008058970L, 0.063092092629978553290700663189204L,
    0.104790010322250183839876322541518L, 0.140653259715525918745189590510238L,
    0.169004726639267902826583426598550L, 0.190350578064785409913256402421014L,
    0.204432940075298892414161999234649L, 0.209482141084727828012999174891714L};
constexpr std::array<long double, 4> kWg = {
    0.129484966168869693270611432679082L, 0.279705391489276667901467771423780L,
    0.381830050505118944950369775488975L, 0.417959183673469387755102040816327L};

struct Segment {
    long double a, b, value, error;
    bool operator<(const Segment& o) const { return error < o.error; }
};

Segment gauss_kronrod(const std::function<long double(long double)>& f, long double a, long double b) {
    const long double center = 0.5L * (a + b);
    const long double half = 0.5L * (b - a);
    const long double fc = f(center);
    long double kronrod = fc * kWk[7];
    long double gauss = fc * kWg[3];
    for (std::size_t i = 0; i < 7; ++i) {
        const long double dx = half * kXk[i];
        const long double f1 = f(center - dx);
        const long double f2 = f(center + dx);
        kronrod += kWk[i] * (f1 + f2);
        if (i % 2 == 1) gauss += kWg[i / 2] * (f1 + f2);
    }
    kronrod *= half;
    gauss *= half;
    return {a, b, kronrod, std::fabs(kronrod - gauss)};
}

}  // namespace

QuadratureResult integrate_adaptive(const std::function<long double(long double)>& f, long double a,
                                    long double b, long double tol, std::size_t max_intervals) {
    std::priority_queue<Segment> heap;
    Segment first = gauss_kronrod(f, a, b);
    long double total = first.value, error = first.error;
    heap.push(first);
    while (error > tol) {
        if (heap.size() >= max_intervals)
            throw ConvergenceError("integrate_adaptive: subdivision budget exhausted (error " +
                                   std::to_string(static_cast<double>(error)) + ")");
        const Segment worst = heap.top();
        heap.pop();
        const long double mid = 0.5L * (worst.a + worst.b);
        const Segment left = gauss_kronrod(f, worst.a, mid);
        const Segment right = gauss_kronrod(f, mid, worst.b);
        total += left.value + right.value - worst.value;
        error += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);
    }
    // Re-sum from scratch to drop the drift of the running updates.
    QuadratureResult r;
    r.intervals = heap.size();
    while (!heap.empty()) {
        r.value += heap.top().value;
        r.error_estimate += heap.top().error;
        heap.pop();
    }
    return r;
}

}  // namespace e2sieve
