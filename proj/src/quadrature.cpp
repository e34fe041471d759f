#include "cusp_theta/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <mutex>
#include <queue>
#include <sstream>

#include "cusp_theta/errors.hpp"

namespace cusp_theta {

namespace {

// Kronrod 15-point abscissae and weights, Gauss 7-point weights (QUADPACK qk15)
constexpr std::array<double, 8> xgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> wgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> wg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Parametrized {
    // z(s) and z'(s) for s in [0, 1]
    cplx z0, dz;          // segment
    cplx center;          // arc
    double radius = 0, t0 = 0, t1 = 0;
    bool is_arc = false;

    void at(double s, cplx& z, cplx& dzds) const {
        if (!is_arc) {
            z = z0 + dz * s;
            dzds = dz;
            return;
        }
        const double th = t0 + (t1 - t0) * s;
        const cplx e = std::polar(1.0, th);
        z = center + radius * e;
        dzds = I * radius * e * (t1 - t0);
    }
};

Parametrized parametrize(const PathPiece& piece) {
    Parametrized p;
    if (const auto* seg = std::get_if<Segment>(&piece)) {
        p.z0 = seg->start;
        p.dz = seg->end - seg->start;
    } else {
        const auto& arc = std::get<Arc>(piece);
        p.is_arc = true;
        p.center = arc.center;
        p.radius = arc.radius;
        p.t0 = arc.theta_start;
        p.t1 = arc.theta_end;
    }
    return p;
}

struct Interval {
    int piece;
    double a, b;
    cplx value;
    double error;
    bool operator<(const Interval& o) const { return error < o.error; }
};

cplx checked(const ComplexFn& f, cplx z) {
    const cplx v = f(z);
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
        std::ostringstream os;
        os << "non-finite integrand sample at z = " << z;
        throw NumericalError(os.str());
    }
    return v;
}

Interval gk15(const ComplexFn& f, const Parametrized& p, int piece, double a, double b) {
    const double c = 0.5 * (a + b), h = 0.5 * (b - a);
    cplx z, dz;
    p.at(c, z, dz);
    const cplx fc = checked(f, z) * dz;
    cplx kron = fc * wgk[7];
    cplx gauss = fc * wg[3];
    for (int j = 0; j < 7; ++j) {
        cplx z1, d1, z2, d2;
        p.at(c - h * xgk[j], z1, d1);
        p.at(c + h * xgk[j], z2, d2);
        const cplx s = checked(f, z1) * d1 + checked(f, z2) * d2;
        kron += wgk[j] * s;
        if (j % 2 == 1) gauss += wg[j / 2] * s;
    }
    kron *= h;
    gauss *= h;
    return {piece, a, b, kron, std::abs(kron - gauss)};
}

}  // namespace

void QuadratureBudget::validate() const {
    if (!(abs_tol > 0) || !(rel_tol > 0))
        throw ValidationError("quadrature tolerances must be positive");
    if (max_subdivisions < 1) throw ValidationError("max_subdivisions must be positive");
    if (!(ray_truncation > 0)) throw ValidationError("ray_truncation must be positive");
}

Path Path::segment(cplx a, cplx b) {
    Path p(a);
    p.line_to(b);
    return p;
}

Path Path::ray(cplx start, cplx direction, double length) {
    return segment(start, start + direction / std::abs(direction) * length);
}

Path Path::circle(cplx center, double radius) {
    Path p(center + radius);
    p.pieces_.push_back(Arc{center, radius, 0.0, 2 * pi});
    return p;
}

Path Path::detoured_segment(cplx a, cplx b, std::span<const cplx> holes, double radius,
                            DetourSide side) {
    const cplx u = (b - a) / std::abs(b - a);
    std::vector<double> along;
    for (cplx h : holes) along.push_back(std::real((h - a) * std::conj(u)));
    std::sort(along.begin(), along.end());
    const double len = std::abs(b - a);
    for (std::size_t i = 0; i < along.size(); ++i) {
        if (along[i] - radius <= 0 || along[i] + radius >= len)
            throw ValidationError("detour semicircle leaves the segment");
        if (i > 0 && along[i] - along[i - 1] <= 2 * radius)
            throw ValidationError("detour semicircles overlap");
    }
    Path p(a);
    const double phi = std::arg(u);
    for (double s : along) {
        const cplx c = a + u * s;
        p.line_to(c - radius * u);
        const double from = side == DetourSide::Left ? phi + pi : phi - pi;
        p.pieces_.push_back(Arc{c, radius, from, phi});
        p.end_ = c + radius * u;
    }
    p.line_to(b);
    return p;
}

Path& Path::line_to(cplx z) {
    pieces_.push_back(Segment{end_, z});
    end_ = z;
    return *this;
}

Path& Path::append(const Path& other) {
    if (pieces_.empty() && other.pieces_.empty()) return *this;
    if (pieces_.empty()) {
        *this = other;
        return *this;
    }
    if (std::abs(other.start_ - end_) > 1e-12 * (1 + std::abs(end_)))
        throw ValidationError("appended path is not connected");
    pieces_.insert(pieces_.end(), other.pieces_.begin(), other.pieces_.end());
    end_ = other.end_;
    return *this;
}

QuadResult integrate(const ComplexFn& f, const Path& path, const QuadratureBudget& budget) {
    budget.validate();
    std::vector<Parametrized> params;
    for (const auto& piece : path.pieces()) params.push_back(parametrize(piece));

    std::priority_queue<Interval> heap;
    cplx total = 0;
    double error = 0;
    int evals = 0;
    for (std::size_t i = 0; i < params.size(); ++i) {
        Interval iv = gk15(f, params[i], static_cast<int>(i), 0.0, 1.0);
        evals += 15;
        total += iv.value;
        error += iv.error;
        heap.push(iv);
    }
    int subdivisions = 0;
    while (error > std::max(budget.abs_tol, budget.rel_tol * std::abs(total))) {
        if (subdivisions >= budget.max_subdivisions) {
            std::ostringstream os;
            os << "quadrature budget exhausted: error estimate " << error << " after "
               << subdivisions << " subdivisions";
            throw NumericalError(os.str());
        }
        const Interval worst = heap.top();
        heap.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        if (mid <= worst.a || mid >= worst.b) {
            // interval at floating-point resolution; accept what we have
            heap.push({worst.piece, worst.a, worst.b, worst.value, 0.0});
            error -= worst.error;
            continue;
        }
        const auto& p = params[worst.piece];
        Interval left = gk15(f, p, worst.piece, worst.a, mid);
        Interval right = gk15(f, p, worst.piece, mid, worst.b);
        evals += 30;
        total += left.value + right.value - worst.value;
        error += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);
        ++subdivisions;
    }
    // recompute from the leaves to shed accumulated rounding from the running sums
    cplx sum = 0;
    double err = 0;
    while (!heap.empty()) {
        sum += heap.top().value;
        err += heap.top().error;
        heap.pop();
    }
    return {sum, err, evals};
}

QuadResult integrate_real(const std::function<cplx(double)>& f, double a, double b,
                          const QuadratureBudget& budget) {
    return integrate([&](cplx z) { return f(z.real()); }, Path::segment(a, b), budget);
}

std::map<int, cplx> laurent_coefficients(const ComplexFn& f, cplx center, double radius,
                                         std::span<const int> orders, int nodes, double tol) {
    if (!(radius > 0)) throw ValidationError("Laurent radius must be positive");
    auto estimate = [&](int K) {
        std::vector<cplx> samples(K);
        for (int k = 0; k < K; ++k)
            samples[k] = checked(f, center + std::polar(radius, 2 * pi * k / K));
        std::map<int, cplx> out;
        for (int n : orders) {
            cplx s = 0;
            for (int k = 0; k < K; ++k) s += samples[k] * std::polar(1.0, -2 * pi * k * n / K);
            out[n] = s * std::pow(radius, -n) / static_cast<double>(K);
        }
        return out;
    };
    int K = nodes;
    auto prev = estimate(K);
    for (int round = 0; round < 7; ++round) {
        K *= 2;
        auto next = estimate(K);
        bool stable = true;
        for (int n : orders)
            if (std::abs(next[n] - prev[n]) > tol * std::max(1.0, std::abs(next[n]))) stable = false;
        if (stable) return next;
        prev = std::move(next);
    }
    std::ostringstream os;
    os << "Laurent extraction unstable at " << center << " radius " << radius
       << " (nearby singularity suspected)";
    throw NumericalError(os.str());
}

cplx residue(const ComplexFn& f, cplx center, double radius) {
    const int order[] = {-1};
    return laurent_coefficients(f, center, radius, order)[-1];
}

JumpResult jump(const ComplexFn& above, const ComplexFn& below, double x, Crossing crossing,
                double eps0) {
    JumpResult r;
    for (double e : {eps0, eps0 / 2, eps0 / 4}) {
        cplx d = above(cplx(x, e)) - below(cplx(x, -e));
        if (crossing == Crossing::FromAbove) d = -d;
        r.eps.push_back(e);
        r.differences.push_back(d);
    }
    const auto& d = r.differences;
    r.value = (d[0] - 6.0 * d[1] + 8.0 * d[2]) / 3.0;
    r.error_estimate = std::abs(r.value - (2.0 * d[2] - d[1]));
    return r;
}

const GaussRule& gauss_legendre(int n) {
    static std::mutex mu;
    static std::map<int, GaussRule> cache;
    std::lock_guard lock(mu);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
    GaussRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(pi * (i + 0.75) / (n + 0.5));
        double dp = 0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1, p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) break;
        }
        double p0 = 1, p1 = x;
        for (int k = 2; k <= n; ++k) {
            const double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
            p0 = p1;
            p1 = p2;
        }
        dp = n * (x * p1 - p0) / (x * x - 1);
        const double w = 2 / ((1 - x * x) * dp * dp);
        rule.nodes[i] = -x;
        rule.nodes[n - 1 - i] = x;
        rule.weights[i] = rule.weights[n - 1 - i] = w;
    }
    return cache.emplace(n, std::move(rule)).first->second;
}

}  // namespace cusp_theta
