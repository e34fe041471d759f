#pragma once

#include <complex>
#include <functional>
#include <map>
#include <span>
#include <variant>
#include <vector>

namespace cusp_theta {

using cplx = std::complex<double>;
using ComplexFn = std::function<cplx(cplx)>;

inline constexpr double pi = 3.14159265358979323846;
inline constexpr cplx I{0.0, 1.0};

struct QuadratureBudget {
    double abs_tol = 1e-13;
    double rel_tol = 1e-12;
    int max_subdivisions = 4000;
    double ray_truncation = 60.0;

    void validate() const;
};

enum class DetourSide { Left, Right };  // relative to the direction of travel

struct Segment {
    cplx start, end;
};

// z(θ) = center + radius e^{iθ}, θ running from theta_start to theta_end
struct Arc {
    cplx center;
    double radius;
    double theta_start, theta_end;
};

using PathPiece = std::variant<Segment, Arc>;

class Path {
public:
    Path() = default;
    explicit Path(cplx start) : start_(start), end_(start) {}

    static Path segment(cplx a, cplx b);
    static Path ray(cplx start, cplx direction, double length);
    static Path circle(cplx center, double radius);
    // straight segment a→b passing each point in `holes` (assumed on the segment)
    // along a semicircle of the given radius on `side`
    static Path detoured_segment(cplx a, cplx b, std::span<const cplx> holes, double radius,
                                 DetourSide side);

    Path& line_to(cplx z);
    Path& append(const Path& other);

    const std::vector<PathPiece>& pieces() const { return pieces_; }
    cplx start() const { return start_; }
    cplx end() const { return end_; }

private:
    std::vector<PathPiece> pieces_;
    cplx start_{}, end_{};
};

struct QuadResult {
    cplx value;
    double error;
    int evaluations;
};

// Adaptive Gauss–Kronrod (7/15) with global subdivision across all pieces.
QuadResult integrate(const ComplexFn& f, const Path& path, const QuadratureBudget& budget = {});

// ∫ over [a,b] of a real-parameter integrand, convenience wrapper
QuadResult integrate_real(const std::function<cplx(double)>& f, double a, double b,
                          const QuadratureBudget& budget = {});

// c_n = (1/2πi)∮ f(z)(z−center)^{−n−1}dz by the trapezoidal rule, doubling K from
// `nodes` until successive estimates agree to `tol` (relative to max(1,|c_n|)).
std::map<int, cplx> laurent_coefficients(const ComplexFn& f, cplx center, double radius,
                                         std::span<const int> orders, int nodes = 256,
                                         double tol = 1e-10);

cplx residue(const ComplexFn& f, cplx center, double radius);

enum class Crossing {
    FromAbove,  // value below the axis minus value above
    FromBelow,  // value above minus value below
};

struct JumpResult {
    cplx value;
    std::vector<double> eps;
    std::vector<cplx> differences;
    double error_estimate;
};

// Richardson-extrapolated jump of f across the real axis at x. `above` and `below`
// are evaluated at x+iε and x−iε respectively; they may differ so that callers can
// pick the appropriate sheet on each side.
JumpResult jump(const ComplexFn& above, const ComplexFn& below, double x, Crossing crossing,
                double eps0 = 1e-2);

struct GaussRule {
    std::vector<double> nodes, weights;  // on [−1, 1]
};

const GaussRule& gauss_legendre(int n);

}  // namespace cusp_theta
