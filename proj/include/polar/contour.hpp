#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "polar/expr.hpp"
#include "polar/region.hpp"

namespace polar {

// Position and parameter velocity of a curve in H.
struct CurveSample {
    double r;
    double theta;
    double dr;     // r'(t)
    double dtheta; // theta'(t)
};

// One smooth piece t in [t_begin, t_end] -> (r(t), theta(t)).
class CurvePiece {
public:
    // Straight in (r, theta) coordinates.
    static CurvePiece segment(const PolarPoint& from, const PolarPoint& to);
    // Straight in (log r, theta) coordinates: r = r1 (r2/r1)^t, theta linear.
    static CurvePiece log_spiral(const PolarPoint& from, const PolarPoint& to);
    // Arc of a polar-disk boundary: r = r0 exp(rho cos phi), theta = theta0 + rho sin phi.
    static CurvePiece disk_arc(const PolarPoint& center, double rho, double phi_begin,
                               double phi_end);
    // User parametrization by two one-variable expressions in t.
    static CurvePiece parametric(Expression r_of_t, Expression theta_of_t, double t_begin,
                                 double t_end, std::string variable = "t");

    CurveSample at(double t) const;
    double t_begin() const noexcept { return t0_; }
    double t_end() const noexcept { return t1_; }
    PolarPoint start() const;
    PolarPoint end() const;
    CurvePiece reversed() const;
    bool is_reversed() const noexcept { return reversed_; }

    // Text in the curve mini-language that reproduces this piece.
    std::string describe() const;

    // True when the piece cannot move: empty parameter interval or, for the
    // straight families, coincident endpoints.
    bool zero_length() const;

    struct Segment {
        double r1, th1, r2, th2;
    };
    struct LogSpiral {
        double r1, th1, r2, th2;
    };
    struct DiskArc {
        double r0, th0, rho;
    };
    struct Parametric {
        Expression r;
        Expression theta;
        std::string variable;
    };
    using Shape = std::variant<Segment, LogSpiral, DiskArc, Parametric>;

    const Shape& shape() const noexcept { return shape_; }

private:
    CurvePiece(Shape shape, double t0, double t1) : shape_(std::move(shape)), t0_(t0), t1_(t1) {}
    CurveSample base_at(double s) const;

    Shape shape_;
    double t0_;
    double t1_;
    bool reversed_ = false;
};

// Piecewise-smooth regular curve in H.
class Curve {
public:
    // Validates r > 0 (257 samples per piece) and junction continuity, and drops
    // zero-length pieces with a warning. Throws Error(InvalidCurve).
    explicit Curve(std::vector<CurvePiece> pieces);

    static Curve rectangle(const Rect& rect); // counterclockwise: bottom, right, top, left
    static Curve disk_boundary(const PolarPoint& center, double rho);

    const std::vector<CurvePiece>& pieces() const noexcept { return pieces_; }
    const std::vector<std::string>& warnings() const noexcept { return warnings_; }

    PolarPoint start() const;
    PolarPoint end() const;
    bool closed() const;

    Curve reversed() const;
    // Concatenation; the end of *this must meet the start of `next`.
    Curve then(const Curve& next) const;

    // Length of the image path t -> r(t) e^{i theta(t)} in C, the natural
    // length for the integrand's dr + i r dtheta.
    double length() const;

    std::string describe() const;

private:
    Curve() = default;
    void validate();

    std::vector<CurvePiece> pieces_;
    std::vector<std::string> warnings_;
};

// Tolerance used for endpoint, junction and closure tests (scaled by max(1, |coordinate|)).
inline constexpr double kJoinTolerance = 1e-12;
bool points_coincide(const PolarPoint& a, const PolarPoint& b,
                     double tolerance = kJoinTolerance);

// Curve mini-language:
//   curve := item ("+" item)*        concatenation
//   item  := "~" item | shape | "(" curve ")"   "~" reverses
//   shape := segment(r1,th1,r2,th2) | rect(a,b,c,d) | diskboundary(r0,th0,rho)
//          | spiral(r1,th1,r2,th2) | arc(r0,th0,rho,phi0,phi1)
//          | param(R_EXPR; TH_EXPR; t0, t1)     expressions in the variable t
Curve parse_curve(std::string_view source);

struct IntegralResult {
    Complex value;
    double error_estimate = 0.0;
    std::size_t evaluations = 0;
};

inline constexpr std::size_t kDefaultEvaluationBudget = 1'000'000;

// Raised when the adaptive quadrature runs out of budget; carries the best result.
class ToleranceError : public Error {
public:
    ToleranceError(IntegralResult best, const std::string& what)
        : Error(ErrorCode::ToleranceNotReached, what), best_(best) {}
    const IntegralResult& best() const noexcept { return best_; }

private:
    IntegralResult best_;
};

// Integral of f(r, theta) e^{i theta} (dr + i r dtheta) along the curve.
IntegralResult line_integral(const Expression& e, const Curve& curve, double tol,
                             std::size_t max_evaluations = kDefaultEvaluationBudget);

struct PathCheckReport {
    IntegralResult first;
    IntegralResult second;
    double difference = 0.0;
    bool pass = false; // difference <= 2 (err1 + err2) + tol
};

PathCheckReport path_independence_check(const Expression& e, const Curve& first,
                                        const Curve& second, double tol);

struct SkippedRectangle {
    int i;
    int j;
    std::string message;
};

struct MoreraReport {
    double max_abs = 0.0;
    std::optional<Rect> argmax;
    int argmax_i = -1; // sub-rectangle index along r
    int argmax_j = -1; // along theta
    double scale = 0.0; // max |f| sampled on the region
    bool consistent = false;
    std::size_t evaluated = 0;
    std::vector<SkippedRectangle> skipped;
};

// Closed integrals over the m x n sub-rectangles of `region`. The verdict is
// "consistent with polar-analytic" iff max |integral| <= tol (1 + scale).
MoreraReport morera_scan(const Expression& e, const Rect& region, int m, int n, double tol);

} // namespace polar
