#pragma once

#include <array>
#include <optional>
#include <vector>

#include "hepm/models.hpp"

namespace hepm {

using Mat3 = std::array<std::array<double, 3>, 3>;

enum class ConicKind { Primal, Dual };

// Symmetric 3x3 quadratic form kept as the representative it was built from.
// Equality up to scale goes through canonical().
class ConicForm {
public:
    ConicForm() = default;
    ConicForm(double a11, double a12, double a13, double a22, double a23, double a33,
              ConicKind kind = ConicKind::Primal);
    static ConicForm from_matrix(const Mat3& m, ConicKind kind = ConicKind::Primal);
    static ConicForm diagonal(double a, double b, double c, ConicKind kind = ConicKind::Primal);

    double operator()(int i, int j) const;
    Mat3 matrix() const;
    ConicKind kind() const { return kind_; }

    // largest |entry| = 1, first nonzero entry positive
    ConicForm canonical() const;
    ConicForm scaled(double s) const;
    double eval(const Homogeneous& p) const;
    Homogeneous apply(const Homogeneous& p) const;
    double det() const;

private:
    std::array<double, 6> e_{};  // a11 a12 a13 a22 a23 a33
    ConicKind kind_ = ConicKind::Primal;
};

inline constexpr double kRankTolerance = 1e-9;
inline constexpr double kRootMergeTolerance = 1e-9;

bool approx_equal_up_to_scale(const ConicForm& a, const ConicForm& b, double tol = 1e-10);
int conic_rank(const ConicForm& c);

ConicForm dual_conic(const ConicForm& c);

Homogeneous polar_line(const Homogeneous& pt, const ConicForm& c);
Homogeneous pole(const Homogeneous& line, const ConicForm& c);

struct PencilMember {
    double lambda = 0.0;
    double mu = 1.0;  // member is lambda*a - mu*b
    ConicForm form;
    int rank = 3;
    bool degenerate = true;
};

// Singular members of lambda*a - mu*b, ordered by lambda (the mu = 0 member last).
std::vector<PencilMember> pencil_singular_members(const ConicForm& a, const ConicForm& b);

// Real roots of c3 x^3 + c2 x^2 + c1 x + c0, ascending, near-equal roots merged.
std::vector<double> real_polynomial_roots(double c3, double c2, double c1, double c0);

struct SplitResult {
    bool imaginary = false;
    Homogeneous first{};
    Homogeneous second{};
};

SplitResult split_degenerate_dual(const ConicForm& c);

// Named forms.
ConicForm absolute_form();                        // x^2 + y^2 - 1
ConicForm dual_absolute();                        // xi1^2 + xi2^2 - xi3^2
ConicForm h_parabola_form(double C);              // x^2/C^2 + 2y^2 - 2y
ConicForm h_parabola_dual(double C);              // C^2 xi1^2 - 2 xi2 xi3 - 2 xi3^2
ConicForm euclidean_parabola_form(double p);      // x^2 - 2py
ConicForm euclidean_dual_absolute();              // xi1^2 + xi2^2

struct HepFoci {
    Homogeneous asymptotic_focus{};
    BckPoint proper_focus{};
    std::vector<PencilMember> members;
    double residual = 0.0;  // distance of the pipeline foci from the closed form
};

HepFoci foci_of_h_elliptic_parabola(double C);

struct EuclideanFoci {
    Homogeneous ideal_focus{};
    Vec2 proper_focus{};
    std::vector<PencilMember> members;
};

EuclideanFoci euclidean_parabola_foci(double p);

}  // namespace hepm
