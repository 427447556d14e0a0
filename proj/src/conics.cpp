#include "hepm/conics.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>

namespace hepm {

namespace {

Eigen::Matrix3d to_eigen(const ConicForm& c) {
    Eigen::Matrix3d m;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m(i, j) = c(i, j);
    return m;
}

ConicForm from_eigen(const Eigen::Matrix3d& m, ConicKind kind) {
    return ConicForm(m(0, 0), 0.5 * (m(0, 1) + m(1, 0)), 0.5 * (m(0, 2) + m(2, 0)), m(1, 1),
                     0.5 * (m(1, 2) + m(2, 1)), m(2, 2), kind);
}

// determinant with columns taken from x, y, z
double mixed_det(const Mat3& x, const Mat3& y, const Mat3& z) {
    Eigen::Matrix3d m;
    for (int i = 0; i < 3; ++i) {
        m(i, 0) = x[i][0];
        m(i, 1) = y[i][1];
        m(i, 2) = z[i][2];
    }
    return m.determinant();
}

Eigen::Vector3d singular_values(const ConicForm& c) {
    return Eigen::JacobiSVD<Eigen::Matrix3d>(to_eigen(c)).singularValues();
}

ConicKind flipped(ConicKind k) { return k == ConicKind::Primal ? ConicKind::Dual : ConicKind::Primal; }

void require_nonsingular(const ConicForm& c) {
    const auto s = singular_values(c);
    if (!(s(0) > 0.0) || s(2) <= kRankTolerance * s(0)) throw SingularConicError("conic form is singular");
}

void require_C(double C) {
    if (!(C > 1e-12 && C < 1.0 - 1e-12)) throw DomainError("C must lie in (0,1)");
}

double horner(const std::array<double, 4>& c, double x) { return ((c[3] * x + c[2]) * x + c[1]) * x + c[0]; }
double horner_d(const std::array<double, 4>& c, double x) { return (3.0 * c[3] * x + 2.0 * c[2]) * x + c[1]; }

double polish(const std::array<double, 4>& c, double x) {
    double fx = std::abs(horner(c, x));
    for (int it = 0; it < 6 && fx > 0.0; ++it) {
        const double d = horner_d(c, x);
        if (d == 0.0) break;
        const double nx = x - horner(c, x) / d;
        const double nf = std::abs(horner(c, nx));
        if (!(nf < fx)) break;
        x = nx;
        fx = nf;
    }
    return x;
}

void quadratic_roots(double a, double b, double c, std::vector<double>& out) {
    const double disc = b * b - 4.0 * a * c;
    const double scale = std::max(b * b, std::abs(4.0 * a * c));
    if (std::abs(disc) <= 64.0 * std::numeric_limits<double>::epsilon() * scale) {
        out.push_back(-b / (2.0 * a));
        return;
    }
    if (disc < 0.0) return;
    const double q = -0.5 * (b + std::copysign(std::sqrt(disc), b));
    out.push_back(q / a);
    if (q != 0.0) out.push_back(c / q);
}

// candidate real roots of the monic depressed-cubic solution
std::vector<double> cubic_candidates(double p, double q, double r) {
    const double P = q - p * p / 3.0;
    const double Q = 2.0 * p * p * p / 27.0 - p * q / 3.0 + r;
    const double disc = Q * Q / 4.0 + P * P * P / 27.0;
    std::vector<double> t;
    if (disc > 0.0) {
        const double A = -std::copysign(std::cbrt(std::abs(Q) / 2.0 + std::sqrt(disc)), Q);
        const double B = A != 0.0 ? -P / (3.0 * A) : 0.0;
        t.push_back(A + B);
    } else if (P == 0.0) {
        t.push_back(0.0);
    } else {
        const double m = 2.0 * std::sqrt(-P / 3.0);
        const double arg = std::clamp(3.0 * Q / (P * m), -1.0, 1.0);
        const double phi = std::acos(arg) / 3.0;
        for (int k = 0; k < 3; ++k) t.push_back(m * std::cos(phi - 2.0 * M_PI * k / 3.0));
    }
    for (double& v : t) v -= p / 3.0;
    return t;
}

}  // namespace

ConicForm::ConicForm(double a11, double a12, double a13, double a22, double a23, double a33, ConicKind kind)
    : e_{a11, a12, a13, a22, a23, a33}, kind_(kind) {}

ConicForm ConicForm::from_matrix(const Mat3& m, ConicKind kind) {
    return ConicForm(m[0][0], 0.5 * (m[0][1] + m[1][0]), 0.5 * (m[0][2] + m[2][0]), m[1][1],
                     0.5 * (m[1][2] + m[2][1]), m[2][2], kind);
}

ConicForm ConicForm::diagonal(double a, double b, double c, ConicKind kind) {
    return ConicForm(a, 0.0, 0.0, b, 0.0, c, kind);
}

double ConicForm::operator()(int i, int j) const {
    static constexpr int idx[3][3] = {{0, 1, 2}, {1, 3, 4}, {2, 4, 5}};
    return e_[idx[i][j]];
}

Mat3 ConicForm::matrix() const {
    Mat3 m{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m[i][j] = (*this)(i, j);
    return m;
}

ConicForm ConicForm::scaled(double s) const {
    ConicForm out = *this;
    for (double& v : out.e_) v *= s;
    return out;
}

ConicForm ConicForm::canonical() const {
    double m = 0.0;
    for (double v : e_) m = std::max(m, std::abs(v));
    if (m == 0.0 || !std::isfinite(m)) throw DomainError("conic form must be finite and nonzero");
    ConicForm out = scaled(1.0 / m);
    for (double v : out.e_) {
        if (std::abs(v) > 1e-12) {
            if (v < 0.0) out = out.scaled(-1.0);
            break;
        }
    }
    return out;
}

double ConicForm::eval(const Homogeneous& p) const {
    double s = 0.0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) s += p[i] * (*this)(i, j) * p[j];
    return s;
}

Homogeneous ConicForm::apply(const Homogeneous& p) const {
    Homogeneous out{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) out[i] += (*this)(i, j) * p[j];
    return out;
}

double ConicForm::det() const { return to_eigen(*this).determinant(); }

bool approx_equal_up_to_scale(const ConicForm& a, const ConicForm& b, double tol) {
    if (a.kind() != b.kind()) return false;
    const ConicForm ca = a.canonical(), cb = b.canonical();
    for (int i = 0; i < 3; ++i)
        for (int j = i; j < 3; ++j)
            if (std::abs(ca(i, j) - cb(i, j)) > tol) return false;
    return true;
}

int conic_rank(const ConicForm& c) {
    const auto s = singular_values(c);
    if (!(s(0) > 0.0)) return 0;
    int r = 0;
    for (int i = 0; i < 3; ++i)
        if (s(i) > kRankTolerance * s(0)) ++r;
    return r;
}

ConicForm dual_conic(const ConicForm& c) {
    require_nonsingular(c);
    return from_eigen(to_eigen(c).inverse(), flipped(c.kind()));
}

Homogeneous polar_line(const Homogeneous& pt, const ConicForm& c) {
    require_nonsingular(c);
    return c.apply(pt);
}

Homogeneous pole(const Homogeneous& line, const ConicForm& c) { return dual_conic(c).apply(line); }

std::vector<double> real_polynomial_roots(double c3, double c2, double c1, double c0) {
    std::array<double, 4> c{c0, c1, c2, c3};
    double scale = 0.0;
    for (double v : c) scale = std::max(scale, std::abs(v));
    if (scale == 0.0) return {};
    for (double& v : c) v /= scale;
    int deg = 3;
    while (deg > 0 && std::abs(c[deg]) <= 1e-12) --deg;

    std::vector<double> roots;
    if (deg == 1) {
        roots.push_back(-c[0] / c[1]);
    } else if (deg == 2) {
        quadratic_roots(c[2], c[1], c[0], roots);
    } else if (deg == 3) {
        const double p = c[2] / c[3], q = c[1] / c[3], r = c[0] / c[3];
        auto cand = cubic_candidates(p, q, r);
        double best = 0.0, best_d = -1.0;
        for (double& x : cand) {
            x = polish(c, x);
            const double d = std::abs(horner_d(c, x));
            if (d > best_d) {
                best_d = d;
                best = x;
            }
        }
        // deflate by the best-conditioned root
        roots.push_back(best);
        const double b1 = p + best;
        const double b0 = q + best * b1;
        std::vector<double> rest;
        quadratic_roots(1.0, b1, b0, rest);
        for (double x : rest) roots.push_back(polish(c, x));
    }
    std::sort(roots.begin(), roots.end());
    std::vector<double> merged;
    for (double x : roots) {
        if (!merged.empty() && std::abs(x - merged.back()) <= kRootMergeTolerance * std::max(1.0, std::abs(x)))
            merged.back() = 0.5 * (merged.back() + x);
        else
            merged.push_back(x);
    }
    return merged;
}

std::vector<PencilMember> pencil_singular_members(const ConicForm& a, const ConicForm& b) {
    if (approx_equal_up_to_scale(ConicForm::from_matrix(a.matrix()), ConicForm::from_matrix(b.matrix()), 1e-12))
        throw DomainError("pencil generators are proportional");
    const Mat3 A = a.matrix(), B = b.matrix();
    const double c3 = mixed_det(A, A, A);
    const double c2 = -(mixed_det(B, A, A) + mixed_det(A, B, A) + mixed_det(A, A, B));
    const double c1 = mixed_det(A, B, B) + mixed_det(B, A, B) + mixed_det(B, B, A);
    const double c0 = -mixed_det(B, B, B);
    const double cmax = std::max({std::abs(c3), std::abs(c2), std::abs(c1), std::abs(c0)});

    std::vector<PencilMember> out;
    for (double lambda : real_polynomial_roots(c3, c2, c1, c0)) {
        Eigen::Matrix3d m = lambda * to_eigen(a) - to_eigen(b);
        PencilMember pm;
        pm.lambda = lambda;
        pm.mu = 1.0;
        pm.form = from_eigen(m, a.kind());
        pm.rank = conic_rank(pm.form);
        pm.degenerate = pm.rank < 3;
        out.push_back(pm);
    }
    if (cmax > 0.0 && std::abs(c3) <= 1e-12 * cmax) {
        PencilMember pm;
        pm.lambda = 1.0;
        pm.mu = 0.0;
        pm.form = a;
        pm.rank = conic_rank(a);
        pm.degenerate = pm.rank < 3;
        out.push_back(pm);
    }
    return out;
}

SplitResult split_degenerate_dual(const ConicForm& c) {
    if (conic_rank(c) != 2) throw RankError("splitting needs a rank-2 form");
    const ConicForm cc = c.canonical();
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> es(to_eigen(cc));
    const auto& vals = es.eigenvalues();
    int zero = 0;
    for (int i = 1; i < 3; ++i)
        if (std::abs(vals(i)) < std::abs(vals(zero))) zero = i;
    int i1 = (zero + 1) % 3, i2 = (zero + 2) % 3;
    if (vals(i1) * vals(i2) > 0.0) return {true, {}, {}};
    if (vals(i1) < 0.0) std::swap(i1, i2);
    const Eigen::Vector3d e1 = es.eigenvectors().col(i1) * std::sqrt(vals(i1));
    const Eigen::Vector3d e2 = es.eigenvectors().col(i2) * std::sqrt(-vals(i2));
    const Eigen::Vector3d u = e1 + e2, v = e1 - e2;
    Homogeneous pu = canonical_point({u(0), u(1), u(2)});
    Homogeneous pv = canonical_point({v(0), v(1), v(2)});
    if (pv < pu) std::swap(pu, pv);
    return {false, pu, pv};
}

ConicForm absolute_form() { return ConicForm::diagonal(1.0, 1.0, -1.0); }
ConicForm dual_absolute() { return ConicForm::diagonal(1.0, 1.0, -1.0, ConicKind::Dual); }

ConicForm h_parabola_form(double C) {
    require_C(C);
    return ConicForm(1.0 / (C * C), 0.0, 0.0, 2.0, -1.0, 0.0);
}

ConicForm h_parabola_dual(double C) {
    require_C(C);
    return ConicForm(C * C, 0.0, 0.0, 0.0, -1.0, -2.0, ConicKind::Dual);
}

ConicForm euclidean_parabola_form(double p) {
    if (!(p > 0.0)) throw DomainError("parabola parameter must be positive");
    return ConicForm(1.0, 0.0, 0.0, 0.0, -p, 0.0);
}

ConicForm euclidean_dual_absolute() { return ConicForm::diagonal(1.0, 1.0, 0.0, ConicKind::Dual); }

HepFoci foci_of_h_elliptic_parabola(double C) {
    require_C(C);
    const ConicForm dual = dual_conic(h_parabola_form(C));
    HepFoci out;
    out.members = pencil_singular_members(dual_absolute(), dual);
    for (const auto& m : out.members) {
        if (m.rank != 2) continue;
        const SplitResult s = split_degenerate_dual(m.form);
        if (s.imaginary) continue;
        std::optional<BckPoint> a = to_affine(s.first), b = to_affine(s.second);
        if (!a || !b) continue;
        const double ra = a->x * a->x + a->y * a->y, rb = b->x * b->x + b->y * b->y;
        const bool first_ideal = std::abs(ra - 1.0) < std::abs(rb - 1.0);
        out.asymptotic_focus = first_ideal ? s.first : s.second;
        out.proper_focus = first_ideal ? *b : *a;
        const BckPoint asym = first_ideal ? *a : *b;
        const double fy = C * C / (2.0 - C * C);
        out.residual = std::max({std::abs(out.proper_focus.x), std::abs(out.proper_focus.y - fy),
                                 std::abs(asym.x), std::abs(asym.y - 1.0)});
        return out;
    }
    throw DomainError("pencil pipeline found no real focal pair");
}

EuclideanFoci euclidean_parabola_foci(double p) {
    const ConicForm dual = dual_conic(euclidean_parabola_form(p));
    EuclideanFoci out;
    out.members = pencil_singular_members(euclidean_dual_absolute(), dual);
    for (const auto& m : out.members) {
        if (m.rank != 2) continue;
        const SplitResult s = split_degenerate_dual(m.form);
        if (s.imaginary) continue;
        std::optional<BckPoint> a = to_affine(s.first, 1e-12), b = to_affine(s.second, 1e-12);
        if (a.has_value() == b.has_value()) continue;
        out.ideal_focus = a ? s.second : s.first;
        const BckPoint q = a ? *a : *b;
        out.proper_focus = {q.x, q.y};
        return out;
    }
    throw DomainError("pencil pipeline found no real focal pair");
}

}  // namespace hepm
