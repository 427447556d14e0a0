#include "hepm/suite.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>
#include <tuple>

#include "hepm/closed_forms.hpp"
#include "hepm/conics.hpp"
#include "hepm/errors.hpp"
#include "hepm/parabola.hpp"
#include "hepm/sds_polar.hpp"

namespace hepm {

namespace {

constexpr double kLn2 = std::numbers::ln2;
constexpr double kPi = std::numbers::pi;
constexpr double kSelfTestFactor = 1.0 + 1e-6;

double kfac(double C) { return 2.0 * C / std::sqrt((1.0 - C) * (1.0 + C)); }

class Builder {
public:
    Builder(std::string id, std::string module) {
        rec_.id = std::move(id);
        rec_.module = std::move(module);
    }

    // |cf - oracle| <= tol
    void near(const std::string& name, double cf, double oracle, double tol) {
        const double err = std::abs(cf - oracle);
        push({name, std::isfinite(err) && err <= tol, cf, oracle, err, tol});
    }
    // relative with an absolute floor
    void rel(const std::string& name, double cf, double oracle, double rtol, double floor) {
        near(name, cf, oracle, std::max(rtol * std::abs(cf), floor));
    }
    void oracle(const std::string& name, double cf, const OracleResult& r, double rtol = 1e-8, double floor = 1e-10) {
        rel(name, cf, r.value, rtol, floor);
        if (!r.converged) rec_.details.back().pass = false, rec_.details.back().name += " (not converged)";
    }
    void flag(const std::string& name, bool ok, double a = 0.0, double b = 0.0) {
        push({name, ok, a, b, std::abs(a - b), 0.0});
    }
    void guard(const std::string& name, const std::function<void()>& body) {
        try {
            body();
        } catch (const std::exception& e) {
            push({name + " raised: " + e.what(), false, 0.0, 0.0, std::numeric_limits<double>::quiet_NaN(), 0.0});
        }
    }

    CheckRecord finish() {
        rec_.pass = !rec_.details.empty();
        const SubCheck* worst = nullptr;
        double score = -1.0;
        for (const auto& d : rec_.details) {
            rec_.pass = rec_.pass && d.pass;
            double s = d.tol > 0.0 ? d.abs_err / d.tol : 0.0;
            if (!d.pass) s = std::numeric_limits<double>::infinity();
            if (!std::isfinite(s) && worst && !worst->pass) continue;
            if (s > score || !worst) score = s, worst = &d;
        }
        if (worst) {
            rec_.closed_form = worst->closed_form;
            rec_.oracle = worst->oracle;
            rec_.abs_err = worst->abs_err;
        }
        return rec_;
    }

private:
    void push(SubCheck s) { rec_.details.push_back(std::move(s)); }
    CheckRecord rec_;
};

std::vector<double> grid(int n) {
    std::vector<double> g(n);
    for (int i = 0; i < n; ++i) g[i] = double(i + 1) / (n + 1);
    return g;
}

std::string key(double C) { return fmt::format("C={:.4g}", C); }
std::string key(double C, double eta) { return fmt::format("C={:.4g} eta={:.4g}", C, eta); }

struct Ctx {
    const SuiteOptions& o;
    std::vector<double> Cs;
    std::vector<double> etas;

    double band(double C, double eta) const {
        return area_band_segment(C, eta) * (o.self_test ? kSelfTestFactor : 1.0);
    }
};

BckPoint random_disk_point(std::mt19937_64& rng, double r2max) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (;;) {
        const double x = u(rng), y = u(rng);
        if (x * x + y * y <= r2max) return {x, y};
    }
}

// ---------------------------------------------------------------- acceptance

CheckRecord ac01(const Ctx& c) {
    Builder b("AC01", "projective-conics");
    for (double C : c.Cs) {
        b.guard(key(C), [&] {
            const HepFoci f = foci_of_h_elliptic_parabola(C);
            b.near(key(C) + " proper focus x", 0.0, f.proper_focus.x, 1e-10);
            b.near(key(C) + " proper focus y", C * C / (2.0 - C * C), f.proper_focus.y, 1e-10);
            b.near(key(C) + " pipeline residual", 0.0, f.residual, 1e-10);
            const auto af = to_affine(f.asymptotic_focus);
            b.flag(key(C) + " asymptotic focus finite", af.has_value());
            if (af) {
                b.near(key(C) + " asymptotic focus x", 0.0, af->x, 1e-10);
                b.near(key(C) + " asymptotic focus y", 1.0, af->y, 1e-10);
            }
            std::vector<double> lam;
            for (const auto& m : f.members)
                if (m.mu != 0.0) lam.push_back(m.lambda / m.mu);
            std::sort(lam.begin(), lam.end());
            b.flag(key(C) + " two singular members", lam.size() == 2, 2.0, double(lam.size()));
            if (lam.size() == 2) {
                b.near(key(C) + " lambda C^2", C * C, lam[0], 1e-12);
                b.near(key(C) + " lambda 1", 1.0, lam[1], 1e-12);
            }
        });
    }
    return b.finish();
}

CheckRecord ac02(const Ctx& c) {
    Builder b("AC02", "parabola-family");
    for (double C : c.Cs) {
        double worst_res = 0.0, worst_cf = 0.0, cf_at = 0.0, or_at = 0.0;
        b.guard(key(C), [&] {
            for (int i = 0; i <= 40; ++i) {
                const double t = -10.0 + 0.5 * i;
                const KillingResult k = killing_residual(C, t);
                worst_res = std::max(worst_res, k.residual);
                const double e = std::abs(k.dist_hp - k.closed_arcosh);
                if (!(e <= worst_cf)) worst_cf = e, cf_at = k.closed_arcosh, or_at = k.dist_hp;
            }
            b.near(key(C) + " max |d(H,P) - d(P,F)|", 0.0, worst_res, 1e-12);
            b.near(key(C) + " arcosh closed form", cf_at, or_at, 1e-12);
        });
    }
    return b.finish();
}

CheckRecord ac03(const Ctx& c) {
    Builder b("AC03", "quadrature-oracle");
    const auto& q = c.o.qcfg;
    for (double eta : c.etas) {
        b.guard(fmt::format("eta={:.4g}", eta), [&] {
            b.oracle(fmt::format("horodisk segment eta={:.4g}", eta), area_horodisk_segment(eta),
                     quad_area_hyp(lineal_cut(region(Family::E1, 0.5), eta), q));
            b.oracle(fmt::format("horocycle segment length eta={:.4g}", eta), len_horocycle_segment(eta),
                     quad_len_parabola_boundary(1.0, eta, q));
        });
    }
    for (double C : c.Cs) {
        b.guard(key(C), [&] {
            b.oracle(key(C) + " asymptotic triangle", area_asymptotic_triangle(C), quad_area_hyp(region(Family::A, C), q));
            b.oracle(key(C) + " Z", sds_area_Z(C), quad_area_sds({SdsTag::Z, C, 0.5, Side::Minus}, q));
            const double R = artanh_checked(C);
            b.oracle(key(C) + " disk area", disk_area(R), quad_area_hyp_disk(C, q));
            b.oracle(key(C) + " disk circumference", disk_circumference(R), quad_len_hyp_circle(C, q));
        });
        for (double eta : c.etas) {
            const std::string k = key(C, eta);
            b.guard(k, [&] {
                b.oracle(k + " band segment", c.band(C, eta), quad_area_hyp(band_segment(C, eta), q));
                b.oracle(k + " parabola segment", area_parabola_segment(C, eta),
                         quad_area_hyp(lineal_cut(region(Family::E, C), eta), q));
                b.oracle(k + " band boundary length", len_band_segment_boundary(C, eta),
                         quad_len_band_boundary(C, eta, q));
                b.oracle(k + " parabola boundary length", len_parabola_segment_boundary(C, eta),
                         quad_len_parabola_boundary(C, eta, q));
                b.oracle(k + " M length", len_M(C, eta), quad_len_M(C, eta, q));
                b.oracle(k + " W", sds_area_W(C, eta), quad_area_sds({SdsTag::W, C, eta, Side::Minus}, q));
                b.oracle(k + " E~", sds_area_E_tilde(C, eta), quad_area_sds({SdsTag::ETilde, C, eta, Side::Minus}, q));
            });
        }
    }
    return b.finish();
}

void trend_check(Builder& b, const std::string& name, double target, const TrendResult& t) {
    b.near(name + " trend value", target, t.last, 1e-6);
    b.near(name + " final increment", 0.0, t.final_increment, 1e-6);
    b.flag(name + " monotone", t.monotone);
}

CheckRecord ac04(const Ctx& c) {
    Builder b("AC04", "closed-forms");
    const auto& sched = c.o.qcfg.cutoff_schedule;
    for (double C : c.Cs) {
        b.guard(key(C), [&] {
            const double k = kfac(C);
            trend_check(b, key(C) + " B\\E", area_diff_B_minus_E(C),
                        limit_trend([C](double eta) { return area_diff_B_minus_E_segment(C, eta); }, sched));
            b.near(key(C) + " D\\E recombined", k * (1.0 - kLn2), area_diff_D_minus_E_recombined(C), 1e-12);
            b.near(key(C) + " D\\E", k * (1.0 - kLn2), area_diff_D_minus_E(C), 1e-12);
            b.near(key(C) + " band recombination", area_diff_B_minus_E(C), band_recombination(C), 1e-12);
            b.near(key(C) + " B\\E restated", k * focal_distance(C) - k * kLn2 + 2.0 * std::asin(C),
                   area_diff_B_minus_E(C), 1e-12);
            b.near(key(C) + " translation constant", translation_equiv_constant(), area_diff_D_minus_E_recombined(C) / k,
                   1e-12);
        });
    }
    return b.finish();
}

CheckRecord ac05(const Ctx& c) {
    Builder b("AC05", "sds-polar");
    const auto& sched = c.o.qcfg.cutoff_schedule;
    for (double C : c.Cs) {
        b.guard(key(C), [&] {
            b.near(key(C) + " polar vs G", G(C), circumference_diff_via_polar(C), 1e-12);
            trend_check(b, key(C) + " length difference", G(C),
                        limit_trend([C](double eta) { return len_diff_B_minus_E_segment(C, eta); }, sched));
        });
    }
    return b.finish();
}

CheckRecord ac06(const Ctx&) {
    Builder b("AC06", "closed-forms");
    const double top = 1.0 - 1e-6;
    b.guard("root", [&] { b.near("alpha root", 0.801986, alpha_root().root, 5e-6); });
    b.guard("alpha", [&] { b.near("alpha(1e-3)", 1.0 - kLn2, alpha(1e-3), 1e-5); });
    b.guard("beta_hat_D", [&] { b.near("beta_hat_D(1-1e-6)", 1.0 - kLn2, beta_hat_D(top), 1e-4); });
    b.guard("beta_hat_V", [&] { b.near("beta_hat_V(1-1e-6)", kLn2, beta_hat_V(top), 1e-4); });
    b.guard("beta", [&] { b.near("beta - focal at 1-1e-6", -kLn2, beta(top) - focal_distance(top), 1e-4); });
    return b.finish();
}

CheckRecord ac07(const Ctx& c) {
    Builder b("AC07", "quadrature-oracle");
    std::vector<double> dev;
    for (double C : {0.9, 0.99, 0.999}) {
        b.guard(key(C), [&] {
            const RegionSpec Bup = translated_up(region(Family::B, C), focal_distance(C));
            const RegionSpec E = region(Family::E, C);
            const OracleResult num = quad_area_hyp_difference(Bup, E, 1.0, c.o.qcfg);
            const OracleResult den = quad_area_hyp_difference(E, Bup, 1.0, c.o.qcfg);
            const double r = num.value / den.value;
            b.flag(key(C) + " ratio (oracle converged)", num.converged && den.converged, 1.0, r);
            dev.push_back(std::abs(r - 1.0));
        });
    }
    if (dev.size() == 3) {
        b.flag("0.9 -> 0.99 approaches 1", dev[1] < dev[0], dev[0], dev[1]);
        b.flag("0.99 -> 0.999 approaches 1", dev[2] < dev[1], dev[1], dev[2]);
    }
    return b.finish();
}

CheckRecord ac08(const Ctx& c) {
    Builder b("AC08", "models-core");
    std::mt19937_64 rng(0x5eed0008);
    const std::vector<Family> fams{Family::E, Family::B, Family::D, Family::V, Family::A, Family::E1};
    for (Family f : fams) {
        b.guard("membership " + family_name(f), [&] {
            int disagree = 0, tested = 0;
            for (int i = 0; i < 10000; ++i) {
                const double C = c.Cs[i % c.Cs.size()];
                const RegionSpec r = region(f, C);
                const BckPoint p = random_disk_point(rng, 0.999 * 0.999);
                const BphPoint q = bck_to_bph(p);
                if (boundary_margin(r, p) < 1e-9 || boundary_margin_bph(r, q) < 1e-9) continue;
                ++tested;
                if (contains(r, p) != contains_bph(r, q)) ++disagree;
            }
            b.flag("membership " + family_name(f) + " disagreements", disagree == 0 && tested > 5000, 0.0, disagree);
        });
    }
    b.guard("distance", [&] {
        double worst = 0.0, a = 0.0, d = 0.0;
        for (int i = 0; i < 10000; ++i) {
            const BckPoint p = random_disk_point(rng, 0.99), q = random_disk_point(rng, 0.99);
            const double x = bck_distance(p, q), y = bph_distance(bck_to_bph(p), bck_to_bph(q));
            if (!(std::abs(x - y) <= worst)) worst = std::abs(x - y), a = x, d = y;
        }
        b.near("chart distance agreement", a, d, 1e-10);
    });
    for (double C : c.Cs) {
        b.guard(key(C), [&] {
            const double k = kfac(C);
            b.near(key(C) + " half-plane D\\E", k * (1.0 - kLn2), bph_area_diff_D_minus_E_horocyclic(C, 1e13), 1e-12);
            b.near(key(C) + " half-plane D\\V", k, bph_area_diff_D_minus_V_horocyclic(C, 1e13), 1e-12);
            b.near(key(C) + " half-plane D\\V limit", k, bph_area_diff_D_minus_V(C), 1e-12);
            const OracleResult d = quad_area_bph_strip(region(Family::D, C), 50.0, c.o.qcfg);
            const OracleResult v = quad_area_bph_strip(region(Family::V, C), 50.0, c.o.qcfg);
            OracleResult diff = d;
            diff.value = d.value - v.value;
            diff.converged = d.converged && v.converged;
            b.oracle(key(C) + " half-plane strip D\\V theta=50", bph_area_diff_D_minus_V_horocyclic(C, 50.0), diff);
        });
    }
    return b.finish();
}

CheckRecord ac09(const Ctx& c) {
    Builder b("AC09", "sds-polar");
    for (double C : {0.2, 0.5, 0.8}) {
        b.guard(key(C), [&] {
            const DiskDuality d = disk_duality_closed(C);
            b.near(key(C) + " area vs boundary length", d.hyp_area, -2.0 * kPi + d.sds_boundary_len, 1e-13);
            b.near(key(C) + " circumference vs co-polar area", d.hyp_circumference, d.sds_copolar_area, 1e-13);
            b.oracle(key(C) + " hyperbolic area", d.hyp_area, quad_area_hyp_disk(C, c.o.qcfg));
            b.oracle(key(C) + " hyperbolic circumference", d.hyp_circumference, quad_len_hyp_circle(C, c.o.qcfg));
            b.oracle(key(C) + " de Sitter boundary length", d.sds_boundary_len, quad_len_sds_circle(C, c.o.qcfg));
            b.oracle(key(C) + " de Sitter co-polar area", d.sds_copolar_area,
                     quad_area_sds({SdsTag::DiskCopolar, C, 0.5, Side::Minus}, c.o.qcfg));
        });
    }
    return b.finish();
}

std::string read_file(const std::string& path, bool& ok) {
    std::ifstream in(path, std::ios::binary);
    ok = bool(in);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

CheckRecord ac10(const Ctx& c) {
    Builder b("AC10", "cli");
    b.guard("self-test", [&] {
        SuiteOptions o = c.o;
        o.self_test = true;
        Ctx pc{o, {0.5}, {0.5}};
        const double perturbed = pc.band(0.5, 0.5);
        const OracleResult r = quad_area_hyp(band_segment(0.5, 0.5), c.o.qcfg);
        Builder probe("probe", "cli");
        probe.oracle("band", perturbed, r);
        b.flag("perturbed closed form detected", !probe.finish().pass, perturbed, r.value);
    });
    b.guard("determinism", [&] {
        const std::string t1 = render_table(golden_table_spec()), t2 = render_table(golden_table_spec());
        const std::string f1 = render_figure(golden_figure_spec()), f2 = render_figure(golden_figure_spec());
        b.flag("table byte-stable", t1 == t2);
        b.flag("figure byte-stable", f1 == f2);
        if (!c.o.golden_dir.empty()) {
            bool ok1 = false, ok2 = false;
            const std::string g1 = read_file(c.o.golden_dir + "/" + kGoldenTableName, ok1);
            const std::string g2 = read_file(c.o.golden_dir + "/" + kGoldenFigureName, ok2);
            b.flag("golden table present and equal", ok1 && g1 == t1);
            b.flag("golden figure present and equal", ok2 && g2 == f1);
        }
    });
    return b.finish();
}

// ---------------------------------------------------------------- invariants

CheckRecord inv_models(const Ctx&) {
    Builder b("INV-models-core", "models-core");
    std::mt19937_64 rng(0x5eed0101);
    b.guard("round trip", [&] {
        double worst = 0.0;
        for (int i = 0; i < 10000; ++i) {
            const BckPoint p = random_disk_point(rng, 0.999 * 0.999);
            const BckPoint q = bph_to_bck(bck_to_bph(p));
            worst = std::max({worst, std::abs(p.x - q.x), std::abs(p.y - q.y)});
        }
        b.near("round trip", 0.0, worst, 1e-12);
    });
    b.guard("axis gauge", [&] {
        for (double t : {0.01, 0.1, 0.3, 0.5, 0.7, 0.9, 0.99}) {
            b.near(fmt::format("x axis t={}", t), std::atanh(t), bck_distance({0, 0}, {t, 0}), 1e-13);
            b.near(fmt::format("y axis t={}", t), std::atanh(t), bck_distance({0, 0}, {0, t}), 1e-13);
        }
    });
    b.guard("triangle inequality", [&] {
        double worst = -1e300;
        for (int i = 0; i < 10000; ++i) {
            const BckPoint p = random_disk_point(rng, 0.99), q = random_disk_point(rng, 0.99),
                           r = random_disk_point(rng, 0.99);
            worst = std::max(worst, bck_distance(p, r) - bck_distance(p, q) - bck_distance(q, r));
        }
        b.flag("triangle inequality slack 1e-12", worst <= 1e-12, 0.0, std::max(worst, 0.0));
    });
    b.guard("density growth", [&] {
        bool mono = true;
        for (int k = 0; k < 16; ++k) {
            const double th = 2.0 * kPi * k / 16;
            double prev = 0.0;
            for (int i = 0; i < 200; ++i) {
                const double r = 1.0 - std::pow(10.0, -6.0 * i / 199.0);
                const double d = hyp_area_density({r * std::cos(th), r * std::sin(th)});
                mono = mono && d > prev;
                prev = d;
            }
        }
        b.flag("density increases along rays", mono);
    });
    return b.finish();
}

ConicForm random_form(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (;;) {
        ConicForm f(u(rng), u(rng), u(rng), u(rng), u(rng), u(rng));
        if (std::abs(f.det()) > 1e-2) return f;
    }
}

CheckRecord inv_conics(const Ctx& c) {
    Builder b("INV-projective-conics", "projective-conics");
    std::mt19937_64 rng(0x5eed0202);
    b.guard("reconstruction", [&] {
        for (double C : c.Cs) {
            for (const auto& m : foci_of_h_elliptic_parabola(C).members) {
                if (m.rank != 2) continue;
                const SplitResult s = split_degenerate_dual(m.form);
                if (s.imaginary) continue;
                Mat3 p{};
                for (int i = 0; i < 3; ++i)
                    for (int j = 0; j < 3; ++j) p[i][j] = 0.5 * (s.first[i] * s.second[j] + s.second[i] * s.first[j]);
                const ConicForm a = ConicForm::from_matrix(p).canonical();
                const ConicForm bb = ConicForm::from_matrix(m.form.matrix()).canonical();
                double e = 0.0;
                for (int i = 0; i < 3; ++i)
                    for (int j = 0; j < 3; ++j) e = std::max(e, std::abs(a(i, j) - bb(i, j)));
                b.near(key(C) + " split reconstruction", 0.0, e, 1e-10);
            }
        }
    });
    b.guard("duality involution", [&] {
        double worst = 0.0;
        for (int i = 0; i < 100; ++i) {
            const ConicForm f = random_form(rng);
            const ConicForm dd = ConicForm::from_matrix(dual_conic(dual_conic(f)).matrix()).canonical();
            const ConicForm fc = f.canonical();
            for (int r = 0; r < 3; ++r)
                for (int s = 0; s < 3; ++s) worst = std::max(worst, std::abs(dd(r, s) - fc(r, s)));
        }
        b.near("dual of dual", 0.0, worst, 1e-10);
    });
    b.guard("pole polar", [&] {
        std::uniform_real_distribution<double> u(-1.0, 1.0);
        double worst = 0.0;
        for (int i = 0; i < 100; ++i) {
            const ConicForm f = random_form(rng);
            const Homogeneous p = canonical_point({u(rng), u(rng), u(rng)});
            const Homogeneous back = canonical_point(pole(polar_line(p, f), f));
            for (int k = 0; k < 3; ++k) worst = std::max(worst, std::abs(back[k] - p[k]));
        }
        b.near("pole of polar", 0.0, worst, 1e-12);
    });
    for (double p : {0.5, 1.0, 2.0}) {
        b.guard(fmt::format("euclidean p={}", p), [&] {
            const EuclideanFoci f = euclidean_parabola_foci(p);
            b.near(fmt::format("euclidean p={} focus x", p), 0.0, f.proper_focus.x, 1e-12);
            b.near(fmt::format("euclidean p={} focus y", p), p / 2.0, f.proper_focus.y, 1e-12);
            const Homogeneous id = canonical_point(f.ideal_focus);
            b.near(fmt::format("euclidean p={} ideal focus", p), 0.0, std::abs(id[0]) + std::abs(id[2]), 1e-12);
        });
    }
    return b.finish();
}

CheckRecord inv_parabola(const Ctx& c) {
    Builder b("INV-parabola-family", "parabola-family");
    std::mt19937_64 rng(0x5eed0303);
    for (double C : c.Cs) {
        b.guard(key(C), [&] {
            const RegionSpec B = region(Family::B, C), D = region(Family::D, C), E = region(Family::E, C),
                             V = region(Family::V, C);
            int broken = 0;
            for (int i = 0; i < 10000; ++i) {
                const BckPoint p = random_disk_point(rng, 0.999 * 0.999);
                const bool inB = contains(B, p), inD = contains(D, p), inE = contains(E, p), inV = contains(V, p);
                if ((inV && !inE) || (inE && !inD) || (inD && !inB)) ++broken;
            }
            b.flag(key(C) + " nesting B > D > E > V", broken == 0, 0.0, broken);
            std::vector<BckPoint> inside;
            while (inside.size() < 2000) {
                const BckPoint p = random_disk_point(rng, 1.0);
                if (contains(E, p)) inside.push_back(p);
            }
            int nonconvex = 0;
            for (std::size_t i = 0; i + 1 < inside.size(); i += 2)
                if (!contains(E, {0.5 * (inside[i].x + inside[i + 1].x), 0.5 * (inside[i].y + inside[i + 1].y)}))
                    ++nonconvex;
            b.flag(key(C) + " midpoints stay in E", nonconvex == 0, 0.0, nonconvex);
            const SyntheticElements s = synthetic_elements(C);
            b.flag(key(C) + " focus in E", contains(E, s.focus));
            const BphPoint fb = bck_to_bph(s.focus);
            b.near(key(C) + " focus in half-plane", 1.0 / std::sqrt((1.0 - C) * (1.0 + C)), fb.y, 1e-12);
            b.near(key(C) + " focus on the axis", 0.0, fb.x, 1e-12);
            b.near(key(C) + " focal distance", s.focal_distance_ln, bck_distance(s.vertex, s.focus), 1e-12);
            const NotableDistances n = notable_distances(C);
            b.near(key(C) + " focal ln form", n.focal, n.focal_ln, 1e-13);
            b.near(key(C) + " cosh(band radius) = exp(focal)", std::exp(s.focal_distance), std::cosh(s.band_radius),
                   1e-13);
            b.near(key(C) + " band radius ln form", n.band_radius, n.band_radius_ln, 1e-13);
            b.near(key(C) + " anti-axial arsinh form", n.anti_axial, n.anti_axial_arsinh, 1e-13);
        });
    }
    b.guard("notable", [&] {
        const NotableDistances n = notable_distances(0.5);
        b.near("ln 3 / 2", n.half_ln3, n.half_ln3_artanh, 1e-13);
        b.near("ln(1 + sqrt 2) artanh", n.ln_silver, n.ln_silver_artanh, 1e-13);
        b.near("ln(1 + sqrt 2) arsinh", n.ln_silver, n.ln_silver_arsinh, 1e-13);
        b.near("ln 2 / 2", n.half_ln2, n.half_ln2_artanh, 1e-13);
        b.near("facing horocyclic arc", 2.0, n.facing_horocyclic_arc, 1e-13);
    });
    return b.finish();
}

CheckRecord inv_closed(const Ctx& c) {
    Builder b("INV-closed-forms", "closed-forms");
    const double near1 = 1.0 - 1e-4;
    for (double eta : c.etas) {
        b.guard(fmt::format("eta={:.4g}", eta), [&] {
            b.near(fmt::format("parabola -> horodisk eta={:.4g}", eta), area_horodisk_segment(eta),
                   area_parabola_segment(near1, eta), 1e-3);
            b.near(fmt::format("parabola length -> horocycle eta={:.4g}", eta), len_horocycle_segment(eta),
                   len_parabola_segment_boundary(near1, eta), 1e-3);
            b.near(fmt::format("horocycle chord eta={:.4g}", eta), 2.0 * std::sqrt(2.0 * eta / (1.0 - eta)),
                   chord_arc_relation(horocycle_chord_half(eta)), 1e-12);
        });
    }
    const std::vector<std::pair<std::string, double (*)(double)>> mono{
        {"G", G}, {"Gprime", Gprime}, {"Ghat", Ghat}, {"beta", beta}, {"beta_hat_D", beta_hat_D}, {"beta_hat_V", beta_hat_V}};
    for (const auto& [name, f] : mono) {
        b.guard(name, [&] {
            int bad = 0;
            double prev = f(0.01);
            for (int i = 2; i <= 99; ++i) {
                const double v = f(0.01 * i);
                if (!(v > prev)) ++bad;
                prev = v;
            }
            b.flag(name + " increasing on the 99-point grid", bad == 0, 0.0, bad);
        });
    }
    for (double C : c.Cs) {
        b.guard(key(C), [&] {
            const double k = kfac(C);
            b.near(key(C) + " focal second form", std::atanh(C * C / (2.0 - C * C)), focal_distance(C), 1e-13);
            b.near(key(C) + " B\\E limit form", area_diff_B_minus_E(C), area_diff_B_minus_E_limit_form(C), 1e-12);
            b.near(key(C) + " triangle defect", area_asymptotic_triangle(C), area_asymptotic_triangle_defect(C), 1e-12);
            b.near(key(C) + " (E-V) + (D-E) = D-V", bph_area_diff_D_minus_V(C),
                   bph_area_diff_E_minus_V(C) + area_diff_D_minus_E(C), 1e-12);
            b.near(key(C) + " E-V", k * kLn2, bph_area_diff_E_minus_V(C), 1e-12);
            b.near(key(C) + " half-plane length limit", Gprime(C), bph_len_diff_D_minus_E_horocyclic(C, 1e8), 1e-6);
            b.near(key(C) + " G - G' from band and horocycle lengths", G(C) - Gprime(C),
                   len_band_segment_boundary(C, C * C / (2.0 - C * C)) - k, 1e-12);
            const TrendResult m = limit_trend([C](double eta) { return len_M(C, eta); }, c.o.qcfg.cutoff_schedule);
            b.flag(key(C) + " M length decreases toward 0", m.monotone && m.last < m.values.front() && m.last >= 0.0,
                   0.0, m.last);
        });
    }
    b.guard("artanh 3/5", [&] { b.near("artanh(3/5) = ln 2", kLn2, std::atanh(0.6), 1e-13); });
    b.guard("alpha at zero", [&] { b.near("alpha limit at zero", alpha_limit_at_zero(), 1.0 - kLn2, 0.0); });
    return b.finish();
}

CheckRecord inv_sds(const Ctx& c) {
    Builder b("INV-sds-polar", "sds-polar");
    for (double C : c.Cs) {
        b.guard(key(C), [&] {
            for (int i = -98; i <= 98; i += 14) {
                const double eta = 0.01 * i;
                b.near(key(C, eta) + " addition formula", addition_lhs(C, eta), addition_rhs(C, eta), 1e-12);
                if (eta > 0.0)
                    b.near(key(C, eta) + " E~ split form", sds_area_E_tilde(C, eta), sds_area_E_tilde_split(C, eta), 1e-12);
            }
            const ConicForm e = copolar_boundary_of_E(C);
            b.flag(key(C) + " co-polar E is C^2 x^2 + 2y - 2",
                   approx_equal_up_to_scale(e, ConicForm(C * C, 0, 0, 0, 1, -2), 1e-12));
            const CopolarBandBoundary bb = copolar_boundary_of_B(C);
            b.flag(key(C) + " hypercycle dual is C^2 x^2 + y^2 - 1",
                   approx_equal_up_to_scale(ConicForm::from_matrix(bb.hypercycle_dual.matrix()),
                                            ConicForm::diagonal(C * C, 1.0, -1.0), 1e-12));
            for (const auto& [name, l, x] : {std::tuple{"left", bb.left_vertex_polar, -1.0 / C},
                                             std::tuple{"right", bb.right_vertex_polar, 1.0 / C}}) {
                b.near(key(C) + " " + name + " vertex polar is vertical", 0.0, l[1] / l[0], 1e-12);
                b.near(key(C) + " " + name + " vertex polar crosses at 1/C", x, -l[2] / l[0], 1e-12);
            }
            const Homogeneous bp = canonical_point(bb.base_pole);
            b.near(key(C) + " base pole is the vertical direction", 0.0, std::abs(bp[0]) + std::abs(bp[2]), 1e-12);
            b.near(key(C) + " Z is artanh C", std::atanh(C), sds_area_Z(C), 1e-13);
            b.near(key(C) + " polar form at eta = 1", G(C), polar_ln_form(C, 1.0), 1e-12);
        });
    }
    for (double C : {0.3, 0.6, 0.9}) {
        b.guard(key(C) + " mirror", [&] {
            for (SdsTag t : {SdsTag::W, SdsTag::ETilde, SdsTag::Z, SdsTag::BandMinusParabola}) {
                const OracleResult m = quad_area_sds({t, C, 0.5, Side::Minus}, c.o.qcfg);
                const OracleResult p = quad_area_sds({t, C, 0.5, Side::Plus}, c.o.qcfg);
                b.near(key(C) + " mirror " + sds_tag_name(t), m.value, p.value, 1e-9);
            }
            const OracleResult z = quad_area_sds({SdsTag::Z, C, 0.5, Side::Minus}, c.o.qcfg, Order::DyThenDx);
            b.near(key(C) + " Z interchanged order", std::atanh(C), z.value, std::max(z.error_estimate, 1e-10));
            b.oracle(key(C) + " band minus parabola", 0.5 * band_minus_parabola_copolar_area(C, 0.5),
                     quad_area_sds({SdsTag::BandMinusParabola, C, 0.5, Side::Minus}, c.o.qcfg));
        });
    }
    return b.finish();
}

CheckRecord inv_oracle(const Ctx& c) {
    Builder b("INV-quadrature-oracle", "quadrature-oracle");
    const QuadratureConfig& q = c.o.qcfg;
    QuadratureConfig half = q;
    half.rel_tol *= 0.5;
    const double eps = std::numeric_limits<double>::epsilon();
    auto consistent = [&](const std::string& name, const std::function<OracleResult(const QuadratureConfig&)>& f) {
        const OracleResult a = f(q), h = f(half);
        b.near(name + " halved rel_tol", a.value, h.value, a.error_estimate + 8.0 * eps * std::abs(a.value));
    };
    for (double C : {0.3, 0.6, 0.9}) {
        b.guard(key(C), [&] {
            consistent(key(C) + " band", [&](const QuadratureConfig& k) { return quad_area_hyp(band_segment(C, 0.5), k); });
            consistent(key(C) + " parabola",
                       [&](const QuadratureConfig& k) { return quad_area_hyp(lineal_cut(region(Family::E, C), 0.5), k); });
            consistent(key(C) + " triangle", [&](const QuadratureConfig& k) { return quad_area_hyp(region(Family::A, C), k); });
            consistent(key(C) + " band length", [&](const QuadratureConfig& k) { return quad_len_band_boundary(C, 0.5, k); });
            consistent(key(C) + " M length", [&](const QuadratureConfig& k) { return quad_len_M(C, 0.5, k); });
            for (SdsTag t : {SdsTag::W, SdsTag::ETilde, SdsTag::Z}) {
                const SdsRegion r{t, C, 0.5, Side::Minus};
                consistent(key(C) + " " + sds_tag_name(t), [&](const QuadratureConfig& k) { return quad_area_sds(r, k); });
                const OracleResult xy = quad_area_sds(r, q, Order::DxThenDy);
                const OracleResult yx = quad_area_sds(r, q, Order::DyThenDx);
                b.near(key(C) + " order interchange " + sds_tag_name(t), xy.value, yx.value,
                       xy.error_estimate + yx.error_estimate + 8.0 * eps * std::abs(xy.value));
                const OracleResult nm = quad_area_sds(r, q, Order::DxThenDy, InnerMode::Numeric);
                b.rel(key(C) + " numeric inner " + sds_tag_name(t), xy.value, nm.value, 1e-8, 1e-10);
            }
            const OracleResult br = quad_area_hyp(band_segment(C, 0.5), q);
            const OracleResult nm = quad_area_hyp(band_segment(C, 0.5), q, InnerMode::Numeric);
            b.rel(key(C) + " numeric inner band", br.value, nm.value, 1e-8, 1e-10);
        });
    }
    b.guard("half-plane rectangle", [&] {
        for (double a : {0.5, 1.0, 3.0}) {
            const OracleResult r = integrate_1d([a](double y) { return a / (y * y); }, 1.0,
                                                std::numeric_limits<double>::infinity(), q);
            b.oracle(fmt::format("[0,{}] x [1,inf)", a), a, r);
        }
    });
    b.guard("origin metric", [&] {
        b.near("unit speed at the origin", 1.0, hyp_arclength_integrand({0.0, 0.0}, {1.0, 0.0}), 1e-15);
    });
    return b.finish();
}

struct Entry {
    std::string module;
    CheckRecord (*run)(const Ctx&);
};

const std::vector<Entry>& entries() {
    static const std::vector<Entry> e{
        {"projective-conics", ac01}, {"parabola-family", ac02},   {"quadrature-oracle", ac03},
        {"closed-forms", ac04},      {"sds-polar", ac05},         {"closed-forms", ac06},
        {"quadrature-oracle", ac07}, {"models-core", ac08},       {"sds-polar", ac09},
        {"cli", ac10},               {"models-core", inv_models}, {"projective-conics", inv_conics},
        {"parabola-family", inv_parabola}, {"closed-forms", inv_closed}, {"sds-polar", inv_sds},
        {"quadrature-oracle", inv_oracle}};
    return e;
}

}  // namespace

void validate(const SuiteOptions& o) {
    if (o.grid < 2 || o.grid > 999) throw ConfigError("grid must lie in [2, 999]");
    validate(o.qcfg);
    if (!o.filter.empty()) {
        bool any = false;
        for (const auto& m : module_names()) any = any || m.find(o.filter) != std::string::npos;
        if (!any) throw ConfigError("filter matches no module: " + o.filter);
    }
}

std::vector<std::string> module_names() {
    return {"models-core", "projective-conics", "parabola-family", "closed-forms", "sds-polar", "quadrature-oracle", "cli"};
}

std::vector<CheckRecord> run_suite(const SuiteOptions& o) {
    validate(o);
    Ctx ctx{o, grid(o.grid), grid(o.grid)};
    std::vector<CheckRecord> out;
    for (const auto& e : entries()) {
        if (!o.filter.empty() && e.module.find(o.filter) == std::string::npos) continue;
        out.push_back(e.run(ctx));
    }
    // the command-line criterion includes a clean exit on the whole suite
    if (o.filter.empty()) {
        auto cli = std::find_if(out.begin(), out.end(), [](const CheckRecord& r) { return r.id == "AC10"; });
        if (cli != out.end()) {
            const bool rest = std::all_of(out.begin(), out.end(), [](const CheckRecord& r) { return r.id == "AC10" || r.pass; });
            cli->details.push_back({"full suite exits 0", rest, 0.0, 0.0, 0.0, 0.0});
            if (!rest && cli->pass) {
                cli->pass = false;
                cli->closed_form = cli->oracle = cli->abs_err = 0.0;
            }
        }
    }
    return out;
}

bool all_passed(const std::vector<CheckRecord>& r) {
    return std::all_of(r.begin(), r.end(), [](const CheckRecord& c) { return c.pass; });
}

std::string format_report(const std::vector<CheckRecord>& r, bool details) {
    std::string out;
    int passed = 0;
    for (const auto& c : r) {
        passed += c.pass;
        out += fmt::format("CHECK {} {} {:.12g} {:.12g} {:.3g}\n", c.id, c.pass ? "PASS" : "FAIL", c.closed_form,
                           c.oracle, c.abs_err);
        if (!details) continue;
        for (const auto& d : c.details)
            out += fmt::format("  DETAIL {} {} {:.12g} {:.12g} {:.3g} tol={:.3g} {}\n", c.id, d.pass ? "PASS" : "FAIL",
                               d.closed_form, d.oracle, d.abs_err, d.tol, d.name);
    }
    out += fmt::format("SUMMARY {} of {} checks passed\n", passed, r.size());
    return out;
}

SweepSpec golden_table_spec() {
    SweepSpec s;
    for (int i = 1; i <= 9; ++i) s.C_values.push_back(i / 10.0);
    s.quantities = {"G", "Gprime", "Ghat"};
    return s;
}

FigureSpec golden_figure_spec() {
    FigureSpec f;
    f.chart = Chart::Bck;
    f.layers = {"E", "B", "D", "V"};
    f.C = 0.6;
    f.viewport = default_viewport(Chart::Bck);
    return f;
}

}  // namespace hepm
