#include "kfree/area.hpp"

#include "kfree/errors.hpp"
#include "kfree/lattices.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <limits>
#include <queue>

namespace kfree {

namespace {

// 15-point Kronrod nodes/weights on [-1,1] with the embedded 7-point Gauss.
const double kx[15] = {
    -0.991455371120813, -0.949107912342759, -0.864864423359769,
    -0.741531185599394, -0.586087235467691, -0.405845151377397,
    -0.207784955007898, 0.0,                0.207784955007898,
    0.405845151377397,  0.586087235467691,  0.741531185599394,
    0.864864423359769,  0.949107912342759,  0.991455371120813};
const double kw[15] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250,
    0.140653259715525, 0.169004726639267, 0.190350578064785,
    0.204432940075298, 0.209482141084728, 0.204432940075298,
    0.190350578064785, 0.169004726639267, 0.140653259715525,
    0.104790010322250, 0.063092092629979, 0.022935322010529};
const double gw[4] = {0.129484966168870, 0.279705391489277,
                      0.381830050505119, 0.417959183673469};

struct Panel {
    double a, b, integral, err;
};
struct PanelWorse {
    bool operator()(const Panel& p, const Panel& q) const { return p.err < q.err; }
};

Panel gk15(const std::function<double(double)>& f, double a, double b) {
    double h = (b - a) / 2, c = (a + b) / 2;
    double fk = 0;
    double fv[15];
    for (int i = 0; i < 15; ++i) {
        fv[i] = f(c + h * kx[i]);
        fk += kw[i] * fv[i];
    }
    double fg = gw[0] * (fv[1] + fv[13]) + gw[1] * (fv[3] + fv[11]) +
                gw[2] * (fv[5] + fv[9]) + gw[3] * fv[7];
    Panel p;
    p.a = a;
    p.b = b;
    p.integral = fk * h;
    p.err = std::abs((fk - fg) * h);
    return p;
}

// Adaptive integration over [a,b]; final sum re-assembled in interval order
// so the result does not depend on heap internals.
std::pair<double, double> adaptive(const std::function<double(double)>& f,
                                   double a, double b, double tol,
                                   int max_panels) {
    std::priority_queue<Panel, std::vector<Panel>, PanelWorse> heap;
    heap.push(gk15(f, a, b));
    int n = 1;
    std::vector<Panel> done; // panels too narrow to split
    double err_sum = heap.top().err;
    while (err_sum > tol && n < max_panels && !heap.empty()) {
        Panel worst = heap.top();
        heap.pop();
        err_sum -= worst.err;
        if (worst.b - worst.a < 1e-13 * (std::abs(worst.a) + 1)) {
            done.push_back(worst);
            continue;
        }
        double mid = (worst.a + worst.b) / 2;
        Panel l = gk15(f, worst.a, mid), r = gk15(f, mid, worst.b);
        heap.push(l);
        heap.push(r);
        err_sum += l.err + r.err;
        ++n;
    }
    if (err_sum > tol && n >= max_panels)
        throw ResourceError("area: tolerance unreachable at max refinement depth");
    while (!heap.empty()) {
        done.push_back(heap.top());
        heap.pop();
    }
    std::sort(done.begin(), done.end(),
              [](const Panel& p, const Panel& q) { return p.a < q.a; });
    double integral = 0, err = 0;
    for (const auto& p : done) {
        integral += p.integral;
        err += p.err;
    }
    return {integral, err};
}

// Double-precision view of the factorization F = a prod (x - alpha y) (* y).
// Carries, per singular angle, the data needed to evaluate the vanishing
// linear factor in the offset variable eps = theta - theta0, exactly zero at
// eps = 0 (a direct F(cos, sin) evaluation loses the integrable-singularity
// mass sitting within ~1e-16 of the root direction).
struct SingularAngle {
    double theta;
    bool from_y_factor;
    double alpha;      // real root when !from_y_factor
    double coef;       // |sin theta0 + alpha cos theta0|
};

struct FactoredView {
    double lead_abs;
    bool has_y;
    std::vector<std::complex<double>> roots;
    std::vector<SingularAngle> sing;

    // |F(cos t, sin t)| via the factored form.
    double abs_g(double t) const {
        double c = std::cos(t), s = std::sin(t);
        double acc = lead_abs;
        if (has_y) acc *= std::abs(s);
        for (const auto& al : roots) acc *= std::abs(std::complex<double>(c, 0.0) - al * s);
        return acc;
    }

    // |F| at theta0 + eps for the singular angle `sa`, with the vanishing
    // factor evaluated as |sin(eps)| * coef.
    double abs_g_near(const SingularAngle& sa, double eps) const {
        double t = sa.theta + eps;
        double c = std::cos(t), s = std::sin(t);
        double acc = lead_abs * std::abs(std::sin(eps)) * sa.coef;
        if (sa.from_y_factor) {
            // the y factor is the vanishing one; all roots are regular here
            for (const auto& al : roots) acc *= std::abs(std::complex<double>(c, 0.0) - al * s);
            return acc;
        }
        if (has_y) acc *= std::abs(s);
        for (const auto& al : roots) {
            if (al.imag() == 0 && al.real() == sa.alpha) continue; // the singular factor
            acc *= std::abs(std::complex<double>(c, 0.0) - al * s);
        }
        return acc;
    }
};

FactoredView make_view(const BinaryForm& F) {
    RootData rd = root_data(F);
    FactoredView v;
    v.lead_abs = std::abs(mpz_get_d(rd.leading.get_mpz_t()));
    v.has_y = rd.has_y_factor;
    const double pi = std::acos(-1.0);
    for (size_t i = 0; i < rd.roots.roots.size(); ++i) {
        double re = rd.roots.roots[i].re.convert_to<double>();
        double im = rd.roots.is_real[i] ? 0.0 : rd.roots.roots[i].im.convert_to<double>();
        v.roots.emplace_back(re, im);
        if (rd.roots.is_real[i]) {
            double t0 = std::atan2(1.0, re);
            double coef = std::abs(std::sin(t0) + re * std::cos(t0));
            v.sing.push_back({t0, false, re, coef});
            v.sing.push_back({t0 + pi, false, re, coef});
        }
    }
    if (v.has_y) {
        // direction (1, 0): the factor a*y vanishes; coef = |d/de sin(e)| = 1
        v.sing.push_back({0.0, true, 0.0, 1.0});
        v.sing.push_back({pi, true, 0.0, 1.0});
    }
    std::sort(v.sing.begin(), v.sing.end(),
              [](const SingularAngle& a, const SingularAngle& b) { return a.theta < b.theta; });
    return v;
}

AreaResult area_polar(const BinaryForm& F, double tol, double cap) {
    if (F.degree < 3) throw InvalidInput("area: degree must be >= 3");
    if (discriminant(F) == 0) throw InvalidInput("area: zero discriminant");
    const int d = F.degree;
    const double two_pi = 2 * std::acos(-1.0);
    const bool capped = std::isfinite(cap);
    const double cap2 = capped ? cap * cap : std::numeric_limits<double>::infinity();
    FactoredView view = make_view(F);

    AreaResult out;
    for (const auto& sa : view.sing) out.singular_angles.push_back(sa.theta);

    // The factored evaluation is cancellation-free: a direct Horner pass in
    // double loses everything once |g| drops below 1e-16 * max coefficient,
    // which crowded (conjugation-transformed) forms do reach off-axis.
    const double inv_exp = 2.0 / d;
    auto h_plain = [&](double t) {
        double g = view.abs_g(t);
        return std::min(std::pow(g, -inv_exp), cap2);
    };

    int max_panels = 60000;
    double total = 0, toterr = 0;
    size_t nseg = std::max<size_t>(view.sing.size(), 1);
    double tol_per = 2 * tol / (double)(nseg * 3);

    if (view.sing.empty()) {
        for (int i = 0; i < 8; ++i) {
            auto [v, e] = adaptive(h_plain, two_pi * i / 8, two_pi * (i + 1) / 8,
                                   tol_per, max_panels);
            total += v;
            toterr += e;
        }
    } else {
        const double q = (double)d / (d - 2);
        for (size_t i = 0; i < view.sing.size(); ++i) {
            const SingularAngle& L = view.sing[i];
            const SingularAngle& R =
                view.sing[(i + 1) % view.sing.size()];
            double a = L.theta;
            double b = (i + 1 < view.sing.size()) ? R.theta : R.theta + two_pi;
            double len = b - a;
            if (len < 1e-12) continue;
            double carve = std::min(0.01, len / 3);
            // left cusp piece: t = a + s^q
            {
                auto sub = [&](double s) {
                    double u = std::pow(s, q);
                    double g = view.abs_g_near(L, u);
                    double val = std::min(std::pow(g, -inv_exp), cap2);
                    return q * std::pow(s, q - 1) * val;
                };
                auto [v, e] =
                    adaptive(sub, 0.0, std::pow(carve, 1.0 / q), tol_per, max_panels);
                total += v;
                toterr += e;
            }
            // right cusp piece: t = b - s^q
            {
                auto sub = [&](double s) {
                    double u = std::pow(s, q);
                    double g = view.abs_g_near(R, -u);
                    double val = std::min(std::pow(g, -inv_exp), cap2);
                    return q * std::pow(s, q - 1) * val;
                };
                auto [v, e] =
                    adaptive(sub, 0.0, std::pow(carve, 1.0 / q), tol_per, max_panels);
                total += v;
                toterr += e;
            }
            auto [v, e] = adaptive(h_plain, a + carve, b - carve, tol_per, max_panels);
            total += v;
            toterr += e;
        }
    }
    out.value = total / 2;
    out.abs_error = toterr / 2 + 1e-15 * std::abs(total);
    return out;
}

} // namespace

AreaResult area_AF(const BinaryForm& F, double tol) {
    return area_polar(F, tol, std::numeric_limits<double>::infinity());
}

AreaResult area_AF_capped(const BinaryForm& F, double R, double tol) {
    if (!(R > 0)) throw InvalidInput("area_AF_capped: R must be positive");
    return area_polar(F, tol, R);
}

AreaResult area_of_lattice_restriction(const BinaryForm& F, const Lattice2& L,
                                       double tol) {
    return area_AF(restrict_form(F, L), tol);
}

} // namespace kfree
