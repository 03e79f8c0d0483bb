#include "kfree/forms.hpp"

#include "kfree/errors.hpp"
#include "kfree/sturm.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace kfree {

BinaryForm::BinaryForm(int d, std::vector<mpz_class> c) : degree(d), coeffs(std::move(c)) {
    if (degree < 1)
        throw InvalidInput("binary form: degree must be >= 1");
    if ((int)coeffs.size() != degree + 1)
        throw InvalidInput("binary form: need exactly d+1 coefficients");
}

bool BinaryForm::is_zero() const {
    for (const auto& c : coeffs)
        if (c != 0) return false;
    return true;
}

mpz_class BinaryForm::evaluate(const mpz_class& x, const mpz_class& y) const {
    // Horner in x with running powers of y.
    mpz_class acc = coeffs[0], ypow = 1;
    for (int i = 1; i <= degree; ++i) {
        ypow *= y;
        acc *= x;
        acc += coeffs[i] * ypow;
    }
    return acc;
}

double BinaryForm::evaluate_d(double x, double y) const {
    double acc = mpz_get_d(coeffs[0].get_mpz_t());
    double ypow = 1;
    for (int i = 1; i <= degree; ++i) {
        ypow *= y;
        acc = acc * x + mpz_get_d(coeffs[i].get_mpz_t()) * ypow;
    }
    return acc;
}

ZPoly BinaryForm::dehomogenize_x() const {
    std::vector<mpz_class> c(degree + 1);
    for (int i = 0; i <= degree; ++i) c[degree - i] = coeffs[i];
    return ZPoly(std::move(c));
}

ZPoly BinaryForm::dehomogenize_y() const {
    std::vector<mpz_class> c(coeffs);
    return ZPoly(std::move(c));
}

BinaryForm BinaryForm::homogenize(const ZPoly& f, int degree) {
    if (f.deg() > degree)
        throw InvalidInput("homogenize: polynomial degree exceeds form degree");
    std::vector<mpz_class> c(degree + 1, 0);
    for (int j = 0; j <= f.deg(); ++j) c[degree - j] = f.c[j];
    return BinaryForm(degree, std::move(c));
}

mpz_class BinaryForm::content() const {
    mpz_class g = 0;
    for (const auto& c : coeffs) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;
}

std::string BinaryForm::str() const {
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i <= degree; ++i) {
        const mpz_class& c = coeffs[i];
        if (c == 0) continue;
        if (!first) os << (c > 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        mpz_class a = abs(c);
        int xe = degree - i, ye = i;
        if (a != 1 || (xe == 0 && ye == 0)) os << a.get_str();
        if (xe > 0) { os << "x"; if (xe > 1) os << "^" << xe; }
        if (ye > 0) { os << "y"; if (ye > 1) os << "^" << ye; }
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

bool operator==(const BinaryForm& a, const BinaryForm& b) {
    return a.degree == b.degree && a.coeffs == b.coeffs;
}

RatMatrix2 RatMatrix2::identity() { return {1, 0, 0, 1}; }

RatMatrix2 RatMatrix2::from_long(long x1, long x2, long x3, long x4) {
    return {mpq_class(x1), mpq_class(x2), mpq_class(x3), mpq_class(x4)};
}

mpq_class RatMatrix2::det() const { return a1 * a4 - a2 * a3; }

RatMatrix2 RatMatrix2::inverse() const {
    mpq_class d = det();
    if (d == 0) throw InvalidInput("RatMatrix2: singular");
    return {a4 / d, -a2 / d, -a3 / d, a1 / d};
}

bool RatMatrix2::is_integral() const {
    return a1.get_den() == 1 && a2.get_den() == 1 && a3.get_den() == 1 &&
           a4.get_den() == 1;
}

RatMatrix2 operator*(const RatMatrix2& A, const RatMatrix2& B) {
    return {A.a1 * B.a1 + A.a2 * B.a3, A.a1 * B.a2 + A.a2 * B.a4,
            A.a3 * B.a1 + A.a4 * B.a3, A.a3 * B.a2 + A.a4 * B.a4};
}

bool operator==(const RatMatrix2& A, const RatMatrix2& B) {
    return A.a1 == B.a1 && A.a2 == B.a2 && A.a3 == B.a3 && A.a4 == B.a4;
}

bool operator<(const RatMatrix2& A, const RatMatrix2& B) {
    if (A.a1 != B.a1) return A.a1 < B.a1;
    if (A.a2 != B.a2) return A.a2 < B.a2;
    if (A.a3 != B.a3) return A.a3 < B.a3;
    return A.a4 < B.a4;
}

int RatMatrix2::order() const {
    RatMatrix2 P = *this;
    RatMatrix2 I = identity();
    for (int n = 1; n <= 12; ++n) {
        if (P == I) return n;
        P = P * (*this);
    }
    return 0;
}

std::string RatMatrix2::str() const {
    std::ostringstream os;
    os << "(" << a1.get_str() << " " << a2.get_str() << "; " << a3.get_str()
       << " " << a4.get_str() << ")";
    return os.str();
}

// Convolution of homogeneous coefficient vectors.
static std::vector<mpq_class> conv(const std::vector<mpq_class>& a,
                                   const std::vector<mpq_class>& b) {
    std::vector<mpq_class> r(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    return r;
}

std::vector<mpq_class> transform_q(const BinaryForm& F, const RatMatrix2& A) {
    int d = F.degree;
    // powers of (a1 x + a2 y) and (a3 x + a4 y)
    std::vector<std::vector<mpq_class>> p1(d + 1), p2(d + 1);
    p1[0] = {mpq_class(1)};
    p2[0] = {mpq_class(1)};
    std::vector<mpq_class> l1 = {A.a1, A.a2}, l2 = {A.a3, A.a4};
    for (int j = 1; j <= d; ++j) {
        p1[j] = conv(p1[j - 1], l1);
        p2[j] = conv(p2[j - 1], l2);
    }
    std::vector<mpq_class> out(d + 1);
    for (int i = 0; i <= d; ++i) {
        if (F.coeffs[i] == 0) continue;
        std::vector<mpq_class> term = conv(p1[d - i], p2[i]);
        mpq_class ci(F.coeffs[i]);
        for (int t = 0; t <= d; ++t) out[t] += ci * term[t];
    }
    return out;
}

BinaryForm transform(const BinaryForm& F, const RatMatrix2& A) {
    std::vector<mpq_class> q = transform_q(F, A);
    std::vector<mpz_class> z(q.size());
    for (size_t i = 0; i < q.size(); ++i) {
        if (q[i].get_den() != 1)
            throw InvalidInput("transform: non-integral result");
        z[i] = q[i].get_num();
    }
    return BinaryForm(F.degree, std::move(z));
}

mpz_class discriminant(const BinaryForm& F) {
    if (F.is_zero()) throw InvalidInput("discriminant: zero form");
    int d = F.degree;
    BinaryForm G = F;
    if (G.coeffs[0] == 0) {
        // unimodular shift x -> x + m y (as F(x, m x + y)) with the smallest
        // m >= 1 giving a nonzero leading coefficient; |disc| is unchanged
        // and the determinant is +1 so the sign is too.
        for (long m = 1; m <= d + 1; ++m) {
            if (F.evaluate(1, m) != 0) {
                G = transform(F, RatMatrix2::from_long(1, 0, m, 1));
                break;
            }
        }
        if (G.coeffs[0] == 0)
            throw InvalidInput("discriminant: could not normalize leading coefficient");
    }
    ZPoly f = G.dehomogenize_x();
    mpz_class res = resultant(f, f.derivative());
    mpz_class disc = res / G.coeffs[0];
    if ((((long)d * (d - 1) / 2) % 2) == 1) disc = -disc;
    return disc;
}

RootData root_data(const BinaryForm& F, unsigned prec_bits) {
    if (F.is_zero()) throw InvalidInput("root_data: zero form");
    if (discriminant(F) == 0)
        throw InvalidInput("root_data: zero discriminant");
    RootData rd;
    rd.has_y_factor = (F.coeffs[0] == 0);
    ZPoly f = F.dehomogenize_x();
    rd.leading = f.lc();
    rd.roots = certified_roots(f, prec_bits);
    return rd;
}

double height(const BinaryForm& F, unsigned prec_bits) {
    RootData rd = root_data(F, prec_bits);
    PrecisionGuard guard(40);
    Real h = abs(Real(rd.leading.get_mpz_t()));
    for (const auto& z : rd.roots.roots) h *= sqrt(1 + norm_cx(z));
    // the a*y factor of the (fact2) case contributes |a| * sqrt(0 + 1)
    return h.convert_to<double>();
}

double cusp_constant(const BinaryForm& F, unsigned prec_bits) {
    RootData rd = root_data(F, prec_bits);
    PrecisionGuard guard(40);
    const auto& zs = rd.roots.roots;
    Real mx = 1;
    for (const auto& z : zs) {
        Real a = abs_cx(z);
        if (a > mx) mx = a;
    }
    Real mingap = 1;
    for (size_t i = 0; i < zs.size(); ++i)
        for (size_t j = i + 1; j < zs.size(); ++j) {
            Real g = abs_cx(zs[i] - zs[j]);
            if (g < mingap) mingap = g;
        }
    Real e = 2 * mx / mingap;
    return e.convert_to<double>();
}

std::vector<double> real_root_angles(const BinaryForm& F) {
    RootData rd = root_data(F);
    std::vector<double> out;
    if (rd.has_y_factor) out.push_back(0.0); // direction (1, 0)
    for (size_t i = 0; i < rd.roots.roots.size(); ++i) {
        if (!rd.roots.is_real[i]) continue;
        double a = rd.roots.roots[i].re.convert_to<double>();
        out.push_back(std::atan2(1.0, a)); // direction (alpha, 1), in (0, pi)
    }
    size_t half = out.size();
    const double two_pi = 2 * std::acos(-1.0);
    for (size_t i = 0; i < half; ++i) {
        double t = out[i] + std::acos(-1.0);
        if (t >= two_pi) t -= two_pi;
        out.push_back(t);
    }
    std::sort(out.begin(), out.end());
    return out;
}

BinaryForm parse_form(const std::string& text) {
    // "d=3; coeffs=[1,0,0,1]"
    auto fail = [&](const std::string& why) {
        throw InvalidInput("bad form literal '" + text + "': " + why);
    };
    long d = -1;
    std::vector<mpz_class> cs;
    size_t dp = text.find("d=");
    if (dp == std::string::npos) fail("missing d=");
    d = std::strtol(text.c_str() + dp + 2, nullptr, 10);
    if (d < 1) fail("degree must be >= 1");
    size_t cp = text.find("coeffs=");
    if (cp == std::string::npos) fail("missing coeffs=");
    size_t lb = text.find('[', cp), rb = text.find(']', cp);
    if (lb == std::string::npos || rb == std::string::npos || rb < lb)
        fail("missing [...]");
    std::string body = text.substr(lb + 1, rb - lb - 1);
    std::istringstream is(body);
    std::string tok;
    while (std::getline(is, tok, ',')) {
        size_t b = tok.find_first_not_of(" \t");
        size_t e = tok.find_last_not_of(" \t");
        if (b == std::string::npos) fail("empty coefficient");
        try {
            cs.emplace_back(tok.substr(b, e - b + 1));
        } catch (const std::invalid_argument&) {
            fail("coefficient '" + tok + "' is not an integer");
        }
    }
    if ((long)cs.size() != d + 1)
        fail("expected exactly d+1 = " + std::to_string(d + 1) + " coefficients, got " +
             std::to_string(cs.size()));
    BinaryForm F((int)d, std::move(cs));
    if (F.is_zero()) fail("form is identically zero");
    return F;
}

std::string form_literal(const BinaryForm& F) {
    std::ostringstream os;
    os << "d=" << F.degree << "; coeffs=[";
    for (int i = 0; i <= F.degree; ++i) {
        if (i) os << ",";
        os << F.coeffs[i].get_str();
    }
    os << "]";
    return os.str();
}

} // namespace kfree
