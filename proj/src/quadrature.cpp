#include "deltabeta/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <queue>
#include <string>
#include <vector>

namespace deltabeta {

namespace {

// Kronrod abscissae; odd indices are the 7-point Gauss nodes.
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000,
};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714,
};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327,
};

constexpr double kEpsilon = std::numeric_limits<double>::epsilon();
constexpr double kTiny = std::numeric_limits<double>::min();

struct Segment {
    double a;
    double b;
    Complex value;
    double error;
};

struct WorstFirst {
    bool operator()(const Segment& l, const Segment& r) const { return l.error < r.error; }
};

Segment gauss_kronrod(const ComplexIntegrand& f, double a, double b) {
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);

    std::array<Complex, 15> fv;
    fv[7] = f(center);
    for (int j = 0; j < 7; ++j) {
        const double dx = half * kXgk[j];
        fv[j] = f(center - dx);
        fv[14 - j] = f(center + dx);
    }
    for (const Complex& v : fv) require_finite(v, "integrand value");

    Complex kronrod = kWgk[7] * fv[7];
    Complex gauss = kWg[3] * fv[7];
    double abs_sum = kWgk[7] * std::abs(fv[7]);
    for (int j = 0; j < 7; ++j) {
        const Complex pair = fv[j] + fv[14 - j];
        kronrod += kWgk[j] * pair;
        abs_sum += kWgk[j] * (std::abs(fv[j]) + std::abs(fv[14 - j]));
        if (j % 2 == 1) gauss += kWg[j / 2] * pair;
    }
    const Complex mean = 0.5 * kronrod;
    double asc = kWgk[7] * std::abs(fv[7] - mean);
    for (int j = 0; j < 7; ++j) {
        asc += kWgk[j] * (std::abs(fv[j] - mean) + std::abs(fv[14 - j] - mean));
    }

    const double scale = std::abs(half);
    const double res_abs = abs_sum * scale;
    const double res_asc = asc * scale;
    double err = std::abs((kronrod - gauss) * half);
    if (res_asc != 0.0 && err != 0.0) {
        err = res_asc * std::min(1.0, std::pow(200.0 * err / res_asc, 1.5));
    }
    if (res_abs > kTiny / (50.0 * kEpsilon)) err = std::max(50.0 * kEpsilon * res_abs, err);
    return {a, b, kronrod * half, err};
}

bool can_bisect(double a, double b) {
    const double mid = 0.5 * (a + b);
    return mid > a && mid < b && (b - a) > 4.0 * kEpsilon * std::max(std::abs(a), std::abs(b));
}

}  // namespace

void QuadratureConfig::validate() const {
    if (!(abs_tol > 0.0 && abs_tol < 1.0)) throw ConfigError("abs_tol must lie in (0, 1)");
    if (!(rel_tol > 0.0 && rel_tol < 1.0)) throw ConfigError("rel_tol must lie in (0, 1)");
    if (max_subdivisions <= 0 || max_subdivisions > 1000000) {
        throw ConfigError("max_subdivisions must lie in [1, 10^6]");
    }
    if (!(pv_excision > 0.0) || !std::isfinite(pv_excision)) {
        throw ConfigError("pv_excision must be positive");
    }
}

QuadratureResult integrate_adaptive(const ComplexIntegrand& f, std::span<const double> points,
                                    const QuadratureConfig& cfg) {
    cfg.validate();
    if (points.size() < 2) throw DomainError("integration needs at least two points");
    for (std::size_t i = 0; i + 1 < points.size(); ++i) {
        require_finite(points[i], "integration limit");
        require_finite(points[i + 1], "integration limit");
        if (!(points[i] < points[i + 1])) {
            throw DomainError("integration points must be strictly increasing");
        }
    }

    std::priority_queue<Segment, std::vector<Segment>, WorstFirst> heap;
    std::vector<Segment> frozen;
    for (std::size_t i = 0; i + 1 < points.size(); ++i) {
        heap.push(gauss_kronrod(f, points[i], points[i + 1]));
    }

    auto totals = [&] {
        Complex value = 0.0;
        double error = 0.0;
        auto add = [&](const Segment& s) {
            value += s.value;
            error += s.error;
        };
        std::for_each(frozen.begin(), frozen.end(), add);
        // priority_queue has no iteration; walk a copy of the container.
        auto copy = heap;
        while (!copy.empty()) {
            add(copy.top());
            copy.pop();
        }
        return std::pair{value, error};
    };

    auto [value, error] = totals();
    int subdivisions = 0;
    int since_resum = 0;
    while (!heap.empty() && error > std::max(cfg.abs_tol, cfg.rel_tol * std::abs(value))) {
        Segment worst = heap.top();
        heap.pop();
        if (!can_bisect(worst.a, worst.b)) {
            frozen.push_back(worst);
            continue;
        }
        if (subdivisions >= cfg.max_subdivisions) {
            throw QuadratureError("adaptive quadrature exhausted " +
                                      std::to_string(cfg.max_subdivisions) + " subdivisions",
                                  value, error);
        }
        const double mid = 0.5 * (worst.a + worst.b);
        const Segment left = gauss_kronrod(f, worst.a, mid);
        const Segment right = gauss_kronrod(f, mid, worst.b);
        value += left.value + right.value - worst.value;
        error += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);
        ++subdivisions;
        if (++since_resum == 256) {
            std::tie(value, error) = totals();
            since_resum = 0;
        }
    }
    std::tie(value, error) = totals();
    return {value, error, subdivisions};
}

QuadratureResult integrate_adaptive(const ComplexIntegrand& f, double lo, double hi,
                                    const QuadratureConfig& cfg) {
    const std::array<double, 2> pts = {lo, hi};
    return integrate_adaptive(f, pts, cfg);
}

std::vector<double> peak_partition(double lo, double hi, double scale, double max_panel) {
    std::vector<double> pts = {lo, hi};
    if (lo < 0.0 && 0.0 < hi) pts.push_back(0.0);
    for (double r = scale; r < std::max(-lo, hi); r *= 10.0) {
        if (r < hi) pts.push_back(r);
        if (-r > lo) pts.push_back(-r);
    }
    if (std::isfinite(max_panel)) {
        const auto panels = static_cast<std::size_t>(std::ceil((hi - lo) / max_panel));
        for (std::size_t i = 1; i < panels; ++i) {
            pts.push_back(lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(panels));
        }
    }
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
}

double integrate_real(const RealIntegrand& f, double lo, double hi, const QuadratureConfig& cfg) {
    return integrate_adaptive([&f](double x) { return Complex(f(x), 0.0); }, lo, hi, cfg)
        .value.real();
}

Complex principal_value(const ComplexIntegrand& numerator, double lo, double hi,
                        const QuadratureConfig& cfg, std::span<const double> breaks) {
    cfg.validate();
    require_finite(lo, "lo");
    require_finite(hi, "hi");
    if (!(lo < 0.0 && 0.0 < hi)) throw DomainError("principal value needs lo < 0 < hi");

    const double c = std::min(-lo, hi);
    auto folded = [&numerator](double x) { return (numerator(x) - numerator(-x)) / x; };
    auto plain = [&numerator](double x) { return numerator(x) / x; };

    // Partition of [from, to] refined by the |break| locations inside it.
    auto partition = [&breaks](double from, double to, bool fold) {
        std::vector<double> pts = {from, to};
        for (double p : breaks) {
            const double q = fold ? std::abs(p) : p;
            if (q > from && q < to) pts.push_back(q);
        }
        std::sort(pts.begin(), pts.end());
        pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
        return pts;
    };

    Complex outer = 0.0;
    if (hi > c) outer += integrate_adaptive(plain, partition(c, hi, false), cfg).value;
    if (-lo > c) outer += integrate_adaptive(plain, partition(lo, -c, false), cfg).value;

    double delta = std::min(cfg.pv_excision, 0.5 * c);
    Complex body = integrate_adaptive(folded, partition(delta, c, true), cfg).value;
    Complex estimate = body + gauss_kronrod(folded, 0.0, delta).value;

    for (int halving = 0; halving < 60; ++halving) {
        const double next = 0.5 * delta;
        body += integrate_adaptive(folded, partition(next, delta, true), cfg).value;
        const Complex refined = body + gauss_kronrod(folded, 0.0, next).value;
        const double change = std::abs(refined - estimate);
        estimate = refined;
        delta = next;
        if (change < cfg.abs_tol) return estimate + outer;
    }
    throw QuadratureError("principal value did not stabilize under excision halving",
                          estimate + outer, cfg.abs_tol);
}

double integrate_pv(const TestFunction& phi, double lo, double hi, const QuadratureConfig& cfg) {
    return principal_value([&phi](double x) { return Complex(phi(x), 0.0); }, lo, hi, cfg).real();
}

TruncationParams TruncationParams::from_cuts(double alpha_cut, double beta_cut) {
    if (!(alpha_cut > 0.0) || !(beta_cut > 0.0)) throw DomainError("cuts must be positive");
    // xi = ln((1 - t) / t)  <=>  t = 1 / (1 + e^xi)
    TruncationParams out;
    out.mu = std::isinf(beta_cut) ? 0.0 : 1.0 / (1.0 + std::exp(beta_cut));
    out.lam = std::isinf(alpha_cut) ? 0.0 : 1.0 / (1.0 + std::exp(alpha_cut));
    return out;
}

double TruncationParams::alpha_cut() const {
    if (lam == 0.0) return std::numeric_limits<double>::infinity();
    return std::log1p(-lam) - std::log(lam);
}

double TruncationParams::beta_cut() const {
    if (mu == 0.0) return std::numeric_limits<double>::infinity();
    return std::log1p(-mu) - std::log(mu);
}

void TruncationParams::validate() const {
    require_finite(mu, "mu");
    require_finite(lam, "lam");
    if (mu < 0.0 || lam < 0.0) throw DomainError("truncation cuts must be >= 0");
    if (mu + lam >= 1.0) throw DomainError("truncation needs mu + lam < 1");
}

void IntegrandSpec::validate() const {
    require_finite(a, "a");
    require_finite(b, "b");
    require_finite(x, "x");
    require_finite(y, "y");
    trunc.validate();
    if (kind == Kind::beta_critical && (a < 0.0 || b < 0.0)) {
        throw DomainError("beta integrand needs a, b >= 0");
    }
    if (kind == Kind::cosh_representation && (a < 0.0 || b < 0.0)) {
        throw DomainError("cosh representation needs a, b >= 0");
    }
}

ComplexIntegrand make_integrand(const IntegrandSpec& spec) {
    spec.validate();
    const double a = spec.a;
    const double b = spec.b;
    const double x = spec.x;
    const double y = spec.y;
    switch (spec.kind) {
        case IntegrandSpec::Kind::beta_critical:
            return [=](double t) {
                return std::exp(Complex(a - 1.0, x) * std::log(t) +
                                Complex(b - 1.0, y) * std::log1p(-t));
            };
        case IntegrandSpec::Kind::cosh_representation: {
            const Complex drift(0.5 * (b - a), 0.5 * (y - x));
            const Complex power(a + b, x + y);
            return [=](double xi) {
                // ln(2 cosh(xi/2)) without overflow
                const double log_cosh = 0.5 * std::abs(xi) + std::log1p(std::exp(-std::abs(xi)));
                return std::exp(drift * xi - power * log_cosh);
            };
        }
        case IntegrandSpec::Kind::truncated_fourier:
            return [=](double xi) { return std::exp(Complex(0.0, xi * x)); };
        case IntegrandSpec::Kind::generic:
            break;
    }
    throw DomainError("generic integrands have no built-in closed form");
}

Complex beta_integral_direct(double a, double b, double x, double y,
                             const TruncationParams& trunc, const QuadratureConfig& cfg) {
    cfg.validate();
    IntegrandSpec spec{IntegrandSpec::Kind::cosh_representation, a, b, x, y, trunc};
    spec.validate();
    if (a < 0.0 || b < 0.0) throw DomainError("beta integral needs a, b >= 0");
    if (trunc.mu == 0.0 && a <= 0.0) {
        throw DomainError("t -> 0 end diverges: give a > 0 or a cut mu > 0");
    }
    if (trunc.lam == 0.0 && b <= 0.0) {
        throw DomainError("t -> 1 end diverges: give b > 0 or a cut lam > 0");
    }

    // |integrand| <= exp(-a xi) for xi > 0 and exp(-b |xi|) for xi < 0, so the
    // tail past L is bounded by exp(-a L) / a.
    const double tail_tol = 0.01 * cfg.abs_tol;
    auto tail_cut = [tail_tol](double offset) { return std::log(1.0 / (offset * tail_tol)) / offset; };
    const double upper = trunc.mu > 0.0 ? trunc.beta_cut() : tail_cut(a);
    const double lower = trunc.lam > 0.0 ? -trunc.alpha_cut() : -tail_cut(b);

    // Seed the partition at about a quarter of the fastest oscillation period
    // so a single Kronrod panel never aliases the phase.
    const double freq = 0.5 * std::abs(y - x) + 0.5 * std::abs(x + y) + 1.0;
    const auto pieces = static_cast<std::size_t>(
        std::clamp(std::ceil((upper - lower) * freq / 4.0), 1.0, 1e5));
    std::vector<double> pts(pieces + 1);
    for (std::size_t i = 0; i <= pieces; ++i) {
        pts[i] = lower + (upper - lower) * static_cast<double>(i) / static_cast<double>(pieces);
    }
    pts.back() = upper;
    return integrate_adaptive(make_integrand(spec), pts, cfg).value;
}

Complex truncated_fourier(double x, double alpha_cut, double beta_cut) {
    require_finite(x, "x");
    if (!(alpha_cut > 0.0) || !(beta_cut > 0.0) || !std::isfinite(alpha_cut) ||
        !std::isfinite(beta_cut)) {
        throw DomainError("truncated Fourier cuts must be positive and finite");
    }
    const double length = alpha_cut + beta_cut;
    if (x == 0.0) return {length, 0.0};
    // (e^{i beta x} - e^{-i alpha x}) / (i x)
    //   = e^{i (beta - alpha) x / 2} * 2 sin(length x / 2) / x
    const double half = 0.5 * length * x;
    const double sinc = std::abs(half) < 1e-8 ? 1.0 - half * half / 6.0 : std::sin(half) / half;
    return std::exp(Complex(0.0, 0.5 * (beta_cut - alpha_cut) * x)) * (length * sinc);
}

}  // namespace deltabeta
