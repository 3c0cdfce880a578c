#include "zetalab/testfunction.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>

namespace zetalab::fn {

namespace {

double gaussian_eval(double x) { return std::exp(-kPi * x * x); }

// ---------------------------------------------------------------------------
// Peak-times-Gaussian image machinery.
//
//   f(y) = (1-y) e^{-pi y^2} on [0,1],  fhat(u) = 2 int_0^1 cos(2 pi u y) f(y) dy,
//   f^{(k)}(y) = q_k(y) e^{-pi y^2},  q_0 = 1-y,  q_{k+1} = q_k' - 2 pi y q_k.
//
// Beyond u = kPgSeam the image is an endpoint integration-by-parts expansion
// to depth 9 with remainder |R| <= 2 ||f^{(9)}||_1 / (2 pi u)^9:
//   odd  m:  s_m = 2 (-1)^{(m-1)/2} f^{(m-1)}(1)
//   even m:  a_m = 2 (-1)^{m/2+1} f^{(m-1)}(1),  d_m = 2 (-1)^{m/2} f^{(m-1)}(0)
// ---------------------------------------------------------------------------

constexpr int kIbpDepth = 9;
constexpr double kPgSeam = 12.0;

struct PgMachinery {
    double F0[kIbpDepth + 1];  // q_k(0)
    double F1[kIbpDepth + 1];  // q_k(1) e^{-pi}
    double norm_top;           // >= ||f^{(9)}||_1
    AsymptoticTail model;

    PgMachinery() {
        std::vector<std::vector<double>> qs = {{1.0, -1.0}};
        for (int k = 0; k < kIbpDepth; ++k) {
            const auto& q = qs.back();
            std::vector<double> nxt(q.size() + 1, 0.0);
            for (size_t i = 1; i < q.size(); ++i) nxt[i - 1] += q[i] * i;
            for (size_t i = 0; i < q.size(); ++i) nxt[i + 1] -= kTwoPi * q[i];
            qs.push_back(std::move(nxt));
        }
        auto peval = [](const std::vector<double>& c, double x) {
            double r = 0.0;
            for (auto it = c.rbegin(); it != c.rend(); ++it) r = r * x + *it;
            return r;
        };
        const double em = std::exp(-kPi);
        for (int k = 0; k <= kIbpDepth; ++k) {
            F0[k] = peval(qs[k], 0.0);
            F1[k] = peval(qs[k], 1.0) * em;
        }
        const auto& q9 = qs[kIbpDepth];
        auto r = quad::integrate(
            [&](double y) -> Complex {
                return std::abs(peval(q9, y)) * std::exp(-kPi * y * y);
            },
            0.0, 1.0, {1e-8, 4000});
        norm_top = (r.value.real() + r.err_bound) * 1.05 + 1e-18;

        model.cutoff = kPgSeam;
        model.freq = 1.0;
        for (int m = 1; m <= kIbpDepth; ++m) {
            AsymptoticTail::Term t;
            t.m = m;
            if (m % 2 == 1) {
                const int sg = ((m - 1) / 2) % 2 ? -1 : 1;
                t.s = 2.0 * sg * F1[m - 1];
            } else {
                const int sga = (m / 2 + 1) % 2 ? -1 : 1;
                const int sgd = (m / 2) % 2 ? -1 : 1;
                t.a = 2.0 * sga * F1[m - 1];
                t.d = 2.0 * sgd * F0[m - 1];
            }
            if (t.a != 0.0 || t.s != 0.0 || t.d != 0.0) model.terms.push_back(t);
        }
        model.rem_coeff = 2.0 * norm_top;
        model.rem_power = kIbpDepth;
    }
};

const PgMachinery& pg_machinery() {
    static const PgMachinery m;
    return m;
}

double tail_model_value(const AsymptoticTail& t, double u) {
    const double w = kTwoPi * u;
    const double ph = kTwoPi * t.freq * u;
    const double cw = std::cos(ph), sw = std::sin(ph);
    double tot = 0.0;
    for (const auto& tm : t.terms)
        tot += (tm.a * cw + tm.s * sw + tm.d) / std::pow(w, tm.m);
    return tot;
}

// ---------------------------------------------------------------------------
// Monotone (Fritsch-Carlson) cubic through the samples: C^1, no overshoot,
// so |f| on a segment is bounded by its endpoint values.
// ---------------------------------------------------------------------------

std::vector<double> pchip_slopes(const std::vector<double>& xs,
                                 const std::vector<double>& vs) {
    const size_t n = xs.size();
    std::vector<double> d(n, 0.0);
    std::vector<double> h(n - 1), del(n - 1);
    for (size_t i = 0; i + 1 < n; ++i) {
        h[i] = xs[i + 1] - xs[i];
        del[i] = (vs[i + 1] - vs[i]) / h[i];
    }
    d[0] = 0.0;  // even extension: f'(0) = 0
    for (size_t i = 1; i + 1 < n; ++i) {
        if (del[i - 1] * del[i] <= 0.0) {
            d[i] = 0.0;
        } else {
            const double w1 = 2.0 * h[i] + h[i - 1];
            const double w2 = h[i] + 2.0 * h[i - 1];
            d[i] = (w1 + w2) / (w1 / del[i - 1] + w2 / del[i]);
        }
    }
    if (n >= 3) {  // one-sided end slope, limited to preserve monotonicity
        double de = ((2.0 * h[n - 2] + h[n - 3]) * del[n - 2] -
                     h[n - 2] * del[n - 3]) /
                    (h[n - 2] + h[n - 3]);
        if (de * del[n - 2] < 0.0)
            de = 0.0;
        else if (del[n - 3] * del[n - 2] < 0.0 &&
                 std::abs(de) > 3.0 * std::abs(del[n - 2]))
            de = 3.0 * del[n - 2];
        d[n - 1] = de;
    } else {
        d[n - 1] = del[0];
    }
    return d;
}

// int_0^h |A + B u| du
double int_abs_linear(double A, double B, double h) {
    auto F = [&](double u) { return A * u + 0.5 * B * u * u; };
    if (B != 0.0) {
        const double r = -A / B;
        if (r > 0.0 && r < h) return std::abs(F(r)) + std::abs(F(h) - F(r));
    }
    return std::abs(F(h));
}

}  // namespace

// ---------------------------------------------------------------------------
// Node
// ---------------------------------------------------------------------------

struct TestFunction::Node {
    Kind kind;
    double k = 1.0;     // Scaled
    double beta = 1.0;  // Dilated
    std::optional<TestFunction> a, b;

    // SampledEven
    std::vector<double> xs, vs, ds;
    double support = 0.0;
    double samp_cert = 0.0;         // sup x^2 |f|
    double samp_int_abs = 0.0;      // >= int |f|
    double samp_int_abs_fpp = 0.0;  // int |f''| (piecewise-linear f'')

    // FourierImage
    std::optional<AsymptoticTail> tail;
    mutable std::map<double, double> cache;
    mutable std::mutex mu;

    static TestFunction wrap(std::shared_ptr<const Node> n) {
        return TestFunction(std::move(n));
    }

    double sampled_eval(double x) const {
        if (x > support) return 0.0;
        size_t i = std::upper_bound(xs.begin(), xs.end(), x) - xs.begin();
        i = i > 0 ? i - 1 : 0;
        if (i > xs.size() - 2) i = xs.size() - 2;
        const double h = xs[i + 1] - xs[i];
        const double t = (x - xs[i]) / h;
        const double t2 = t * t, t3 = t2 * t;
        return vs[i] * (2 * t3 - 3 * t2 + 1) + h * ds[i] * (t3 - 2 * t2 + t) +
               vs[i + 1] * (-2 * t3 + 3 * t2) + h * ds[i + 1] * (t3 - t2);
    }

    double quad_image(double u) const {
        {
            std::lock_guard<std::mutex> lk(mu);
            auto it = cache.find(u);
            if (it != cache.end()) return it->second;
        }
        const TestFunction& base = *a;
        const double sup = *base.support_end();
        auto r = quad::integrate(
            [&](double y) -> Complex {
                return std::cos(kTwoPi * u * y) * base(y);
            },
            0.0, sup, {1e-12, 8000});
        const double v = 2.0 * r.value.real();
        std::lock_guard<std::mutex> lk(mu);
        cache.emplace(u, v);
        return v;
    }

    double image_eval(double u) const {
        switch (a->kind()) {
            case Kind::Triangle: {
                if (u < 1e-5) {
                    const double z = kPi * u;
                    return 1.0 - z * z / 3.0;
                }
                const double z = std::sin(kPi * u) / (kPi * u);
                return z * z;
            }
            case Kind::ExpDecay:
                return 2.0 / (1.0 + 4.0 * kPi * kPi * u * u);
            case Kind::Indicator01:
                return u < 1e-8 ? 2.0 : std::sin(kTwoPi * u) / (kPi * u);
            case Kind::PeakTimesGaussian:
                if (u >= kPgSeam) return tail_model_value(pg_machinery().model, u);
                return quad_image(u);
            case Kind::SampledEven:
                return quad_image(u);
            default:
                throw Error("unnormalized image node");
        }
    }

    double eval(double x) const {
        switch (kind) {
            case Kind::Gaussian:
                return gaussian_eval(x);
            case Kind::Triangle:
                return x < 1.0 ? 1.0 - x : 0.0;
            case Kind::ExpDecay:
                return std::exp(-x);
            case Kind::Indicator01:
                return x <= 1.0 ? 1.0 : 0.0;
            case Kind::PeakTimesGaussian:
                return x < 1.0 ? (1.0 - x) * gaussian_eval(x) : 0.0;
            case Kind::SampledEven:
                return sampled_eval(x);
            case Kind::Scaled:
                return k * a->node_->eval(x);
            case Kind::Dilated:
                return a->node_->eval(beta * x);
            case Kind::Sum:
                return a->node_->eval(x) + b->node_->eval(x);
            case Kind::FourierImage:
                return image_eval(x);
        }
        throw Error("unreachable");
    }
};

namespace {

TestFunction wrap(std::shared_ptr<const TestFunction::Node> n) {
    return TestFunction::Node::wrap(std::move(n));
}

std::shared_ptr<TestFunction::Node> make_node(TestFunction::Kind k) {
    auto n = std::make_shared<TestFunction::Node>();
    n->kind = k;
    return n;
}

}  // namespace

TestFunction TestFunction::gaussian() { return wrap(make_node(Kind::Gaussian)); }
TestFunction TestFunction::triangle() { return wrap(make_node(Kind::Triangle)); }
TestFunction TestFunction::exp_decay() { return wrap(make_node(Kind::ExpDecay)); }
TestFunction TestFunction::indicator01() { return wrap(make_node(Kind::Indicator01)); }
TestFunction TestFunction::peak_times_gaussian() {
    return wrap(make_node(Kind::PeakTimesGaussian));
}

TestFunction TestFunction::sampled_even(std::vector<double> xs,
                                        std::vector<double> vals) {
    if (xs.size() < 3 || xs.size() != vals.size())
        throw DomainError("sampled_even: need >= 3 matching samples");
    if (xs.front() != 0.0) throw DomainError("sampled_even: grid must start at 0");
    for (size_t i = 0; i + 1 < xs.size(); ++i)
        if (!(xs[i] < xs[i + 1]))
            throw DomainError("sampled_even: grid must be strictly increasing");
    auto n = make_node(Kind::SampledEven);
    n->ds = pchip_slopes(xs, vals);
    n->support = xs.back();
    double cert = 0.0, int_abs = 0.0, int_fpp = 0.0;
    for (size_t i = 0; i + 1 < xs.size(); ++i) {
        const double h = xs[i + 1] - xs[i];
        const double mv = std::max(std::abs(vals[i]), std::abs(vals[i + 1]));
        cert = std::max(cert, mv * xs[i + 1] * xs[i + 1]);
        int_abs += mv * h;
        const double del = (vals[i + 1] - vals[i]) / h;
        const double c2 = (3.0 * del - 2.0 * n->ds[i] - n->ds[i + 1]) / h;
        const double c3 = (n->ds[i] + n->ds[i + 1] - 2.0 * del) / (h * h);
        int_fpp += int_abs_linear(2.0 * c2, 6.0 * c3, h);
    }
    n->samp_cert = cert;
    n->samp_int_abs = int_abs;
    n->samp_int_abs_fpp = int_fpp;
    n->xs = std::move(xs);
    n->vs = std::move(vals);
    return wrap(std::move(n));
}

TestFunction TestFunction::scaled(double k, TestFunction f) {
    if (f.kind() == Kind::Scaled) return scaled(k * f.scale_factor(), f.child());
    auto n = make_node(Kind::Scaled);
    n->k = k;
    n->a = std::move(f);
    return wrap(std::move(n));
}

TestFunction TestFunction::dilated(double beta, TestFunction f) {
    if (!(beta > 0.0)) throw DomainError("dilated: beta must be positive");
    // keep Dilated atomic over leaves: push through linear structure
    switch (f.kind()) {
        case Kind::Scaled:
            return scaled(f.scale_factor(), dilated(beta, f.child()));
        case Kind::Sum:
            return sum(dilated(beta, f.child(0)), dilated(beta, f.child(1)));
        case Kind::Dilated:
            return dilated(beta * f.dilation(), f.child());
        default:
            break;
    }
    if (beta == 1.0) return f;
    auto n = make_node(Kind::Dilated);
    n->beta = beta;
    n->a = std::move(f);
    return wrap(std::move(n));
}

TestFunction TestFunction::sum(TestFunction f, TestFunction g) {
    auto n = make_node(Kind::Sum);
    n->a = std::move(f);
    n->b = std::move(g);
    return wrap(std::move(n));
}

TestFunction TestFunction::fourier_image(TestFunction f) {
    // push the image through linear structure; collapse the involution
    switch (f.kind()) {
        case Kind::Scaled:
            return scaled(f.scale_factor(), fourier_image(f.child()));
        case Kind::Sum:
            return sum(fourier_image(f.child(0)), fourier_image(f.child(1)));
        case Kind::Dilated: {
            const double b = f.dilation();
            return scaled(1.0 / b, dilated(1.0 / b, fourier_image(f.child())));
        }
        case Kind::FourierImage:
            return f.child();
        case Kind::Gaussian:
            return gaussian();  // self-dual under the 2 cos(2 pi x y) kernel
        default:
            break;
    }
    auto n = make_node(Kind::FourierImage);
    switch (f.kind()) {
        case Kind::Triangle: {
            AsymptoticTail t;  // exact: (2 - 2 cos(2 pi u)) / (2 pi u)^2
            t.cutoff = 2.0;
            t.terms = {{2, -2.0, 0.0, 2.0}};
            t.rem_coeff = 0.0;
            t.rem_power = 3;
            n->tail = std::move(t);
            break;
        }
        case Kind::ExpDecay: {
            // 2/(1+w^2) = sum_{j>=1} 2 (-1)^{j-1} w^{-2j}, w = 2 pi u;
            // truncated after w^{-10}, alternating remainder <= 2 w^{-12}
            AsymptoticTail t;
            t.cutoff = 2.0;
            for (int j = 1; j <= 5; ++j)
                t.terms.push_back({2 * j, 0.0, 0.0, j % 2 ? 2.0 : -2.0});
            t.rem_coeff = 2.0;
            t.rem_power = 12;
            n->tail = std::move(t);
            break;
        }
        case Kind::Indicator01: {
            AsymptoticTail t;  // exact: 2 sin(2 pi u) / (2 pi u)
            t.cutoff = 2.0;
            t.terms = {{1, 0.0, 2.0, 0.0}};
            t.rem_coeff = 0.0;
            t.rem_power = 2;
            n->tail = std::move(t);
            break;
        }
        case Kind::PeakTimesGaussian:
            n->tail = pg_machinery().model;
            break;
        case Kind::SampledEven: {
            // endpoint integration by parts to depth 2:
            //   fhat(u) = 2 f(b) sin(2 pi u b)/(2 pi u)
            //           + 2 f'(b) cos(2 pi u b)/(2 pi u)^2
            //           - (2/(2 pi u)^2) int_0^b f''(y) cos(2 pi u y) dy
            const auto& base = *f.node_;
            AsymptoticTail t;
            t.cutoff = kPgSeam;
            t.freq = base.support;
            const double fb = base.vs.back();
            const double fpb = base.ds.back();
            if (fb != 0.0) t.terms.push_back({1, 0.0, 2.0 * fb, 0.0});
            if (fpb != 0.0) t.terms.push_back({2, 2.0 * fpb, 0.0, 0.0});
            t.rem_coeff = 2.0 * base.samp_int_abs_fpp;
            t.rem_power = 2;
            n->tail = std::move(t);
            break;
        }
        default:
            throw Error("unexpected image base");
    }
    n->a = std::move(f);
    return wrap(std::move(n));
}

double TestFunction::operator()(double x) const { return node_->eval(std::abs(x)); }

TestFunction::Kind TestFunction::kind() const { return node_->kind; }
double TestFunction::scale_factor() const { return node_->k; }
double TestFunction::dilation() const { return node_->beta; }

const TestFunction& TestFunction::child(int i) const {
    return i == 0 ? *node_->a : *node_->b;
}

std::optional<double> TestFunction::support_end() const {
    switch (node_->kind) {
        case Kind::Triangle:
        case Kind::Indicator01:
        case Kind::PeakTimesGaussian:
            return 1.0;
        case Kind::SampledEven:
            return node_->support;
        case Kind::Scaled:
            return node_->a->support_end();
        case Kind::Dilated: {
            auto s = node_->a->support_end();
            if (s) return *s / node_->beta;
            return std::nullopt;
        }
        case Kind::Sum: {
            auto sa = node_->a->support_end();
            auto sb = node_->b->support_end();
            if (sa && sb) return std::max(*sa, *sb);
            return std::nullopt;
        }
        default:
            return std::nullopt;
    }
}

std::optional<double> TestFunction::s2_certificate() const {
    switch (node_->kind) {
        case Kind::Gaussian:
            return 1.0 / (kPi * std::exp(1.0));  // max x^2 e^{-pi x^2} at x^2 = 1/pi
        case Kind::Triangle:
            return 4.0 / 27.0;  // max x^2 (1-x) at x = 2/3
        case Kind::ExpDecay:
            return 4.0 * std::exp(-2.0);
        case Kind::Indicator01:
            return 1.0;
        case Kind::PeakTimesGaussian:
            return 4.0 / 27.0;  // the Gaussian factor only shrinks the triangle bound
        case Kind::SampledEven:
            return node_->samp_cert;
        case Kind::Scaled: {
            auto c = node_->a->s2_certificate();
            if (c) return std::abs(node_->k) * *c;
            return std::nullopt;
        }
        case Kind::Dilated: {
            auto c = node_->a->s2_certificate();
            if (c) return *c / (node_->beta * node_->beta);
            return std::nullopt;
        }
        case Kind::Sum: {
            auto ca = node_->a->s2_certificate();
            auto cb = node_->b->s2_certificate();
            if (ca && cb) return *ca + *cb;
            return std::nullopt;
        }
        case Kind::FourierImage: {
            switch (node_->a->kind()) {
                case Kind::Triangle:
                    return 1.0 / (kPi * kPi);  // sup x^2 sin^2(pi x)/(pi x)^2
                case Kind::ExpDecay:
                    return 1.0 / (2.0 * kPi * kPi);
                case Kind::Indicator01:
                    return std::nullopt;  // sinc decays like 1/x only
                default:
                    break;
            }
            // modeled images: below the cutoff |fhat| <= 2 int |f|; beyond it
            // the terms give sum (|a|+|s|+|d|) (2 pi)^{-m} cutoff^{2-m}
            const auto& t = *node_->tail;
            double above = 0.0;
            for (const auto& tm : t.terms) {
                const double mag = std::abs(tm.a) + std::abs(tm.s) + std::abs(tm.d);
                if (tm.m == 1) {
                    // a 1/u envelope is unbounded against x^2; certify only a
                    // vanishing coefficient, padded out to any cutoff the
                    // half-line quadrature will ever reach
                    const double c1 = mag / kTwoPi;
                    if (c1 > 1e-30) return std::nullopt;
                    above += c1 * 1e12;
                    continue;
                }
                above += mag * std::pow(kTwoPi, -tm.m) * std::pow(t.cutoff, 2 - tm.m);
            }
            above += t.rem_coeff * std::pow(kTwoPi, -t.rem_power) *
                     std::pow(t.cutoff, 2 - t.rem_power);
            const double int_abs = node_->a->kind() == Kind::SampledEven
                                       ? node_->a->node_->samp_int_abs
                                       : 1.0;  // int_0^1 (1-y) e^{-pi y^2} < 1/2
            return std::max(above, t.cutoff * t.cutoff * 2.0 * int_abs);
        }
    }
    return std::nullopt;
}

DecayClass TestFunction::decay_class() const {
    switch (node_->kind) {
        case Kind::Triangle:
        case Kind::Indicator01:
        case Kind::PeakTimesGaussian:
        case Kind::SampledEven:
            return DecayClass::Compact;
        case Kind::Gaussian:
        case Kind::ExpDecay:
            return DecayClass::SuperExponential;
        case Kind::Scaled:
        case Kind::Dilated:
            return node_->a->decay_class();
        case Kind::Sum: {
            const auto da = node_->a->decay_class();
            const auto db = node_->b->decay_class();
            auto rank = [](DecayClass d) {
                switch (d) {
                    case DecayClass::None: return 0;
                    case DecayClass::PowerLawOnly: return 1;
                    case DecayClass::Modeled: return 2;
                    case DecayClass::SuperExponential: return 3;
                    case DecayClass::Compact: return 4;
                }
                return 0;
            };
            return rank(da) < rank(db) ? da : db;
        }
        case Kind::FourierImage:
            return DecayClass::Modeled;
    }
    return DecayClass::None;
}

quad::DecayCertificate TestFunction::integral_certificate() const {
    switch (node_->kind) {
        case Kind::Gaussian:
            return quad::GaussianDecay{1.0, kPi, 1.0};
        case Kind::ExpDecay:
            return quad::Exponential{1.0, 1.0, 1.0};
        case Kind::Scaled: {
            auto c = node_->a->integral_certificate();
            std::visit([&](auto& cc) { cc.C *= std::abs(node_->k); }, c);
            return c;
        }
        case Kind::Dilated: {
            // |f(beta x)| <= env(beta x) for beta x >= x0
            auto c = node_->a->integral_certificate();
            const double b = node_->beta;
            if (auto* p = std::get_if<quad::PowerLaw>(&c))
                return quad::PowerLaw{p->C * std::pow(b, -p->p), p->p, p->x0 / b};
            if (auto* e = std::get_if<quad::Exponential>(&c))
                return quad::Exponential{e->C, e->a * b, e->x0 / b};
            auto g = std::get<quad::GaussianDecay>(c);
            return quad::GaussianDecay{g.C, g.a * b * b, g.x0 / b};
        }
        case Kind::FourierImage: {
            auto cert = s2_certificate();
            if (!cert)
                throw DomainError("image decays too slowly for a half-line certificate");
            return quad::PowerLaw{*cert, 2.0, node_->tail->cutoff};
        }
        default: {
            auto s = support_end();
            if (s)  // compact: zero envelope beyond the support
                return quad::Exponential{0.0, 1.0, *s};
            auto cert = s2_certificate();
            if (!cert) throw DomainError("no decay certificate available");
            return quad::PowerLaw{*cert, 2.0, 1.0};
        }
    }
}

const AsymptoticTail* TestFunction::tail_model() const {
    if (node_->kind == Kind::FourierImage && node_->tail) return &*node_->tail;
    return nullptr;
}

std::vector<Atom> flatten(const TestFunction& f) {
    std::vector<Atom> out;
    struct Rec {
        static void go(const TestFunction& g, double c, std::vector<Atom>& out) {
            switch (g.kind()) {
                case TestFunction::Kind::Scaled:
                    go(g.child(), c * g.scale_factor(), out);
                    return;
                case TestFunction::Kind::Sum:
                    go(g.child(0), c, out);
                    go(g.child(1), c, out);
                    return;
                default:
                    out.push_back({c, g});
            }
        }
    };
    Rec::go(f, 1.0, out);
    return out;
}

}  // namespace zetalab::fn
