#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "zetalab/quadrature.hpp"

namespace zetalab::fn {

// Asymptotic model of a slowly decaying even function (a cosine image):
//   value(t) = sum_m [a_m cos(2 pi freq t) + s_m sin(2 pi freq t) + d_m] / (2 pi t)^m + R(t)
// valid for t >= cutoff with |R(t)| <= rem_coeff / (2 pi t)^rem_power.
// The transforms use it for certified theta/Mellin/Fourier tails that plain
// quadrature cannot reach.
struct AsymptoticTail {
    struct Term {
        int m;
        double a = 0.0, s = 0.0, d = 0.0;
    };
    double cutoff = 2.0;
    double freq = 1.0;
    std::vector<Term> terms;
    double rem_coeff = 0.0;
    int rem_power = 2;
};

// How fast |f| certifiably decays; drives the choice of summation/quadrature
// strategy in the transforms.
enum class DecayClass {
    Compact,          // identically zero beyond support_end()
    SuperExponential, // Gaussian-type certificate
    Modeled,          // AsymptoticTail available beyond its cutoff
    PowerLawOnly,     // only |x^2 f| <= C known
    None              // no certificate (e.g. the image of the indicator)
};

// Immutable even test function: a small expression tree over closed-form
// leaves, sampled data, scalings, sums, and lazy Fourier-cosine images.
// Evaluation is always at |x|.
class TestFunction {
public:
    enum class Kind {
        Gaussian,          // exp(-pi x^2)
        Triangle,          // max(0, 1-|x|)
        ExpDecay,          // exp(-|x|)
        Indicator01,       // 1 on [0,1], 0 beyond (even)
        PeakTimesGaussian, // (1-|x|)_+ exp(-pi x^2)
        SampledEven,       // monotone cubic through samples on [0, b], 0 beyond
        Scaled,            // k * f(x)
        Dilated,           // f(beta x), beta > 0
        Sum,               // f(x) + g(x)
        FourierImage       // fhat(x) = 2 int_0^inf cos(2 pi x y) f(y) dy
    };

    static TestFunction gaussian();
    static TestFunction triangle();
    static TestFunction exp_decay();
    static TestFunction indicator01();
    static TestFunction peak_times_gaussian();
    // xs strictly increasing from 0; f' clamped to 0 at x = 0 (evenness)
    static TestFunction sampled_even(std::vector<double> xs, std::vector<double> vals);
    static TestFunction scaled(double k, TestFunction f);
    static TestFunction dilated(double beta, TestFunction f);
    static TestFunction sum(TestFunction f, TestFunction g);
    static TestFunction fourier_image(TestFunction f);

    double operator()(double x) const;

    Kind kind() const;
    double scale_factor() const;   // Scaled nodes
    double dilation() const;       // Dilated nodes
    const TestFunction& child(int i = 0) const;

    // smallest S with f == 0 on (S, inf), when compactly supported
    std::optional<double> support_end() const;
    // a finite C with |x^2 f(x)| <= C everywhere, when certifiable
    std::optional<double> s2_certificate() const;
    DecayClass decay_class() const;
    // envelope for half-line quadrature cutoffs; throws DomainError if the
    // function carries no usable certificate
    quad::DecayCertificate integral_certificate() const;
    // asymptotic model, when the node is (or wraps) a modeled image
    const AsymptoticTail* tail_model() const;

    struct Node;  // internal

private:
    explicit TestFunction(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    std::shared_ptr<const Node> node_;
    friend struct Node;
};

// Flattened additive decomposition: f = sum_i coeff_i * atom_i where atoms are
// non-Sum, non-Scaled nodes (Dilated kept atomic). Transforms use it to apply
// per-atom strategies linearly.
struct Atom {
    double coeff;
    TestFunction fn;
};
std::vector<Atom> flatten(const TestFunction& f);

}  // namespace zetalab::fn
