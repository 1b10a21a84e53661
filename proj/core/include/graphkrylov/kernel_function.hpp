#ifndef GRAPHKRYLOV_KERNEL_FUNCTION_HPP
#define GRAPHKRYLOV_KERNEL_FUNCTION_HPP

#include <functional>
#include <string>

#include "graphkrylov/errors.hpp"

namespace graphkrylov {

// Relative slack allowed when checking lambda against [0, lambda_max].
inline constexpr double kTolSpec = 1e-8;

/// A scalar kernel-generating function phi on [0, Lambda]. The matrix kernel
/// is phi(L); the spectral bound Lambda is attached at the point of use.
///
/// Built-in kinds:
///   diffusion           phi(lambda) = exp(-t lambda),        t >= 0
///   variational_spline  phi(lambda) = (eps + lambda)^(-s),   eps > 0, s > 0
/// Both are positive on [0, Lambda] for every admissible parameter choice.
/// Custom functions must declare positivity themselves; the library never
/// verifies it on the continuum.
class KernelFunction {
public:
    enum class Kind { diffusion, variational_spline, custom };

    static KernelFunction diffusion(double t);
    static KernelFunction variational_spline(double eps, double s);
    static KernelFunction custom(std::string name,
                                 std::function<double(double)> evaluator,
                                 bool declared_positive);

    Kind kind() const { return kind_; }
    const std::string& name() const { return name_; }
    bool declared_positive() const { return declared_positive_; }

    double t() const { return t_; }
    double eps() const { return eps_; }
    double s() const { return s_; }

    /// Raw evaluation without any domain check.
    double value(double lambda) const;

private:
    KernelFunction() = default;

    Kind kind_ = Kind::custom;
    std::string name_;
    double t_ = 0.0;
    double eps_ = 0.0;
    double s_ = 0.0;
    bool declared_positive_ = false;
    std::function<double(double)> evaluator_;
};

/// Domain-checked evaluation: lambda must lie in [0, lambda_max] up to the
/// kTolSpec overshoot; throws DomainError otherwise.
double eval_phi(const KernelFunction& phi, double lambda, double lambda_max);

/// Extrema of phi on [0, lambda_max], estimated on a dense grid. Exact for
/// the monotone built-in kinds; feeds the predictor perturbation constant.
struct PhiRange {
    double min;
    double max;
};
PhiRange phi_range(const KernelFunction& phi, double lambda_max);

} // namespace graphkrylov

#endif
