#include "graphkrylov/kernel_function.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace graphkrylov {

KernelFunction KernelFunction::diffusion(double t) {
    if (!(t >= 0.0)) throw DomainError("diffusion kernel: t must be >= 0");
    KernelFunction k;
    k.kind_ = Kind::diffusion;
    k.name_ = "diffusion";
    k.t_ = t;
    k.declared_positive_ = true;
    return k;
}

KernelFunction KernelFunction::variational_spline(double eps, double s) {
    if (!(eps > 0.0) || !(s > 0.0))
        throw DomainError("variational spline kernel: need eps > 0 and s > 0");
    KernelFunction k;
    k.kind_ = Kind::variational_spline;
    k.name_ = "spline";
    k.eps_ = eps;
    k.s_ = s;
    k.declared_positive_ = true;
    return k;
}

KernelFunction KernelFunction::custom(std::string name,
                                      std::function<double(double)> evaluator,
                                      bool declared_positive) {
    KernelFunction k;
    k.kind_ = Kind::custom;
    k.name_ = std::move(name);
    k.evaluator_ = std::move(evaluator);
    k.declared_positive_ = declared_positive;
    return k;
}

double KernelFunction::value(double lambda) const {
    switch (kind_) {
        case Kind::diffusion:
            return std::exp(-t_ * lambda);
        case Kind::variational_spline:
            return std::pow(eps_ + lambda, -s_);
        case Kind::custom:
            return evaluator_(lambda);
    }
    return 0.0;  // unreachable
}

double eval_phi(const KernelFunction& phi, double lambda, double lambda_max) {
    const double slack = kTolSpec * std::max(1.0, lambda_max);
    if (lambda < -slack || lambda > lambda_max + slack)
        throw DomainError("eval_phi: lambda outside [0, lambda_max]");
    return phi.value(std::clamp(lambda, 0.0, lambda_max));
}

PhiRange phi_range(const KernelFunction& phi, double lambda_max) {
    // both built-in kinds are monotone decreasing
    if (phi.kind() != KernelFunction::Kind::custom)
        return {phi.value(lambda_max), phi.value(0.0)};
    PhiRange r{phi.value(0.0), phi.value(0.0)};
    const int grid = 2048;
    for (int i = 1; i <= grid; ++i) {
        const double v = phi.value(lambda_max * static_cast<double>(i) / grid);
        r.min = std::min(r.min, v);
        r.max = std::max(r.max, v);
    }
    return r;
}

} // namespace graphkrylov
