#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <optional>
#include <string>
#include <utility>

#include "gradest/errors.hpp"
#include "gradest/vec.hpp"

namespace gradest {

/// A scalar field F: R^n -> R with optional capabilities layered on top of
/// plain real evaluation:
///
///   - complex evaluation (the field accepts complex coordinates, needed for
///     complex-step derivatives),
///   - an analytic gradient (needed as ground truth in error studies).
///
/// Fields that expose complex evaluation keep eval_real consistent with it by
/// construction: when a complex evaluator is present and no separate real one
/// is given, eval_real is its real part on a real point. Capability queries
/// never throw; eval_* throw FieldCapabilityError when asked for something
/// the field cannot do, and EvaluationError when the field returns a
/// non-finite value at a finite point.
class ScalarField {
public:
    using RealFn = std::function<double(const Vec&)>;
    using ComplexFn = std::function<std::complex<double>(const CVec&)>;
    using GradientFn = std::function<Vec(const Vec&)>;

    ScalarField(std::string name, int dim, RealFn real)
        : name_(std::move(name)), dim_(dim), real_(std::move(real)) {
        detail::check_dim(dim_);
        if (!real_) throw std::invalid_argument("field " + name_ + ": real evaluator is required");
    }

    ScalarField& with_complex(ComplexFn f) {
        complex_ = std::move(f);
        return *this;
    }
    ScalarField& with_gradient(GradientFn f) {
        gradient_ = std::move(f);
        return *this;
    }

    /// Builds a smooth field from its complex evaluator alone; the real
    /// evaluator is the real part on the lifted point, so the two views can
    /// never drift apart.
    static ScalarField from_complex(std::string name, int dim, ComplexFn f) {
        ComplexFn shared = std::move(f);
        RealFn real = [shared](const Vec& p) { return shared(CVec::from_real(p)).real(); };
        ScalarField field(std::move(name), dim, std::move(real));
        field.complex_ = std::move(shared);
        return field;
    }

    const std::string& name() const { return name_; }
    int dim() const { return dim_; }
    bool has_complex() const { return static_cast<bool>(complex_); }
    bool has_gradient() const { return static_cast<bool>(gradient_); }

    double eval_real(const Vec& p) const {
        check_point_dim(p.dim());
        double v = real_(p);
        if (!std::isfinite(v))
            throw EvaluationError("field " + name_ + " returned non-finite value at " +
                                  to_string(p));
        return v;
    }

    std::complex<double> eval_complex(const CVec& p) const {
        if (!complex_)
            throw FieldCapabilityError("field " + name_ + " does not support complex evaluation");
        check_point_dim(p.dim());
        std::complex<double> v = complex_(p);
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
            throw EvaluationError("field " + name_ + " returned non-finite complex value");
        return v;
    }

    Vec gradient(const Vec& p) const {
        if (!gradient_)
            throw FieldCapabilityError("field " + name_ + " does not expose an analytic gradient");
        check_point_dim(p.dim());
        Vec g = gradient_(p);
        if (!g.all_finite())
            throw EvaluationError("field " + name_ + " gradient is non-finite at " + to_string(p));
        return g;
    }

private:
    void check_point_dim(int n) const {
        if (n != dim_)
            throw std::invalid_argument("field " + name_ + " expects dimension " +
                                        std::to_string(dim_) + ", got point of dimension " +
                                        std::to_string(n));
    }

    std::string name_;
    int dim_;
    RealFn real_;
    ComplexFn complex_;
    GradientFn gradient_;
};

} // namespace gradest
