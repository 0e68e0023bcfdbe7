#include "eoplab/operators.hpp"

namespace eoplab {

namespace {
const RationalFn& x_fn() {
    static const RationalFn x = RationalFn::variable();
    return x;
}
}  // namespace

QuasiGaussian FirstOrderOperator::apply(const QuasiGaussian& f) const {
    // (eps d/dx + w) [h e^{s x^2/2}] = (eps h' + eps s x h + w h) e^{s x^2/2}
    const RationalFn& h = f.pre;
    const Rational e = rational(eps);
    const Rational s = rational(f.sigma);
    RationalFn out = RationalFn::constant(e) * h.derivative() +
                     RationalFn::constant(e * s) * x_fn() * h + w * h;
    return {std::move(out), f.sigma};
}

QuasiGaussian HamiltonianSpec::apply(const QuasiGaussian& f) const {
    // -(h e^{s x^2/2})'' = (-h'' - 2 s x h' - (s + x^2) h) e^{s x^2/2}
    const RationalFn& h = f.pre;
    const Rational s = rational(f.sigma);
    const RationalFn x = x_fn();
    RationalFn out = -h.derivative().derivative() -
                     RationalFn::constant(2 * s) * x * h.derivative() -
                     (RationalFn::constant(s) + x * x) * h +
                     (potential + RationalFn::constant(shift)) * h;
    return {std::move(out), f.sigma};
}

}  // namespace eoplab
