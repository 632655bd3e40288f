#include "eulertop/euler_map.hpp"

namespace eulertop {

TopConfig::TopConfig(Rational I1, Rational I2, Rational I3, Rational delta)
    : I1_(std::move(I1)), I2_(std::move(I2)), I3_(std::move(I3)), delta_(std::move(delta)) {
    if (I1_.is_zero() || I2_.is_zero() || I3_.is_zero())
        throw std::invalid_argument("moments of inertia must be nonzero");
    if (delta_.is_zero()) throw std::invalid_argument("time step must be nonzero");
    const Rational half(1, 2);
    a1_ = delta_ * (I2_ - I3_) * half / I1_;
    a2_ = delta_ * (I3_ - I1_) * half / I2_;
    a3_ = delta_ * (I1_ - I2_) * half / I3_;
}

}  // namespace eulertop
