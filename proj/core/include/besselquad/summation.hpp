#ifndef BESSELQUAD_SUMMATION_HPP
#define BESSELQUAD_SUMMATION_HPP

#include <cmath>
#include <complex>

namespace besselquad {

// Neumaier's variant of Kahan summation. The result depends only on the
// order in which terms are added, so a fixed order gives bit-identical sums.
class NeumaierSum {
public:
    void add(double x) noexcept {
        const double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x))
            comp_ += (sum_ - t) + x;
        else
            comp_ += (x - t) + sum_;
        sum_ = t;
    }
    double value() const noexcept { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

class ComplexNeumaierSum {
public:
    void add(std::complex<double> z) noexcept {
        re_.add(z.real());
        im_.add(z.imag());
    }
    ComplexNeumaierSum& operator+=(std::complex<double> z) noexcept {
        add(z);
        return *this;
    }
    std::complex<double> value() const noexcept { return {re_.value(), im_.value()}; }

private:
    NeumaierSum re_;
    NeumaierSum im_;
};

} // namespace besselquad

#endif // BESSELQUAD_SUMMATION_HPP
