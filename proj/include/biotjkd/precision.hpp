#ifndef BIOTJKD_PRECISION_HPP
#define BIOTJKD_PRECISION_HPP

#include <boost/multiprecision/mpfr.hpp>
#include <stdexcept>
#include <string>

namespace biotjkd {

// Arbitrary-precision real scalar. Precision (in decimal digits) is set per
// thread; every value constructed afterwards carries that precision.
using Real = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>,
                                            boost::multiprecision::et_off>;

struct Precision {
    unsigned decimal_digits;

    explicit Precision(unsigned digits = 90) : decimal_digits(digits) {
        if (digits < 30)
            throw std::invalid_argument("Precision: need at least 30 decimal digits, got " +
                                        std::to_string(digits));
    }
};

// Sets the thread-default working precision for the lifetime of the object.
class ScopedPrecision {
public:
    explicit ScopedPrecision(Precision p)
        : saved_(Real::default_precision()) {
        Real::default_precision(p.decimal_digits);
    }
    explicit ScopedPrecision(unsigned digits) : ScopedPrecision(Precision(digits)) {}
    ~ScopedPrecision() { Real::default_precision(saved_); }

    ScopedPrecision(const ScopedPrecision&) = delete;
    ScopedPrecision& operator=(const ScopedPrecision&) = delete;

private:
    unsigned saved_;
};

inline unsigned current_digits() { return static_cast<unsigned>(Real::default_precision()); }

inline Real mp_pi() {
    return 4 * atan(Real(1));
}

inline double to_d(const Real& x) { return x.convert_to<double>(); }

// 10^(-k) at the ambient precision.
inline Real pow10_neg(unsigned k) {
    return pow(Real(10), -static_cast<int>(k));
}

} // namespace biotjkd

#endif
