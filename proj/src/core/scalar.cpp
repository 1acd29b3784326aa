#include "core/scalar.hpp"

#include <cmath>

namespace orifold {

std::string Scalar::str() const {
    if (im_.is_zero()) return re_.str();
    std::string s = re_.str();
    if (im_.sign() >= 0) s += "+";
    s += im_.str();
    s += "*i";
    return s;
}

double Scalar::abs_double() const {
    double x = re_.to_double(), y = im_.to_double();
    return std::hypot(x, y);
}

}  // namespace orifold
