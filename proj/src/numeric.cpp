#include <mzvkit/numeric.hpp>

#include <boost/math/constants/constants.hpp>
#include <cstdio>
#include <sstream>

namespace mzvkit
{

Real to_real(const Rational &q)
{
    return Real(q.get_num().get_str()) / Real(q.get_den().get_str());
}

Real pi()
{
    static const Real value = boost::math::constants::pi<Real>();
    return value;
}

Real tolerance_for(int prec)
{
    return boost::multiprecision::pow(Real(10), -prec);
}

std::string to_decimal(const Real &x, int digits)
{
    std::ostringstream os;
    os.precision(digits);
    os << std::fixed << x;
    return os.str();
}

std::string to_sci(const Real &x)
{
    if (x == 0) {
        return "0";
    }
    std::ostringstream os;
    os.precision(3);
    os << std::scientific << x;
    return os.str();
}

Real abs(const Complex &z)
{
    return boost::multiprecision::sqrt(z.re * z.re + z.im * z.im);
}

Complex i_unit()
{
    return Complex(Real(0), Real(1));
}

Complex exp(const Complex &z)
{
    const Real m = boost::multiprecision::exp(z.re);
    return Complex(m * boost::multiprecision::cos(z.im), m * boost::multiprecision::sin(z.im));
}

std::string to_string(const Complex &z, int digits)
{
    std::ostringstream os;
    os.precision(digits);
    os << std::scientific << z.re;
    if (z.im != 0) {
        os << (z.im < 0 ? " - " : " + ") << boost::multiprecision::abs(z.im) << "*i";
    }
    return os.str();
}

} // namespace mzvkit
