#ifndef MZVKIT_REPORT_HPP
#define MZVKIT_REPORT_HPP

#include <string>

#include <mzvkit/numeric.hpp>

namespace mzvkit
{

struct CheckReport
{
    std::string name;
    std::string params;
    Real residual;
    Real tolerance;

    bool pass() const { return residual < tolerance; }
};

// "<name> <params> residual=<d> tol=<d> PASS|FAIL"
std::string render(const CheckReport &r);

} // namespace mzvkit

#endif
