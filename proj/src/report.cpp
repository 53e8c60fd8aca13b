#include <mzvkit/report.hpp>

namespace mzvkit
{

std::string render(const CheckReport &r)
{
    std::string line = r.name;
    if (!r.params.empty()) {
        line += " " + r.params;
    }
    return line + " residual=" + to_sci(r.residual) + " tol=" + to_sci(r.tolerance) + (r.pass() ? " PASS" : " FAIL");
}

} // namespace mzvkit
