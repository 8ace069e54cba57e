#ifndef BESSELQUAD_ERRORS_HPP
#define BESSELQUAD_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace besselquad {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
    /// Short stable tag used in CLI output ("PoleError", ...).
    virtual const char* kind() const noexcept = 0;
};

#define BESSELQUAD_DEFINE_ERROR(Name)                                  \
    class Name : public Error {                                        \
    public:                                                            \
        using Error::Error;                                            \
        const char* kind() const noexcept override { return #Name; }   \
    }

/// Argument sits exactly on a pole of a gamma factor.
BESSELQUAD_DEFINE_ERROR(PoleError);
/// Power or logarithm requested at the branch point.
BESSELQUAD_DEFINE_ERROR(BranchError);
/// A power series failed to meet its stopping rule within its term cap.
BESSELQUAD_DEFINE_ERROR(ConvergenceError);
/// Formula is undefined for this input; evaluate by another route.
BESSELQUAD_DEFINE_ERROR(DegenerateInput);
/// Argument outside the documented domain of an operation.
BESSELQUAD_DEFINE_ERROR(DomainError);
/// An integrand raised or returned a non-finite value at a quadrature node.
BESSELQUAD_DEFINE_ERROR(NodeEvaluationError);

#undef BESSELQUAD_DEFINE_ERROR

} // namespace besselquad

#endif // BESSELQUAD_ERRORS_HPP
