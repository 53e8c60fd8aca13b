#ifndef MZVKIT_ERRORS_HPP
#define MZVKIT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace mzvkit
{

// Root of the library's exception hierarchy. Every error raised by a module
// derives from this so the CLI can render "<module>: <reason>" uniformly.
class Error : public std::runtime_error
{
public:
    Error(std::string module, const std::string &what)
        : std::runtime_error(what), module_(std::move(module))
    {
    }

    const std::string &module() const noexcept { return module_; }

private:
    std::string module_;
};

// Argument outside the mathematical domain of an operation (divergent MZV,
// non-H^1 word, empty index where a non-empty one is required, ...).
class DomainError : public Error
{
public:
    using Error::Error;
};

// Integer argument outside an allowed range (split position, ...).
class RangeError : public Error
{
public:
    using Error::Error;
};

// Tuple lengths that must agree do not.
class ShapeError : public Error
{
public:
    using Error::Error;
};

// Scalars from incompatible rings (e.g. series truncated at different orders).
class RingError : public Error
{
public:
    using Error::Error;
};

// A pairing or product would need terms beyond the available degree.
class TruncationError : public Error
{
public:
    using Error::Error;
};

// A formal symbol was not assigned a value before numeric evaluation.
class BindingError : public Error
{
public:
    using Error::Error;
};

// Malformed text input; line is 1-based, 0 when not applicable.
class ParseError : public Error
{
public:
    ParseError(std::string module, const std::string &what, int line = 0)
        : Error(std::move(module), what), line_(line)
    {
    }

    int line() const noexcept { return line_; }

private:
    int line_;
};

} // namespace mzvkit

#endif
