#ifndef UTURAN_ERRORS_HH
#define UTURAN_ERRORS_HH

#include <stdexcept>
#include <string>

namespace uturan
{
    /// Input that violates a structural invariant: bad vertex index, repeated
    /// vertex, non-permutation ordering, unparseable file, and so on.
    class MalformedInput : public std::runtime_error
    {
    public:
        explicit MalformedInput(const std::string & what) :
            std::runtime_error(what)
        {
        }
    };

    /// An exhaustive search was asked to run above its configured size cap.
    class CapExceeded : public std::runtime_error
    {
    public:
        explicit CapExceeded(const std::string & what) :
            std::runtime_error(what)
        {
        }
    };

    /// A numeric argument outside the operation's precondition.
    class InvalidArgument : public std::invalid_argument
    {
    public:
        explicit InvalidArgument(const std::string & what) :
            std::invalid_argument(what)
        {
        }
    };
}

#endif
