#ifndef ZFGD_ERRORS_HH
#define ZFGD_ERRORS_HH

#include <cstddef>
#include <stdexcept>
#include <string>

namespace zfgd
{
    /// Malformed user input: graph text, matrices, sequences, arguments.
    class InputError : public std::runtime_error
    {
        public:
            using std::runtime_error::runtime_error;
    };

    class ParseError : public InputError
    {
        public:
            ParseError(const std::string & what, std::size_t offset) :
                InputError(what + " (at byte offset " + std::to_string(offset) + ")"),
                _offset(offset)
            {
            }

            auto offset() const -> std::size_t { return _offset; }

        private:
            std::size_t _offset;
    };

    /// A sequence containing a repeated or out-of-range vertex. Distinct from a
    /// well-formed sequence that merely fails its gain condition.
    class SequenceError : public InputError
    {
        public:
            using InputError::InputError;
    };

    /// Problem too large for an exact solver under the configured cap.
    class CapExceeded : public std::runtime_error
    {
        public:
            using std::runtime_error::runtime_error;
    };

    /// Two independent computations disagreed. Always a solver bug.
    class InternalInconsistency : public std::logic_error
    {
        public:
            using std::logic_error::logic_error;
    };
}

#endif
