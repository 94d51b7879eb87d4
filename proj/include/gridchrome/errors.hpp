#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gridchrome
{
    /// Base class for every error raised by the library.
    class Error : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    /// Malformed or out-of-range input (bad position, bad color, bad dims).
    class InputError : public Error
    {
    public:
        using Error::Error;
    };

    /// Coloring text that does not follow the `m n k` + matrix format.
    class ParseError : public InputError
    {
    public:
        ParseError(const std::string & message, std::size_t line, std::size_t column);

        auto line() const noexcept -> std::size_t { return _line; }
        auto column() const noexcept -> std::size_t { return _column; }

    private:
        std::size_t _line, _column;
    };

    /// Input that is well formed but outside what an operation covers
    /// (a construction precondition, or grids too small for a closed form).
    class UnsupportedInput : public InputError
    {
    public:
        using InputError::InputError;
    };

    /// grid_chromatic asked about a grid with a dimension below 2.
    class OutOfTableError : public UnsupportedInput
    {
    public:
        using UnsupportedInput::UnsupportedInput;
    };

    /// A node, time, or state budget ran out before the search finished.
    /// This is never an answer: the instance is undecided.
    class ResourceError : public Error
    {
    public:
        using Error::Error;
    };

    /// Witness search for a constructive answer hit its limit. Retrying with
    /// a larger budget or another seed may succeed.
    class WitnessTimeout : public ResourceError
    {
    public:
        using ResourceError::ResourceError;
    };

    /// Two engines disagreed, or an engine produced an invalid witness.
    class ConsistencyError : public Error
    {
    public:
        using Error::Error;
    };
}
