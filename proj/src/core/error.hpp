#pragma once

#include <stdexcept>
#include <string>

namespace ordpat {

/// Error categories surfaced by the library. Each maps 1:1 onto a status
/// code of the public C API.
enum class errc {
    length,           // window/series length or d outside the accepted range
    tie,              // tied values where a tie-free window is required
    invalid_pattern,  // tuple is not a valid pattern of its kind
    input,            // NaN or infinity in input data
    range,            // code or argument outside its numeric range
    overflow,         // d! exceeds the 64-bit code range
    mixed_config,     // code sequence does not match the given configuration
    empty,            // empty distribution
    length_mismatch,  // paired series of unequal length
    io,               // file not readable
    parse,            // malformed CSV content or cell
    empty_column,     // selected CSV column has no data rows
};

class error : public std::runtime_error {
public:
    error(errc code, std::string msg) : std::runtime_error(std::move(msg)), code_(code) {}

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void raise(errc code, std::string msg) {
    throw error(code, std::move(msg));
}

}  // namespace ordpat
