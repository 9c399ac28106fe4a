#pragma once

#include <stdexcept>
#include <string>

namespace convexcalc {

// Base class for every error the engine raises on bad input or a violated
// precondition.  Callers that only want pass/fail semantics can catch this.
struct engine_error : std::runtime_error {
    explicit engine_error(const std::string& what) : std::runtime_error(what) {}
};

struct zero_vector_error : engine_error {
    zero_vector_error() : engine_error("slope from zero vector (0,0)") {}
};

struct overflow_error : engine_error {
    explicit overflow_error(const std::string& op)
        : engine_error("integer overflow in " + op) {}
};

struct equal_slopes_error : engine_error {
    explicit equal_slopes_error(const std::string& ctx)
        : engine_error("slopes must differ: " + ctx) {}
};

struct odd_count_error : engine_error {
    odd_count_error() : engine_error("intersection counts must be even") {}
};

struct not_standard_error : engine_error {
    explicit not_standard_error(const std::string& why)
        : engine_error("torus is not a standard neighborhood boundary: " + why) {}
};

struct unequal_counts_error : engine_error {
    unequal_counts_error()
        : engine_error("cut-and-round requires equal intersection counts (3*m2+1 == 5*m3+1)") {}
};

struct unsupported_frame_pair_error : engine_error {
    explicit unsupported_frame_pair_error(const std::string& pair)
        : engine_error("no supported transport between frames: " + pair) {}
};

struct bad_boundary_count_error : engine_error {
    explicit bad_boundary_count_error(const std::string& why)
        : engine_error("pants classification needs exactly two endpoints per boundary: " + why) {}
};

struct invalid_dividing_set_error : engine_error {
    explicit invalid_dividing_set_error(const std::string& why)
        : engine_error("invalid dividing set: " + why) {}
};

struct parse_error : engine_error {
    parse_error(int line, const std::string& why)
        : engine_error("line " + std::to_string(line) + ": " + why), line_number(line) {}
    explicit parse_error(const std::string& why) : engine_error(why), line_number(0) {}
    int line_number;
};

} // namespace convexcalc
