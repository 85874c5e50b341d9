#pragma once

#include <string>

#include "manin/models.hpp"
#include "manin/quasi_triple.hpp"

namespace manin::cli {

/// Parse failure with position information; maps to exit code 2.
struct ParseError : std::runtime_error {
    ParseError(std::string what, int line = 0, int column = 0)
        : std::runtime_error(std::move(what)), line(line), column(column) {}
    int line, column;
};

struct AlgebraFile {
    int format_version = 1;
    models::AlgebraModel model;
    std::string digest;  // fnv1a-64 of the raw bytes
    std::string path;
};

/// Reads and validates the shape of an algebra file (indices in range,
/// rationals exact, matrices rectangular). Mathematical axioms are not
/// checked here; they are report material.
AlgebraFile load_algebra_file(const std::string& path);
AlgebraFile parse_algebra_json(const std::string& text, const std::string& path);

/// Serializes an algebra (with optional form and representation) in the file
/// schema; deterministic field order, LF line endings.
std::string algebra_to_json(const models::AlgebraModel& model);

std::string fnv1a64_hex(const std::string& bytes);

/// Twist spec grammar: "ei^ej:p/q" terms joined by commas.
Twist parse_twist_spec(const std::string& spec, const BasedSpace& space);

}  // namespace manin::cli
