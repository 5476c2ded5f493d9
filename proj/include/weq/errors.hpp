#pragma once

#include <stdexcept>
#include <string>

namespace weq {

/// Base class of every error thrown by this library.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A value is outside the mathematical domain of an operation
/// (empty word where a nonempty one is required, zero polynomial, ...).
struct domain_error : error {
    using error::error;
};

/// Dimension or arity mismatch between operands.
struct shape_error : error {
    using error::error;
};

/// An unknown index is out of range.
struct index_error : error {
    using error::error;
};

/// A word contains a letter < 1.
struct invalid_alphabet_error : error {
    using error::error;
};

/// A polynomial is not the image of any word (gap or nonpositive coefficient).
struct not_a_word_image_error : error {
    using error::error;
};

/// A morphism claimed to solve an equation does not.
struct not_a_solution_error : error {
    using error::error;
};

/// A theorem's hypothesis is not met by the given inputs.
struct hypothesis_error : error {
    using error::error;
};

/// An equation with an empty side where a leading unknown is needed.
struct degenerate_equation_error : error {
    using error::error;
};

/// Every 2x2 minor of the pair's s-matrix vanishes identically, so the
/// equations are equivalent on solutions of rank n-1.
struct equations_equivalent_error : error {
    using error::error;
};

/// Total period lengths of the two sides differ.
struct lengths_incompatible_error : error {
    using error::error;
};

/// An enumeration would exceed the configured budget.
struct budget_error : error {
    using error::error;
};

/// Syntax error in a DSL file; carries a 1-based source position.
struct parse_error : error {
    int line;
    int column;
    parse_error(const std::string& msg, int line_, int column_)
        : error(msg + " (line " + std::to_string(line_) + ", column " + std::to_string(column_) + ")"),
          line(line_),
          column(column_) {}
};

} // namespace weq
