#ifndef TREESPACE_ERRORS_HPP
#define TREESPACE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace treespace {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Two clades that are neither nested nor disjoint.
struct CompatibilityError : Error { using Error::Error; };
// More clades than a tree on n leaves can carry.
struct CardinalityError : Error { using Error::Error; };
// Argument outside the supported numeric range.
struct RangeError : Error { using Error::Error; };
// Operation requires a binary tree.
struct ArityError : Error { using Error::Error; };
// Blocks of an ordered partition do not cover the ground set.
struct PartitionError : Error { using Error::Error; };
// Leaf label not permitted in this position.
struct LabelError : Error { using Error::Error; };
// Malformed input value (non-permutation order, bad clade, ...).
struct InputError : Error { using Error::Error; };
// Lookup of a vertex or chamber that is not present.
struct KeyError : Error { using Error::Error; };
// Set operation across complexes with different vertex universes.
struct UniverseError : Error { using Error::Error; };
// Exact integer computation would overflow.
struct ArithmeticError : Error { using Error::Error; };

// Newick syntax or validation failure; carries the byte offset.
struct ParseError : Error {
    std::size_t offset;
    ParseError(const std::string& what, std::size_t at)
        : Error(what + " (byte " + std::to_string(at) + ")"), offset(at) {}
};

}  // namespace treespace

#endif
