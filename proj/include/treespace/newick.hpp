#ifndef TREESPACE_NEWICK_HPP
#define TREESPACE_NEWICK_HPP

#include <string>
#include <string_view>

#include "treespace/trees.hpp"

namespace treespace {

// Rooted Newick over integer leaf labels 1..n, each exactly once.  Branch
// lengths are accepted and ignored; unary nodes are suppressed.  The clade
// set is read off the internal nodes strictly below the root.
Tree parse_newick(std::string_view text);

// Canonical printing: children sorted by their smallest leaf label, no
// branch lengths.  parse_newick(to_newick(t)) == t.
std::string to_newick(const Tree& t);

}  // namespace treespace

#endif
