#pragma once

#include "ramsey/bipartite_colouring.hpp"
#include "ramsey/colouring.hpp"

#include <iosfwd>
#include <string>

namespace ramsey {

// Text formats. Complete graph: a header `n k` followed by one `u v c` line per
// edge with 0 <= u < v < n and 0 <= c <= k. Bipartite: `p q k` then `u v c` with
// u < p, v < q. Lines starting with '#' and blank lines are ignored. Every edge
// must appear exactly once. Colour ids are kept as written.
//
// Errors are reported as ParseError carrying the 1-based line number.

Colouring read_colouring(std::istream& in, const Capacity& capacity = {});
Colouring read_colouring_file(const std::string& path, const Capacity& capacity = {});
void write_colouring(std::ostream& out, const Colouring& c);

BipartiteColouring read_bipartite(std::istream& in, const Capacity& capacity = {});
BipartiteColouring read_bipartite_file(const std::string& path, const Capacity& capacity = {});
void write_bipartite(std::ostream& out, const BipartiteColouring& b);

} // namespace ramsey
