#pragma once

#include <string>

#include "pwidth/chartab.hpp"

namespace pw {

// Line-oriented character table format (extension .ctbl, UTF-8, LF):
//
//   group <name>
//   order <N>
//   exponent <e>
//   classes <k>
//   class <name> size <s> order <o> inv <j> pow <p>:<j> [pow ...]   (k lines)
//   irr <entry>;<entry>;...                                         (k lines)
//
// Class indices j are 0-based positions in the class list. A character
// entry is c0,c1,...,c_{phi(d)-1}@d: the coefficients of the value over
// conductor d, rationals written num/den.

// Parses and validates (class equation, both orthogonality relations,
// power maps for every prime dividing the exponent). Throws pw::error with
// a line reference on syntax problems and the violated relation otherwise.
CharTable parse_table(const std::string& text);

CharTable load_table(const std::string& path);

// Canonical form: classes sorted by (element order, descending size, name),
// characters by (degree, value columns); byte-identical across runs, and
// serialize(parse(serialize(t))) == serialize(t).
std::string serialize_table(const CharTable& t);

void save_table(const CharTable& t, const std::string& path);

} // namespace pw
