#pragma once

#include <string>
#include <string_view>

#include "dmaxsat/formula.hpp"

namespace dmaxsat {

/// Circuit text: a "(scope N)" header followed by one s-expression over
/// true, false, xK, (not e), (and e e ...), (or e e ...). n-ary and/or fold
/// right. ';' starts a comment running to end of line.
///
/// Throws ParseError on malformed text and ScopeError when a variable index
/// exceeds the declared scope.
Formula parse_circuit(std::string_view text);

/// Canonical form: header line, then the expression on one line with binary
/// and/or only. parse_circuit(print_circuit(f)) == f.
std::string print_circuit(const Formula& f);

/// DIMACS CNF. The result is the right-folded conjunction of right-folded
/// clause disjunctions with the header's variable count as scope. No clauses
/// gives true; an empty clause gives false.
Formula parse_dimacs(std::string_view text);

enum class InputFormat { Circuit, Dimacs };

/// Guesses from the first meaningful token: "(" means circuit, "p"/"c" DIMACS.
InputFormat sniff_format(std::string_view text);

Formula parse_formula(std::string_view text, InputFormat format);

}  // namespace dmaxsat
