#pragma once

// Argument parsing and verb dispatch for the `linset` command-line tool.

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "linset/finitefield.hpp"
#include "linset/projline.hpp"
#include "linset/qpoly.hpp"
#include "linset/report.hpp"

namespace linset {

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitBudget = 2;
inline constexpr int kExitFalsified = 3;

// An integer encoding or "g^k" for a power of the field generator.
FElem parse_element(const FieldCtx& F, std::string_view text);

// Coefficient list "a0,...,a(n-1)" or one of: trace, gabidulin,
// pseudoregulus:s, sheekey:delta, ltz:s,delta.
QPoly parse_poly_arg(const FieldCtx& F, std::string_view text);

// "x,y,...;x,y,..." as a list of vectors of the given length.
std::vector<Vec> parse_vectors(const FieldCtx& F, std::string_view text, std::size_t length);

// Modulus coefficients "c0,c1,...".
std::vector<std::uint32_t> parse_modulus(std::string_view text);

// Process exit code for a finished report: falsification wins over `code`.
int exit_code(const Report& report, int code = kExitOk);

// Runs one command line. Reports go to `out` (or --out), diagnostics to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace linset
