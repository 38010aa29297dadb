#pragma once

// Expression language: juxtaposition is operator application onto the
// rightmost `delta` (or `s[n]`), e.g. "r (w dr) delta", "-(m+1)/2 * D^2 delta".
// A parenthesized group without `delta` is an operator template applied to
// whatever follows it.

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kernel.hpp"

namespace signumcalc {

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
  enum class Node { Delta, Signum, Apply, Scale, Sum, Neg, Hole };

  Node node = Node::Delta;
  std::size_t offset = 0;  // source span, for diagnostics
  std::size_t length = 0;
  Operator op = Operator::R;  // Apply
  unsigned power = 1;         // Apply
  DimScalar scale;            // Scale
  unsigned index = 0;         // Signum
  std::vector<ExprPtr> children;
};

/// Throws ParseError (or ArityError) with the byte offset of the failure.
ExprPtr parse(std::string_view input);

/// Structural rendering, e.g. "OpApply(Pow(dr,2), Delta)".
std::string describe(const Expr& e);

/// Applies operators innermost first. Kernel errors are rethrown with the
/// offending sub-expression quoted when `source` is given.
GeneralizedFunction evaluate(const Expr& e, std::string_view source = {});

GeneralizedFunction evaluate(std::string_view input);

/// Distributions: "c * D^n delta" terms in ascending n. Signumdistributions:
/// radial aliases "dr^n delta" (odd n) and "w dr^n delta" (even n). With m0,
/// coefficients are evaluated at that dimension.
std::string print_canonical(const GeneralizedFunction& g, std::optional<long> m0 = std::nullopt);

/// Basis form: "c * D^n delta" or "c * s[n]".
std::string print_basis(const GeneralizedFunction& g);

}  // namespace signumcalc
