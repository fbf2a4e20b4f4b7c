#pragma once

// Randomised property checks shared by the unit suite (small counts) and the
// acceptance binary (full counts). Each check runs a number of generated
// cases and records the first counterexample.

#include <cstdint>
#include <string>

namespace prop {

struct Report {
  int cases = 0;
  int failures = 0;
  std::string firstFailure;

  void check(bool ok, const std::string& what) {
    if (ok) return;
    if (failures++ == 0) firstFailure = what;
  }
  bool ok() const { return failures == 0 && cases > 0; }
  std::string summary() const;
};

/// Identity, unit, associativity and left-bias laws, oneTP touching one
/// child and allTU child counts, each on `trees` fixture trees.
Report combinatorLaws(std::uint64_t seed, int trees);

/// oncetd/oncebu apply exactly once, at the preorder/postorder-first match.
Report traversalOrder(std::uint64_t seed, int trees);

/// aboveTP rewrites the deepest candidate ancestor of a planted focus.
Report aboveDeepest(std::uint64_t seed, int trees);

/// freeNames, boundTypedNames and freeTypedNames against the oracles.
Report joosNameAnalysis(std::uint64_t seed, int methods);
Report miniletNameAnalysis(std::uint64_t seed, int programs);

/// checkExtractable fails iff the fragment returns or assigns a free name.
Report joosCheckOracle(std::uint64_t seed, int programs);

/// Successful JOOS extractions match the expected program built directly
/// (postconditions a-e), leave no focus and pass staticCheck; failures are
/// declared errors with the input unchanged. `successes` receives the number
/// of successful extractions.
Report joosExtraction(std::uint64_t seed, int attempts, int* successes);

/// HasReturn, AssignsFreeVariable and NameClash rejections, `perKind`
/// fixtures each, with the input byte-identical afterwards.
Report joosRejections(std::uint64_t seed, int perKind);

/// Extraction into the innermost enclosing let on generated closed
/// programs, with equal evaluation before and after. Stops after
/// `successes` successful extractions.
Report miniletExtraction(std::uint64_t seed, int successes);

/// Extraction on a fixed three-level nesting fixture lands in the innermost
/// let and leaves the outer two untouched.
Report miniletNesting();

/// parse(pretty(p)) == p and pretty is a fixpoint of pretty . parse.
Report joosRoundTrip(std::uint64_t seed, int programs);
Report miniletRoundTrip(std::uint64_t seed, int programs);

}  // namespace prop
