#pragma once

// Strategies over the fixture algebra and a random family of them for the
// law suites.

#include <memory>
#include <random>

#include "fixture.hpp"
#include "genref/strategy.hpp"

namespace fx {

using namespace genref::strategy;

inline TP incLeaf() {
  return monoTP<Tree>([](const TreePtr& t) -> std::optional<Term> {
    if (auto l = genref::term::as<Leaf>(t)) return Term(leaf(l->value() + 1));
    return std::nullopt;
  });
}

/// incLeaf on leaves, identity elsewhere.
inline TP incLeafOrId() { return choiceTP(incLeaf(), idTP()); }

inline TU<std::int64_t> leafValue() {
  return monoTU<Tree>([](const TreePtr& t) -> std::optional<std::int64_t> {
    if (auto l = genref::term::as<Leaf>(t)) return l->value();
    return std::nullopt;
  });
}

inline TP swapNode() {
  return monoTP<Tree>([](const TreePtr& t) -> std::optional<Term> {
    if (auto n = genref::term::as<Node>(t)) return Term(node(n->right(), n->left()));
    return std::nullopt;
  });
}

inline TP tagWith(std::string label) {
  return monoTP<Tree>([label](const TreePtr& t) -> std::optional<Term> {
    return Term(tagged(label, t));
  });
}

/// Succeeds only on leaves whose value is odd.
inline TP doubleOddLeaf() {
  return monoTP<Tree>([](const TreePtr& t) -> std::optional<Term> {
    auto l = genref::term::as<Leaf>(t);
    if (!l || l->value() % 2 == 0) return std::nullopt;
    return Term(leaf(l->value() * 2));
  });
}

/// Wraps `s` so every successful application bumps `count`.
inline TP counting(TP s, std::shared_ptr<int> count) {
  return TP([s = std::move(s), count](const Term& t) -> std::optional<Term> {
    auto r = s(t);
    if (r) ++*count;
    return r;
  });
}

/// A random strategy from a small grammar of combinators over fixture
/// rewrites.
inline TP randomTP(std::mt19937_64& rng, int depth) {
  std::uniform_int_distribution<int> pick(0, depth > 0 ? 11 : 5);
  switch (pick(rng)) {
    case 0:
      return idTP();
    case 1:
      return failTP();
    case 2:
      return incLeaf();
    case 3:
      return swapNode();
    case 4:
      return doubleOddLeaf();
    case 5:
      return tagWith("s");
    case 6:
      return seqTP(randomTP(rng, depth - 1), randomTP(rng, depth - 1));
    case 7:
      return choiceTP(randomTP(rng, depth - 1), randomTP(rng, depth - 1));
    case 8:
      return allTP(randomTP(rng, depth - 1));
    case 9:
      return oneTP(randomTP(rng, depth - 1));
    case 10:
      return oncetdTP(randomTP(rng, depth - 1));
    default:
      return oncebuTP(randomTP(rng, depth - 1));
  }
}

/// Same success and structurally equal results.
inline bool sameOutcome(const std::optional<Term>& a, const std::optional<Term>& b) {
  if (a.has_value() != b.has_value()) return false;
  return !a || genref::term::structurallyEqual(*a, *b);
}

}  // namespace fx
