#pragma once

// Small binary-tree algebra for combinator tests: Leaf(int), Node(l, r) and
// Tagged(label, child), all of sort FixtureTree.

#include <cstdint>
#include <functional>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "genref/term.hpp"

namespace fx {

using genref::term::Term;

inline constexpr char kTree[] = "FixtureTree";

class Tree : public genref::term::SortBase<kTree> {};
using TreePtr = std::shared_ptr<const Tree>;

class Leaf final : public Tree {
 public:
  explicit Leaf(std::int64_t v) : value_(v) {}
  std::int64_t value() const { return value_; }
  std::string_view tag() const override { return "Leaf"; }
  std::vector<Term> children() const override { return {}; }
  std::vector<genref::term::Atom> atoms() const override { return {value_}; }

 protected:
  std::shared_ptr<genref::term::Node> remake(std::vector<Term>) const override {
    return std::make_shared<Leaf>(value_);
  }

 private:
  std::int64_t value_;
};

class Node final : public Tree {
 public:
  Node(TreePtr l, TreePtr r) : l_(std::move(l)), r_(std::move(r)) {}
  const TreePtr& left() const { return l_; }
  const TreePtr& right() const { return r_; }
  std::string_view tag() const override { return "Node"; }
  std::vector<Term> children() const override { return {l_, r_}; }

 protected:
  std::shared_ptr<genref::term::Node> remake(std::vector<Term> cs) const override {
    return std::make_shared<Node>(genref::term::slot<Tree>(cs[0], 0),
                                  genref::term::slot<Tree>(cs[1], 1));
  }

 private:
  TreePtr l_, r_;
};

class Tagged final : public Tree {
 public:
  Tagged(std::string label, TreePtr child) : label_(std::move(label)), child_(std::move(child)) {}
  const std::string& label() const { return label_; }
  const TreePtr& child() const { return child_; }
  std::string_view tag() const override { return "Tagged"; }
  std::vector<Term> children() const override { return {child_}; }
  std::vector<genref::term::Atom> atoms() const override { return {label_}; }

 protected:
  std::shared_ptr<genref::term::Node> remake(std::vector<Term> cs) const override {
    return std::make_shared<Tagged>(label_, genref::term::slot<Tree>(cs[0], 0));
  }

 private:
  std::string label_;
  TreePtr child_;
};

inline TreePtr leaf(std::int64_t v) { return std::make_shared<const Leaf>(v); }
inline TreePtr node(TreePtr l, TreePtr r) { return std::make_shared<const Node>(std::move(l), std::move(r)); }
inline TreePtr tagged(std::string label, TreePtr c) {
  return std::make_shared<const Tagged>(std::move(label), std::move(c));
}

// --- generators --------------------------------------------------------------

/// Random tree with leaves in [0, 9] and occasional tags from `labels`.
inline TreePtr randomTree(std::mt19937_64& rng, int depth,
                          const std::vector<std::string>& labels = {"a", "b"}) {
  std::uniform_int_distribution<int> pick(0, 9);
  const int r = pick(rng);
  if (depth <= 0 || r < 3) return leaf(pick(rng));
  if (r < 5 && !labels.empty()) {
    std::uniform_int_distribution<std::size_t> which(0, labels.size() - 1);
    return tagged(labels[which(rng)], randomTree(rng, depth - 1, labels));
  }
  return node(randomTree(rng, depth - 1, labels), randomTree(rng, depth - 1, labels));
}

// --- oracles -----------------------------------------------------------------

inline void preorder(const Term& t, std::vector<Term>& out) {
  out.push_back(t);
  for (const auto& c : t->children()) preorder(c, out);
}

inline void postorder(const Term& t, std::vector<Term>& out) {
  for (const auto& c : t->children()) postorder(c, out);
  out.push_back(t);
}

inline std::vector<Term> preorder(const Term& t) {
  std::vector<Term> out;
  preorder(t, out);
  return out;
}

inline std::vector<Term> postorder(const Term& t) {
  std::vector<Term> out;
  postorder(t, out);
  return out;
}

/// Rebuilds `t` with `f` applied to the node at pointer identity `target`.
inline Term replaceNode(const Term& t, const Term& target, const std::function<Term(const Term&)>& f) {
  if (t == target) return f(t);
  auto cs = t->children();
  for (auto& c : cs) c = replaceNode(c, target, f);
  return genref::term::rebuild(t, std::move(cs));
}

/// Path of nodes from `root` down to `target` (both included), empty if absent.
inline bool pathTo(const Term& root, const Term& target, std::vector<Term>& path) {
  path.push_back(root);
  if (root == target) return true;
  for (const auto& c : root->children()) {
    if (pathTo(c, target, path)) return true;
  }
  path.pop_back();
  return false;
}

}  // namespace fx
