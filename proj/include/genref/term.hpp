#pragma once

// Uniform term protocol over typed node classes: sort identity, immediate
// children and reconstruction.

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace genref::term {

/// Identity of a syntactic category. Compared by name, so two sorts built
/// from the same literal are equal everywhere in the process.
class Sort {
 public:
  constexpr explicit Sort(std::string_view name) : name_(name) {}

  constexpr std::string_view name() const { return name_; }

  friend constexpr bool operator==(Sort a, Sort b) { return a.name_ == b.name_; }

 private:
  std::string_view name_;
};

/// Scalar payload carried by a node. Traversal never looks inside atoms.
using Atom = std::variant<std::string, std::int64_t>;

struct Position {
  int line = 0;
  int column = 0;

  friend auto operator<=>(const Position&, const Position&) = default;
};

/// 1-based, end-exclusive source region. Not part of structural equality.
struct Span {
  Position begin;
  Position end;

  bool known() const { return begin.line > 0; }
  friend bool operator==(const Span&, const Span&) = default;
};

std::string to_string(const Position& p);
std::string to_string(const Span& s);

class Node;
using Term = std::shared_ptr<const Node>;

class Node {
 public:
  virtual ~Node() = default;

  virtual Sort sort() const = 0;
  virtual std::string_view tag() const = 0;
  virtual std::vector<Term> children() const = 0;
  virtual std::vector<Atom> atoms() const { return {}; }

  /// Set for homogeneous list nodes, which accept any number of children of
  /// this sort.
  virtual std::optional<Sort> elementSort() const { return std::nullopt; }

  const Span& span() const { return span_; }
  void placeAt(Span span) { span_ = span; }

 protected:
  Node() = default;
  Node(const Node&) = default;
  Node& operator=(const Node&) = default;

  // Called with children already checked for count and sort.
  virtual std::shared_ptr<Node> remake(std::vector<Term> children) const = 0;

 private:
  friend Term rebuild(const Term& t, std::vector<Term> children);
  friend Term appendElement(const Term& list, Term element);

  Span span_;
};

enum class TermErrorKind { ArityMismatch, SortMismatch, NotAList };

class TermError : public std::logic_error {
 public:
  TermError(TermErrorKind kind, std::size_t slot, const std::string& what)
      : std::logic_error(what), kind_(kind), slot_(slot) {}

  TermErrorKind kind() const { return kind_; }
  std::size_t slot() const { return slot_; }

 private:
  TermErrorKind kind_;
  std::size_t slot_;
};

inline std::vector<Term> children(const Term& t) { return t->children(); }
inline Sort sortOf(const Term& t) { return t->sort(); }

/// Same node kind and atoms, with `children` in place of the old ones.
/// Throws TermError on a count or slot-sort mismatch.
Term rebuild(const Term& t, std::vector<Term> children);

/// A list node extended by one trailing element of the list's element sort.
Term appendElement(const Term& list, Term element);

bool structurallyEqual(const Term& a, const Term& b);

/// Preorder node count.
std::size_t size(const Term& t);

/// Indented dump: one line per node with tag and atoms, children indented
/// by two spaces.
std::string dump(const Term& t);

/// Typed view of a term; null when the dynamic node class differs.
template <class N>
std::shared_ptr<const N> as(const Term& t) {
  return std::dynamic_pointer_cast<const N>(t);
}

/// Typed view of a child slot. Throws TermError when the node class does not
/// fit, which only happens when a caller bypassed `rebuild`'s sort checks.
template <class N>
std::shared_ptr<const N> slot(const Term& t, std::size_t index) {
  auto typed = std::dynamic_pointer_cast<const N>(t);
  if (!typed) {
    throw TermError(TermErrorKind::SortMismatch, index,
                    "child " + std::to_string(index) + " has unexpected node kind " +
                        std::string(t ? t->tag() : "<null>"));
  }
  return typed;
}

template <class N>
std::vector<std::shared_ptr<const N>> slots(std::span<const Term> ts) {
  std::vector<std::shared_ptr<const N>> out;
  out.reserve(ts.size());
  for (std::size_t i = 0; i < ts.size(); ++i) out.push_back(slot<N>(ts[i], i));
  return out;
}

template <class N>
std::vector<Term> erase(const std::vector<std::shared_ptr<const N>>& ns) {
  return {ns.begin(), ns.end()};
}

/// Homogeneous list node. `Base` supplies the sort, `Self` the tag.
template <class Self, class Base, class Elem>
class ListNode : public Base {
 public:
  using Items = std::vector<std::shared_ptr<const Elem>>;

  explicit ListNode(Items items) : items_(std::move(items)) {}

  const Items& items() const { return items_; }
  std::vector<Term> children() const override { return erase(items_); }
  std::optional<Sort> elementSort() const override { return Elem::kSort; }

 protected:
  std::shared_ptr<Node> remake(std::vector<Term> cs) const override {
    return std::make_shared<Self>(slots<Elem>(cs));
  }

 private:
  Items items_;
};

/// Base for a sort. Node classes of one sort all derive from the same
/// SortBase instantiation, which typed strategies dispatch on.
template <const char* Name>
class SortBase : public Node {
 public:
  static constexpr Sort kSort{Name};
  Sort sort() const final { return kSort; }
};

}  // namespace genref::term
