#include "genref/term.hpp"

#include <sstream>

namespace genref::term {

std::string to_string(const Position& p) {
  return std::to_string(p.line) + ":" + std::to_string(p.column);
}

std::string to_string(const Span& s) { return to_string(s.begin) + "-" + to_string(s.end); }

Term rebuild(const Term& t, std::vector<Term> newChildren) {
  const auto old = t->children();
  if (old.size() != newChildren.size()) {
    throw TermError(TermErrorKind::ArityMismatch, newChildren.size(),
                    std::string(t->tag()) + " has " + std::to_string(old.size()) +
                        " children, rebuild got " + std::to_string(newChildren.size()));
  }
  for (std::size_t i = 0; i < old.size(); ++i) {
    if (!newChildren[i] || newChildren[i]->sort() != old[i]->sort()) {
      throw TermError(TermErrorKind::SortMismatch, i,
                      std::string(t->tag()) + " slot " + std::to_string(i) + " expects " +
                          std::string(old[i]->sort().name()));
    }
  }
  auto made = t->remake(std::move(newChildren));
  made->span_ = t->span_;
  return made;
}

Term appendElement(const Term& list, Term element) {
  const auto elemSort = list->elementSort();
  if (!elemSort) {
    throw TermError(TermErrorKind::NotAList, 0, std::string(list->tag()) + " is not a list node");
  }
  auto cs = list->children();
  if (!element || element->sort() != *elemSort) {
    throw TermError(TermErrorKind::SortMismatch, cs.size(),
                    std::string(list->tag()) + " elements must be " +
                        std::string(elemSort->name()));
  }
  cs.push_back(std::move(element));
  auto made = list->remake(std::move(cs));
  made->span_ = list->span_;
  return made;
}

bool structurallyEqual(const Term& a, const Term& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->sort() != b->sort() || a->tag() != b->tag() || a->atoms() != b->atoms()) return false;
  const auto ca = a->children();
  const auto cb = b->children();
  if (ca.size() != cb.size()) return false;
  for (std::size_t i = 0; i < ca.size(); ++i) {
    if (!structurallyEqual(ca[i], cb[i])) return false;
  }
  return true;
}

std::size_t size(const Term& t) {
  std::size_t n = 1;
  for (const auto& c : t->children()) n += size(c);
  return n;
}

namespace {

void dumpInto(std::ostringstream& out, const Term& t, int depth) {
  out << std::string(static_cast<std::size_t>(depth) * 2, ' ') << t->tag();
  for (const auto& atom : t->atoms()) {
    if (const auto* s = std::get_if<std::string>(&atom)) {
      out << " \"" << *s << '"';
    } else {
      out << ' ' << std::get<std::int64_t>(atom);
    }
  }
  out << '\n';
  for (const auto& c : t->children()) dumpInto(out, c, depth + 1);
}

}  // namespace

std::string dump(const Term& t) {
  std::ostringstream out;
  dumpInto(out, t, 0);
  return out.str();
}

}  // namespace genref::term
