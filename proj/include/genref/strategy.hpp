#pragma once

// Generic function combinators over the term protocol.
//
// A TP is a partial type-preserving rewrite, a TU<A> a partial query with a
// fixed result type. Failure is an empty optional and is ordinary control
// flow. Strategies are immutable values backed by shared closures, so copies
// are cheap and safe to apply from several threads at once.

#include <functional>
#include <memory>
#include <optional>
#include <stdexcept>
#include <type_traits>
#include <utility>
#include <variant>
#include <vector>

#include "genref/term.hpp"

namespace genref::strategy {

using term::Sort;
using term::Term;

using Unit = std::monostate;

class TP {
 public:
  using Fn = std::function<std::optional<Term>(const Term&)>;

  explicit TP(Fn fn) : fn_(std::make_shared<const Fn>(std::move(fn))) {}

  std::optional<Term> operator()(const Term& t) const { return (*fn_)(t); }

 private:
  std::shared_ptr<const Fn> fn_;
};

template <class A>
class TU {
 public:
  using Result = A;
  using Fn = std::function<std::optional<A>(const Term&)>;

  explicit TU(Fn fn) : fn_(std::make_shared<const Fn>(std::move(fn))) {}

  std::optional<A> operator()(const Term& t) const { return (*fn_)(t); }

 private:
  std::shared_ptr<const Fn> fn_;
};

template <class A>
struct Monoid {
  A empty;
  std::function<A(A, A)> combine;
};

template <class T>
Monoid<std::vector<T>> listMonoid() {
  return {{}, [](std::vector<T> a, std::vector<T> b) {
            a.insert(a.end(), std::make_move_iterator(b.begin()), std::make_move_iterator(b.end()));
            return a;
          }};
}

// --- application -----------------------------------------------------------

/// Applies `s`; a success that changes the sort is a broken strategy and
/// throws std::logic_error.
std::optional<Term> applyTP(const TP& s, const Term& t);

template <class A>
std::optional<A> applyTU(const TU<A>& q, const Term& t) {
  return q(t);
}

// --- polymorphic basics ----------------------------------------------------

TP idTP();
TP failTP();

template <class A>
TU<A> failTU() {
  return TU<A>([](const Term&) { return std::optional<A>{}; });
}

template <class A>
TU<A> constTU(A a) {
  return TU<A>([a = std::move(a)](const Term&) { return std::optional<A>{a}; });
}

TP seqTP(TP first, TP second);

/// Rewrites with `s`, then queries the rewritten term.
template <class A>
TU<A> seqTU(TP s, TU<A> q) {
  return TU<A>([s = std::move(s), q = std::move(q)](const Term& t) -> std::optional<A> {
    auto r = s(t);
    if (!r) return std::nullopt;
    return q(*r);
  });
}

/// Runs `q`, hands its result to `k`, and applies the strategy `k` returns to
/// the same input.
template <class A, class K>
auto letTU(TU<A> q, K k) -> std::invoke_result_t<K, const A&> {
  using Out = std::invoke_result_t<K, const A&>;
  using B = typename Out::Result;
  return Out([q = std::move(q), k = std::move(k)](const Term& t) -> std::optional<B> {
    auto a = q(t);
    if (!a) return std::nullopt;
    return k(*a)(t);
  });
}

template <class A, class K>
TP letTP(TU<A> q, K k) {
  return TP([q = std::move(q), k = std::move(k)](const Term& t) -> std::optional<Term> {
    auto a = q(t);
    if (!a) return std::nullopt;
    return k(*a)(t);
  });
}

TP choiceTP(TP first, TP second);

template <class A>
TU<A> choiceTU(TU<A> first, TU<A> second) {
  return TU<A>([first = std::move(first), second = std::move(second)](const Term& t) {
    auto a = first(t);
    return a ? a : second(t);
  });
}

// --- one-layer traversal ---------------------------------------------------

TP allTP(TP s);
TP oneTP(TP s);

template <class A>
TU<A> allTU(Monoid<A> m, TU<A> q) {
  return TU<A>([m = std::move(m), q = std::move(q)](const Term& t) -> std::optional<A> {
    A acc = m.empty;
    for (const auto& c : t->children()) {
      auto r = q(c);
      if (!r) return std::nullopt;
      acc = m.combine(std::move(acc), std::move(*r));
    }
    return acc;
  });
}

template <class A>
TU<A> oneTU(TU<A> q) {
  return TU<A>([q = std::move(q)](const Term& t) -> std::optional<A> {
    for (const auto& c : t->children()) {
      if (auto r = q(c)) return r;
    }
    return std::nullopt;
  });
}

// --- ad-hoc update ---------------------------------------------------------

namespace detail {

template <class R>
std::optional<Term> eraseResult(R r) {
  if (!r) return std::nullopt;
  return Term(*r);
}

template <class N>
std::shared_ptr<const N> typedNode(const Term& t) {
  auto n = term::as<N>(t);
  if (!n) {
    throw std::logic_error("node " + std::string(t->tag()) + " reports sort " +
                           std::string(t->sort().name()) + " but is not of that node class");
  }
  return n;
}

}  // namespace detail

/// Sort-dispatched update: `special` runs on terms of sort `s`, `deflt` on
/// everything else.
TP adhocTP(TP deflt, Sort s, std::function<std::optional<Term>(const Term&)> special);

template <class A>
TU<A> adhocTU(TU<A> deflt, Sort s, std::function<std::optional<A>(const Term&)> special) {
  return TU<A>([deflt = std::move(deflt), s, special = std::move(special)](const Term& t) {
    return t->sort() == s ? special(t) : deflt(t);
  });
}

/// Typed ad-hoc case. N is the node base class of one sort (it exposes
/// `static constexpr Sort kSort`); `special` receives a
/// `std::shared_ptr<const N>` and returns an optional node of that sort.
template <class N, class F>
TP adhocTP(TP deflt, F special) {
  return adhocTP(std::move(deflt), N::kSort,
                 [special = std::move(special)](const Term& t) -> std::optional<Term> {
                   return detail::eraseResult(special(detail::typedNode<N>(t)));
                 });
}

template <class N, class A, class F>
TU<A> adhocTU(TU<A> deflt, F special) {
  return adhocTU<A>(std::move(deflt), N::kSort,
                    [special = std::move(special)](const Term& t) -> std::optional<A> {
                      return special(detail::typedNode<N>(t));
                    });
}

/// Lifts a sort-specific function with failure as the generic default.
template <class N, class F>
TP monoTP(F f) {
  return adhocTP<N>(failTP(), std::move(f));
}

template <class N, class F>
auto monoTU(F f) {
  using R = std::invoke_result_t<F, const std::shared_ptr<const N>&>;
  using A = typename R::value_type;
  return adhocTU<N, A>(failTU<A>(), std::move(f));
}

// --- derived combinators ---------------------------------------------------

/// Runs both queries on the same input and combines their results with `o`.
template <class O, class A, class B>
auto combTU(O o, TU<A> q1, TU<B> q2) {
  using C = std::invoke_result_t<O, A, B>;
  return TU<C>([o = std::move(o), q1 = std::move(q1), q2 = std::move(q2)](
                   const Term& t) -> std::optional<C> {
    auto a = q1(t);
    if (!a) return std::nullopt;
    auto b = q2(t);
    if (!b) return std::nullopt;
    return o(std::move(*a), std::move(*b));
  });
}

template <class A>
TU<Unit> voidTU(TU<A> q) {
  return TU<Unit>([q = std::move(q)](const Term& t) -> std::optional<Unit> {
    if (!q(t)) return std::nullopt;
    return Unit{};
  });
}

/// Recursive strategy definitions. `body` receives the strategy being
/// defined; the knot is tied through a weak reference so the result owns no
/// cycle.
TP fixTP(const std::function<TP(const TP&)>& body);

template <class A>
TU<A> fixTU(const std::function<TU<A>(const TU<A>&)>& body) {
  auto cell = std::make_shared<std::optional<TU<A>>>();
  std::weak_ptr<std::optional<TU<A>>> weak = cell;
  TU<A> self([weak](const Term& t) { return (**weak.lock())(t); });
  *cell = body(self);
  return TU<A>([cell](const Term& t) { return (**cell)(t); });
}

/// Once top-down: the first node in preorder where `s` succeeds.
TP oncetdTP(TP s);
/// Once bottom-up: the first node in postorder where `s` succeeds.
TP oncebuTP(TP s);

template <class A>
TU<A> oncetdTU(TU<A> s) {
  return fixTU<A>([s](const TU<A>& self) { return choiceTU(s, oneTU(self)); });
}

template <class A>
TU<A> oncebuTU(TU<A> s) {
  return fixTU<A>([s](const TU<A>& self) { return choiceTU(oneTU(self), s); });
}

/// Applies `s` at the deepest node where it succeeds and where `below`
/// succeeds somewhere strictly inside that node's subtree.
TP aboveTP(TP s, TU<Unit> below);

/// Top-down search threading an environment. At each node `select(e)` is
/// tried first; otherwise the environment is updated with `update(e)` (an
/// update failure keeps `e`) and the children are searched left to right.
template <class E, class Update, class Select>
auto propagateTU(E e0, Update update, Select select) {
  using Q = std::invoke_result_t<Select, const E&>;
  using A = typename Q::Result;
  using Step = std::function<TU<A>(const E&)>;

  auto step = std::make_shared<Step>();
  std::weak_ptr<Step> weak = step;
  *step = [update = std::move(update), select = std::move(select), weak](const E& e) {
    TU<E> extended = choiceTU<E>(update(e), constTU(e));
    return choiceTU<A>(select(e), letTU(std::move(extended), [weak](const E& inner) {
                      return oneTU((*weak.lock())(inner));
                    }));
  };
  return TU<A>([step, e0 = std::move(e0)](const Term& t) { return (*step)(e0)(t); });
}

}  // namespace genref::strategy
