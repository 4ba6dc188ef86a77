#ifndef CATFROB_CATEGORY_HPP
#define CATFROB_CATEGORY_HPP

#include <concepts>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "law_report.hpp"
#include "matrix.hpp"

namespace catfrob {

/// A strict monoidal category presented by a handle object. Composition is
/// written compose(g, f) = g∘f.
template <class C>
concept MonoidalCategory = requires(const C& c, const typename C::Obj& x, const typename C::Mor& f) {
  { c.unit() } -> std::convertible_to<typename C::Obj>;
  { c.id(x) } -> std::convertible_to<typename C::Mor>;
  { c.compose(f, f) } -> std::convertible_to<typename C::Mor>;
  { c.tensor(x, x) } -> std::convertible_to<typename C::Obj>;
  { c.tensor(f, f) } -> std::convertible_to<typename C::Mor>;
  { c.equal(f, f) } -> std::convertible_to<bool>;
  { c.dom(f) } -> std::convertible_to<typename C::Obj>;
  { c.cod(f) } -> std::convertible_to<typename C::Obj>;
  { c.same(x, x) } -> std::convertible_to<bool>;
  { c.describe(x) } -> std::convertible_to<std::string>;
  { c.first_mismatch(f, f) } -> std::convertible_to<std::optional<std::size_t>>;
  { c.render_column(f, std::size_t{}) } -> std::convertible_to<std::vector<std::string>>;
  { c.inverse(f) } -> std::convertible_to<std::optional<typename C::Mor>>;
};

template <class C>
concept SymmetricMonoidalCategory = MonoidalCategory<C> && requires(const C& c, const typename C::Obj& x) {
  { c.symmetry(x, x) } -> std::convertible_to<typename C::Mor>;
};

template <class C>
concept HasEqualizers = MonoidalCategory<C> && requires(const C& c, const typename C::Mor& f) {
  { c.equalizer(f, f) } -> std::convertible_to<std::pair<typename C::Obj, typename C::Mor>>;
  { c.factor_through(f, f) } -> std::convertible_to<std::optional<typename C::Mor>>;
  { c.is_mono(f) } -> std::convertible_to<bool>;
};

/// Categories enriched in Q-vector spaces whose morphisms carry a matrix.
template <class C>
concept LinearCategory = MonoidalCategory<C> &&
    requires(const C& c, const typename C::Obj& x, const typename C::Mor& f, const RationalMatrix& m) {
      { c.matrix(f) } -> std::convertible_to<RationalMatrix>;
      { c.from_matrix(x, x, m) } -> std::convertible_to<typename C::Mor>;
      { c.hom_basis(x, x) } -> std::convertible_to<std::vector<typename C::Mor>>;
    };

/// h∘g∘...∘f, written in the usual right-to-left order.
template <class C, class M, class... Rest>
M compose_all(const C& c, const M& g, const Rest&... rest) {
  if constexpr (sizeof...(Rest) == 0) return g;
  else return c.compose(g, compose_all(c, rest...));
}

template <class C, class M, class... Rest>
M tensor_all(const C& c, const M& a, const M& b, const Rest&... rest) {
  if constexpr (sizeof...(Rest) == 0) return c.tensor(a, b);
  else return tensor_all(c, c.tensor(a, b), rest...);
}

/// Records whether lhs = rhs; on failure stores the first differing basis
/// index and both columns there.
template <MonoidalCategory C>
bool check_equal(LawReport& report, const C& c, const std::string& id, const std::string& context,
                 const typename C::Mor& lhs, const typename C::Mor& rhs) {
  if (!c.same(c.dom(lhs), c.dom(rhs)) || !c.same(c.cod(lhs), c.cod(rhs))) {
    Witness w;
    w.context = context;
    w.note = "type mismatch: " + c.describe(c.dom(lhs)) + "->" + c.describe(c.cod(lhs)) + " vs " +
             c.describe(c.dom(rhs)) + "->" + c.describe(c.cod(rhs));
    report.fail(id, std::move(w));
    return false;
  }
  auto j = c.first_mismatch(lhs, rhs);
  if (!j) {
    report.pass(id);
    return true;
  }
  Witness w;
  w.context = context;
  w.index = *j;
  w.lhs = c.render_column(lhs, *j);
  w.rhs = c.render_column(rhs, *j);
  report.fail(id, std::move(w));
  return false;
}

/// Records that f is invertible.
template <MonoidalCategory C>
bool check_invertible(LawReport& report, const C& c, const std::string& id, const std::string& context,
                      const typename C::Mor& f) {
  if (c.inverse(f)) {
    report.pass(id);
    return true;
  }
  Witness w;
  w.context = context;
  w.note = "not invertible: " + c.describe(c.dom(f)) + " -> " + c.describe(c.cod(f));
  report.fail(id, std::move(w));
  return false;
}

template <MonoidalCategory C>
std::string describe_all(const C& c, const std::vector<typename C::Obj>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + c.describe(xs[i]);
  return s;
}

/// Strict-monoidal and symmetric-structure laws of a handle on probes.
template <SymmetricMonoidalCategory C>
LawReport check_category_laws(const C& c, const std::vector<typename C::Obj>& objs,
                              const std::vector<typename C::Mor>& mors) {
  LawReport r;
  for (const auto& f : mors) {
    std::string ctx = c.describe(c.dom(f)) + "->" + c.describe(c.cod(f));
    check_equal(r, c, "category.identity", ctx, c.compose(c.id(c.cod(f)), f), f);
    check_equal(r, c, "category.identity", ctx, c.compose(f, c.id(c.dom(f))), f);
    check_equal(r, c, "monoidal.unitor", ctx, c.tensor(c.id(c.unit()), f), f);
    check_equal(r, c, "monoidal.unitor", ctx, c.tensor(f, c.id(c.unit())), f);
  }
  for (const auto& f : mors)
    for (const auto& g : mors) {
      if (!c.same(c.cod(f), c.dom(g))) continue;
      for (const auto& h : mors) {
        if (!c.same(c.cod(g), c.dom(h))) continue;
        check_equal(r, c, "category.associativity", c.describe(c.dom(f)),
                    c.compose(h, c.compose(g, f)), c.compose(c.compose(h, g), f));
      }
    }
  // functoriality of the tensor and naturality of the symmetry
  for (const auto& f : mors)
    for (const auto& g : mors) {
      std::string ctx = c.describe(c.dom(f)) + "," + c.describe(c.dom(g));
      auto fg = c.tensor(f, g);
      check_equal(r, c, "symmetry.naturality", ctx,
                  c.compose(c.symmetry(c.cod(f), c.cod(g)), fg),
                  c.compose(c.tensor(g, f), c.symmetry(c.dom(f), c.dom(g))));
      for (const auto& f2 : mors) {
        if (!c.same(c.cod(f2), c.dom(f))) continue;
        for (const auto& g2 : mors) {
          if (!c.same(c.cod(g2), c.dom(g))) continue;
          check_equal(r, c, "monoidal.interchange", ctx, c.tensor(c.compose(f, f2), c.compose(g, g2)),
                      c.compose(fg, c.tensor(f2, g2)));
        }
      }
    }
  for (const auto& x : objs)
    for (const auto& y : objs) {
      std::string ctx = c.describe(x) + "," + c.describe(y);
      check_equal(r, c, "symmetry.involution", ctx, c.compose(c.symmetry(y, x), c.symmetry(x, y)),
                  c.id(c.tensor(x, y)));
      for (const auto& z : objs) {
        // hexagon: s_{X,Y⊗Z} = (1⊗s_{X,Z})∘(s_{X,Y}⊗1)
        check_equal(r, c, "symmetry.hexagon", ctx + "," + c.describe(z), c.symmetry(x, c.tensor(y, z)),
                    c.compose(c.tensor(c.id(y), c.symmetry(x, z)), c.tensor(c.symmetry(x, y), c.id(z))));
      }
    }
  return r;
}

}  // namespace catfrob

#endif  // CATFROB_CATEGORY_HPP
