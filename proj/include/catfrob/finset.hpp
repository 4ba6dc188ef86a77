#ifndef CATFROB_FINSET_HPP
#define CATFROB_FINSET_HPP

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"

namespace catfrob {

struct FinSetObj {
  std::size_t size = 0;
  friend auto operator<=>(const FinSetObj&, const FinSetObj&) = default;
};

struct FinSetMor {
  FinSetObj dom;
  FinSetObj cod;
  std::vector<std::size_t> table;  // table[x] = f(x)
};

/// Finite sets {0..n-1} with the cartesian product as tensor; the pair (x, y)
/// of X×Y is the element x·|Y| + y.
class FinSet {
 public:
  using Obj = FinSetObj;
  using Mor = FinSetMor;
  static constexpr const char* kind = "finset";

  static Obj obj(std::size_t n) { return {n}; }

  Obj unit() const { return {1}; }
  std::size_t size(const Obj& x) const { return x.size; }
  bool same(const Obj& a, const Obj& b) const { return a.size == b.size; }
  Obj dom(const Mor& f) const { return f.dom; }
  Obj cod(const Mor& f) const { return f.cod; }
  std::string describe(const Obj& x) const { return "{" + std::to_string(x.size) + "}"; }

  Mor make(const Obj& dom, const Obj& cod, std::vector<std::size_t> table) const {
    require(table.size() == dom.size, "FinSet: table length differs from domain size");
    for (std::size_t v : table) require(v < cod.size, "FinSet: table value outside codomain");
    return {dom, cod, std::move(table)};
  }

  Mor id(const Obj& x) const {
    std::vector<std::size_t> t(x.size);
    for (std::size_t i = 0; i < x.size; ++i) t[i] = i;
    return {x, x, std::move(t)};
  }

  Mor compose(const Mor& g, const Mor& f) const {
    if (!same(f.cod, g.dom))
      throw ContractViolation("compose: codomain " + describe(f.cod) + " does not match domain " + describe(g.dom));
    std::vector<std::size_t> t(f.table.size());
    for (std::size_t i = 0; i < t.size(); ++i) t[i] = g.table[f.table[i]];
    return {f.dom, g.cod, std::move(t)};
  }

  Obj tensor(const Obj& a, const Obj& b) const { return {a.size * b.size}; }

  Mor tensor(const Mor& f, const Mor& g) const {
    std::vector<std::size_t> t;
    t.reserve(f.dom.size * g.dom.size);
    for (std::size_t x = 0; x < f.dom.size; ++x)
      for (std::size_t y = 0; y < g.dom.size; ++y) t.push_back(f.table[x] * g.cod.size + g.table[y]);
    return {tensor(f.dom, g.dom), tensor(f.cod, g.cod), std::move(t)};
  }

  Mor symmetry(const Obj& x, const Obj& y) const {
    std::vector<std::size_t> t;
    t.reserve(x.size * y.size);
    for (std::size_t a = 0; a < x.size; ++a)
      for (std::size_t b = 0; b < y.size; ++b) t.push_back(b * x.size + a);
    return {tensor(x, y), tensor(y, x), std::move(t)};
  }

  bool equal(const Mor& a, const Mor& b) const {
    return same(a.dom, b.dom) && same(a.cod, b.cod) && a.table == b.table;
  }

  std::optional<std::size_t> first_mismatch(const Mor& a, const Mor& b) const {
    for (std::size_t i = 0; i < a.table.size() && i < b.table.size(); ++i)
      if (a.table[i] != b.table[i]) return i;
    return std::nullopt;
  }

  std::vector<std::string> render_column(const Mor& f, std::size_t j) const { return {std::to_string(f.table.at(j))}; }

  bool is_mono(const Mor& f) const {
    std::vector<char> seen(f.cod.size, 0);
    for (std::size_t v : f.table) {
      if (seen[v]) return false;
      seen[v] = 1;
    }
    return true;
  }

  std::optional<Mor> inverse(const Mor& f) const {
    if (f.dom.size != f.cod.size || !is_mono(f)) return std::nullopt;
    std::vector<std::size_t> t(f.cod.size);
    for (std::size_t i = 0; i < f.table.size(); ++i) t[f.table[i]] = i;
    return Mor{f.cod, f.dom, std::move(t)};
  }

  /// The subset {x : f(x) = g(x)} in increasing order, with its inclusion.
  std::pair<Obj, Mor> equalizer(const Mor& f, const Mor& g) const {
    require(same(f.dom, g.dom) && same(f.cod, g.cod), "equalizer: morphisms not parallel");
    std::vector<std::size_t> inc;
    for (std::size_t x = 0; x < f.dom.size; ++x)
      if (f.table[x] == g.table[x]) inc.push_back(x);
    Obj e{inc.size()};
    return {e, Mor{e, f.dom, std::move(inc)}};
  }

  /// The unique h with mono∘h = f, if f lands in the image of mono.
  std::optional<Mor> factor_through(const Mor& mono, const Mor& f) const {
    require(same(mono.cod, f.cod), "factor_through: codomains differ");
    require(is_mono(mono), "factor_through: first argument is not monic");
    constexpr std::size_t none = static_cast<std::size_t>(-1);
    std::vector<std::size_t> pre(mono.cod.size, none);
    for (std::size_t i = 0; i < mono.table.size(); ++i) pre[mono.table[i]] = i;
    std::vector<std::size_t> t(f.table.size());
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (pre[f.table[i]] == none) return std::nullopt;
      t[i] = pre[f.table[i]];
    }
    return Mor{f.dom, mono.dom, std::move(t)};
  }
};

}  // namespace catfrob

#endif  // CATFROB_FINSET_HPP
