#ifndef CATFROB_EILENBERG_MOORE_HPP
#define CATFROB_EILENBERG_MOORE_HPP

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "monad.hpp"

namespace catfrob {

/// An algebra (A, x : TA → A). The label is used for report contexts only.
template <class C>
struct TAlgebra {
  typename C::Obj carrier;
  typename C::Mor action;
  std::string label;
};

template <class C>
struct TAlgebraMor {
  TAlgebra<C> dom;
  TAlgebra<C> cod;
  typename C::Mor underlying;
};

template <class C>
LawReport check_algebra(const ComonoidalMonad<C>& t, const TAlgebra<C>& a) {
  const C& c = t.ambient();
  LawReport r;
  check_equal(r, c, "algebra.unit", a.label, c.compose(a.action, t.eta(a.carrier)), c.id(a.carrier));
  check_equal(r, c, "algebra.associativity", a.label, c.compose(a.action, t.mu(a.carrier)),
              c.compose(a.action, t.map(a.action)));
  return r;
}

/// The category of T-algebras with the monoidal structure lifted along T₂, T₀;
/// the forgetful functor is strict monoidal.
template <class C>
class EMCategory {
 public:
  using Base = C;
  using Obj = TAlgebra<C>;
  using Mor = TAlgebraMor<C>;
  static constexpr const char* kind = "em";

  explicit EMCategory(MonadPtr<C> t) : t_(std::move(t)) { require(t_ != nullptr, "EMCategory: null monad"); }

  const C& base() const { return t_->ambient(); }
  const ComonoidalMonad<C>& monad() const { return *t_; }
  const MonadPtr<C>& monad_ptr() const { return t_; }

  Obj unit() const { return {base().unit(), t_->t0(), "1"}; }

  Obj free(const typename C::Obj& x) const {
    std::string label = "L" + base().describe(x);
    {
      std::lock_guard<std::mutex> lock(cache_->mutex);
      auto it = cache_->free.find(label);
      if (it != cache_->free.end()) return it->second;
    }
    Obj a{t_->obj(x), t_->mu(x), label};
    std::lock_guard<std::mutex> lock(cache_->mutex);
    return cache_->free.emplace(std::move(label), std::move(a)).first->second;
  }

  /// Validates the algebra laws; throws ConstructionError on failure.
  Obj make_algebra(const typename C::Obj& carrier, const typename C::Mor& action, std::string label) const {
    Obj a{carrier, action, std::move(label)};
    auto r = check_algebra(*t_, a);
    if (!r.all_pass()) throw ConstructionError("T-algebra " + a.label + ": " + r.failures().front() + " fails");
    return a;
  }

  /// Memoized; entries are matched on label and compared on the actions.
  Obj tensor(const Obj& a, const Obj& b) const {
    const C& c = base();
    const std::string key = a.label + "|" + b.label;
    {
      std::lock_guard<std::mutex> lock(cache_->mutex);
      auto [lo, hi] = cache_->entries.equal_range(key);
      for (auto it = lo; it != hi; ++it)
        if (same(it->second.a, a) && same(it->second.b, b)) return it->second.ab;
    }
    Obj ab{c.tensor(a.carrier, b.carrier), c.compose(c.tensor(a.action, b.action), t_->t2(a.carrier, b.carrier)),
           tensor_label(a.label, b.label)};
    std::lock_guard<std::mutex> lock(cache_->mutex);
    cache_->entries.emplace(key, TensorEntry{a, b, ab});
    return ab;
  }

  Mor tensor(const Mor& f, const Mor& g) const {
    return {tensor(f.dom, g.dom), tensor(f.cod, g.cod), base().tensor(f.underlying, g.underlying)};
  }

  Obj dom(const Mor& f) const { return f.dom; }
  Obj cod(const Mor& f) const { return f.cod; }

  bool same(const Obj& a, const Obj& b) const {
    return base().same(a.carrier, b.carrier) && base().equal(a.action, b.action);
  }

  std::string describe(const Obj& a) const { return a.label; }

  Mor id(const Obj& a) const { return {a, a, base().id(a.carrier)}; }

  /// Wraps a base morphism, checking that it commutes with the actions.
  Mor make(const Obj& dom, const Obj& cod, const typename C::Mor& f) const {
    const C& c = base();
    require(c.same(c.dom(f), dom.carrier) && c.same(c.cod(f), cod.carrier), "EM: underlying map has wrong type");
    if (!c.equal(c.compose(f, dom.action), c.compose(cod.action, t_->map(f))))
      throw ContractViolation("EM: " + dom.label + " -> " + cod.label + " is not an algebra map");
    return {dom, cod, f};
  }

  /// Wraps without checking; used where the algebra-map property is a theorem.
  Mor trusted(const Obj& dom, const Obj& cod, typename C::Mor f) const { return {dom, cod, std::move(f)}; }

  Mor compose(const Mor& g, const Mor& f) const {
    if (!same(f.cod, g.dom))
      throw ContractViolation("EM compose: " + f.cod.label + " does not match " + g.dom.label);
    return {f.dom, g.cod, base().compose(g.underlying, f.underlying)};
  }

  bool equal(const Mor& f, const Mor& g) const {
    return same(f.dom, g.dom) && same(f.cod, g.cod) && base().equal(f.underlying, g.underlying);
  }

  std::optional<std::size_t> first_mismatch(const Mor& f, const Mor& g) const {
    return base().first_mismatch(f.underlying, g.underlying);
  }

  std::vector<std::string> render_column(const Mor& f, std::size_t j) const {
    return base().render_column(f.underlying, j);
  }

  std::optional<Mor> inverse(const Mor& f) const {
    auto g = base().inverse(f.underlying);
    if (!g) return std::nullopt;
    return Mor{f.cod, f.dom, std::move(*g)};
  }

  bool is_mono(const Mor& f) const { return base().is_mono(f.underlying); }

  /// Equalizer of carriers with the induced action.
  std::pair<Obj, Mor> equalizer(const Mor& f, const Mor& g) const {
    require(same(f.dom, g.dom) && same(f.cod, g.cod), "EM equalizer: morphisms not parallel");
    const C& c = base();
    auto [e, inc] = c.equalizer(f.underlying, g.underlying);
    auto act = c.factor_through(inc, c.compose(f.dom.action, t_->map(inc)));
    if (!act) throw ConstructionError("EM equalizer: action does not restrict to the equalizer");
    Obj eq = make_algebra(e, *act, "Eq(" + f.dom.label + ")");
    return {eq, Mor{eq, f.dom, inc}};
  }

  std::optional<Mor> factor_through(const Mor& mono, const Mor& f) const {
    auto h = base().factor_through(mono.underlying, f.underlying);
    if (!h) return std::nullopt;
    return Mor{f.dom, mono.dom, std::move(*h)};
  }

  // Linear structure, available when the base is linear.

  RationalMatrix matrix(const Mor& f) const
    requires LinearCategory<C>
  {
    return base().matrix(f.underlying);
  }

  Mor from_matrix(const Obj& dom, const Obj& cod, RationalMatrix m) const
    requires LinearCategory<C>
  {
    return make(dom, cod, base().from_matrix(dom.carrier, cod.carrier, std::move(m)));
  }

  /// Canonical basis of the space of algebra maps a → b.
  std::vector<Mor> hom_basis(const Obj& a, const Obj& b) const
    requires LinearCategory<C>
  {
    const C& c = base();
    auto basis = c.hom_basis(a.carrier, b.carrier);
    std::size_t rows = c.matrix(c.id(b.carrier)).rows();
    std::size_t cols = c.matrix(t_->map(c.id(a.carrier))).cols();
    RationalMatrix sys(rows * cols, basis.size());
    for (std::size_t i = 0; i < basis.size(); ++i) {
      RationalMatrix v = c.matrix(c.compose(basis[i], a.action)) - c.matrix(c.compose(b.action, t_->map(basis[i])));
      for (std::size_t r = 0; r < v.rows(); ++r)
        for (const auto& e : v.row(r)) sys.set(r * cols + e.col, i, e.value);
    }
    RationalMatrix k = kernel_basis(sys);
    std::vector<Mor> out;
    for (std::size_t j = 0; j < k.cols(); ++j) {
      RationalMatrix m(rows, c.matrix(c.id(a.carrier)).cols());
      for (std::size_t i = 0; i < basis.size(); ++i)
        if (!k.at(i, j).is_zero()) m = m + c.matrix(basis[i]).scaled(k.at(i, j));
      out.push_back(Mor{a, b, c.from_matrix(a.carrier, b.carrier, std::move(m))});
    }
    return out;
  }

 private:
  static std::string tensor_label(const std::string& a, const std::string& b) {
    if (a == "1") return b;
    if (b == "1") return a;
    return a + "⊗" + b;
  }

  struct TensorEntry {
    Obj a, b, ab;
  };
  struct TensorCache {
    std::mutex mutex;
    std::multimap<std::string, TensorEntry> entries;
    std::map<std::string, Obj> free;  // keyed by label, which determines the base object
  };

  MonadPtr<C> t_;
  std::shared_ptr<TensorCache> cache_ = std::make_shared<TensorCache>();
};

}  // namespace catfrob

#endif  // CATFROB_EILENBERG_MOORE_HPP
