#ifndef CATFROB_MONAD_HPP
#define CATFROB_MONAD_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "algebra_objects.hpp"
#include "probes.hpp"

namespace catfrob {

/// A monad (T, μ, η) on C with comonoidal structure T₂ : T(X⊗Y) → TX⊗TY,
/// T₀ : T𝟙 → 𝟙, given by evaluators.
template <class C>
class ComonoidalMonad {
 public:
  using Cat = C;
  using Obj = typename C::Obj;
  using Mor = typename C::Mor;

  virtual ~ComonoidalMonad() = default;
  virtual const C& ambient() const = 0;
  virtual std::string name() const = 0;
  virtual Obj obj(const Obj& x) const = 0;
  virtual Mor map(const Mor& f) const = 0;
  virtual Mor mu(const Obj& x) const = 0;
  virtual Mor eta(const Obj& x) const = 0;
  virtual Mor t2(const Obj& x, const Obj& y) const = 0;
  virtual Mor t0() const = 0;
};

template <class C>
using MonadPtr = std::shared_ptr<const ComonoidalMonad<C>>;

template <class C>
class IdentityMonad final : public ComonoidalMonad<C> {
 public:
  using typename ComonoidalMonad<C>::Obj;
  using typename ComonoidalMonad<C>::Mor;

  explicit IdentityMonad(C c = C{}) : c_(std::move(c)) {}
  const C& ambient() const override { return c_; }
  std::string name() const override { return "identity"; }
  Obj obj(const Obj& x) const override { return x; }
  Mor map(const Mor& f) const override { return f; }
  Mor mu(const Obj& x) const override { return c_.id(x); }
  Mor eta(const Obj& x) const override { return c_.id(x); }
  Mor t2(const Obj& x, const Obj& y) const override { return c_.id(c_.tensor(x, y)); }
  Mor t0() const override { return c_.id(c_.unit()); }

 private:
  C c_;
};

/// T = −⊗A for a Hopf algebra A in a symmetric category: μ = 1⊗m, η = 1⊗u,
/// T₂ = (1⊗s_{Y,A}⊗1)∘(1⊗1⊗Δ), T₀ = ε.
template <SymmetricMonoidalCategory C>
class TensorMonad final : public ComonoidalMonad<C> {
 public:
  using typename ComonoidalMonad<C>::Obj;
  using typename ComonoidalMonad<C>::Mor;

  explicit TensorMonad(HopfAlgebraData<C> h) : h_(std::move(h)) {}

  const C& ambient() const override { return h_.cat; }
  std::string name() const override { return "-⊗" + h_.name; }
  const HopfAlgebraData<C>& algebra() const { return h_; }

  Obj obj(const Obj& x) const override { return h_.cat.tensor(x, h_.carrier); }
  Mor map(const Mor& f) const override { return h_.cat.tensor(f, h_.cat.id(h_.carrier)); }
  Mor mu(const Obj& x) const override { return h_.cat.tensor(h_.cat.id(x), h_.m); }
  Mor eta(const Obj& x) const override { return h_.cat.tensor(h_.cat.id(x), h_.u); }
  Mor t0() const override { return h_.e; }

  Mor t2(const Obj& x, const Obj& y) const override {
    const std::string key = h_.cat.describe(x) + "|" + h_.cat.describe(y);
    {
      std::lock_guard<std::mutex> lock(mutex_);
      auto it = t2_cache_.find(key);
      if (it != t2_cache_.end()) return it->second;
    }
    const C& c = h_.cat;
    auto ix = c.id(x);
    auto ia = c.id(h_.carrier);
    Mor v = c.compose(tensor_all(c, ix, c.symmetry(y, h_.carrier), ia),
                      tensor_all(c, ix, c.id(y), h_.d));
    std::lock_guard<std::mutex> lock(mutex_);
    return t2_cache_.emplace(key, std::move(v)).first->second;
  }

 private:
  HopfAlgebraData<C> h_;
  mutable std::mutex mutex_;
  mutable std::map<std::string, Mor> t2_cache_;
};

/// Monad laws, functoriality, naturality and comonoidality of μ, η on probes.
template <class C>
LawReport check_monad_laws(const ComonoidalMonad<C>& t, const std::vector<typename C::Obj>& objs,
                           const std::vector<typename C::Mor>& mors) {
  const C& c = t.ambient();
  LawReport r;
  auto one = c.unit();
  for (const auto& x : objs) {
    std::string ctx = c.describe(x);
    auto tx = t.obj(x);
    check_equal(r, c, "monad.associativity", ctx, c.compose(t.mu(x), t.map(t.mu(x))),
                c.compose(t.mu(x), t.mu(tx)));
    check_equal(r, c, "monad.unit", ctx, c.compose(t.mu(x), t.eta(tx)), c.id(tx));
    check_equal(r, c, "monad.unit", ctx, c.compose(t.mu(x), t.map(t.eta(x))), c.id(tx));
    check_equal(r, c, "monad.functoriality", ctx, t.map(c.id(x)), c.id(tx));
    // T₂ and T₀ counitality
    check_equal(r, c, "comonoidal.counit", ctx, c.compose(c.tensor(t.t0(), c.id(tx)), t.t2(one, x)), c.id(tx));
    check_equal(r, c, "comonoidal.counit", ctx, c.compose(c.tensor(c.id(tx), t.t0()), t.t2(x, one)), c.id(tx));
    for (const auto& y : objs) {
      std::string ctx2 = ctx + "," + c.describe(y);
      auto xy = c.tensor(x, y);
      // μ and η comonoidal
      check_equal(r, c, "comonoidal.mu", ctx2, c.compose(t.t2(x, y), t.mu(xy)),
                  compose_all(c, c.tensor(t.mu(x), t.mu(y)), t.t2(t.obj(x), t.obj(y)), t.map(t.t2(x, y))));
      check_equal(r, c, "comonoidal.eta", ctx2, c.compose(t.t2(x, y), t.eta(xy)), c.tensor(t.eta(x), t.eta(y)));
      for (const auto& z : objs) {
        std::string ctx3 = ctx2 + "," + c.describe(z);
        check_equal(r, c, "comonoidal.coassociativity", ctx3,
                    c.compose(c.tensor(t.t2(x, y), c.id(t.obj(z))), t.t2(xy, z)),
                    c.compose(c.tensor(c.id(tx), t.t2(y, z)), t.t2(x, c.tensor(y, z))));
      }
    }
  }
  check_equal(r, c, "comonoidal.mu", c.describe(one), c.compose(t.t0(), t.mu(one)),
              c.compose(t.t0(), t.map(t.t0())));
  check_equal(r, c, "comonoidal.eta", c.describe(one), c.compose(t.t0(), t.eta(one)), c.id(one));
  for (const auto& f : mors) {
    std::string ctx = c.describe(c.dom(f)) + "->" + c.describe(c.cod(f));
    auto x = c.dom(f);
    auto y = c.cod(f);
    check_equal(r, c, "monad.naturality", ctx, c.compose(t.map(f), t.eta(x)), c.compose(t.eta(y), f));
    check_equal(r, c, "monad.naturality", ctx, c.compose(t.map(f), t.mu(x)), c.compose(t.mu(y), t.map(t.map(f))));
    for (const auto& g : mors) {
      if (c.same(c.cod(g), x))
        check_equal(r, c, "monad.functoriality", ctx, t.map(c.compose(f, g)), c.compose(t.map(f), t.map(g)));
      auto x2 = c.dom(g);
      auto y2 = c.cod(g);
      check_equal(r, c, "comonoidal.naturality", ctx, c.compose(t.t2(y, y2), t.map(c.tensor(f, g))),
                  c.compose(c.tensor(t.map(f), t.map(g)), t.t2(x, x2)));
    }
  }
  return r;
}

/// The monad −⊗H, validated on probes; a failing law raises ConstructionError.
template <SymmetricMonoidalCategory C>
MonadPtr<C> induced_module_monad(const HopfAlgebraData<C>& h, std::uint64_t seed = 0, std::size_t budget = 3) {
  auto t = std::make_shared<TensorMonad<C>>(h);
  auto objs = probe_objects(h.cat, seed, budget);
  auto mors = probe_morphisms(h.cat, objs, seed, 1);
  auto r = check_monad_laws(*t, objs, mors);
  for (const auto& law : r.laws())
    if (law.verdict != Verdict::pass)
      throw ConstructionError("induced_module_monad(" + h.name + "): " + law.id + " fails at " +
                              (law.witness ? law.witness->context : std::string("?")));
  return t;
}

/// T(X⊗TY) → TX⊗T²Y → TX⊗TY.
template <class C>
typename C::Mor fusion_left(const ComonoidalMonad<C>& t, const typename C::Obj& x, const typename C::Obj& y) {
  const C& c = t.ambient();
  return c.compose(c.tensor(c.id(t.obj(x)), t.mu(y)), t.t2(x, t.obj(y)));
}

/// T(TX⊗Y) → T²X⊗TY → TX⊗TY.
template <class C>
typename C::Mor fusion_right(const ComonoidalMonad<C>& t, const typename C::Obj& x, const typename C::Obj& y) {
  const C& c = t.ambient();
  return c.compose(c.tensor(t.mu(x), c.id(t.obj(y))), t.t2(t.obj(x), y));
}

struct ProbeVerdict {
  bool holds = true;     // holds on every probe
  std::string witness;   // first failing probe, if any
  std::size_t checked = 0;
};

template <class C>
ProbeVerdict is_left_hopf(const ComonoidalMonad<C>& t, const std::vector<typename C::Obj>& objs) {
  const C& c = t.ambient();
  ProbeVerdict v;
  for (const auto& x : objs)
    for (const auto& y : objs) {
      ++v.checked;
      if (v.holds && !c.inverse(fusion_left(t, x, y))) {
        v.holds = false;
        v.witness = "(" + c.describe(x) + "," + c.describe(y) + ")";
      }
    }
  return v;
}

template <class C>
ProbeVerdict is_right_hopf(const ComonoidalMonad<C>& t, const std::vector<typename C::Obj>& objs) {
  const C& c = t.ambient();
  ProbeVerdict v;
  for (const auto& x : objs)
    for (const auto& y : objs) {
      ++v.checked;
      if (v.holds && !c.inverse(fusion_right(t, x, y))) {
        v.holds = false;
        v.witness = "(" + c.describe(x) + "," + c.describe(y) + ")";
      }
    }
  return v;
}

/// η_X factors through the equalizer of (Tη_X, η_{TX}) by an isomorphism.
template <class C>
bool descent_holds_at(const ComonoidalMonad<C>& t, const typename C::Obj& x) {
  const C& c = t.ambient();
  auto [e, inc] = c.equalizer(t.map(t.eta(x)), t.eta(t.obj(x)));
  auto h = c.factor_through(inc, t.eta(x));
  return h && c.inverse(*h);
}

template <class C>
ProbeVerdict descent_type_check(const ComonoidalMonad<C>& t, const std::vector<typename C::Obj>& objs) {
  ProbeVerdict v;
  for (const auto& x : objs) {
    ++v.checked;
    if (v.holds && !descent_holds_at(t, x)) {
      v.holds = false;
      v.witness = t.ambient().describe(x);
    }
  }
  return v;
}

/// T(1_c⊗η_X) is monic at every probe.
template <class C>
ProbeVerdict tensor_unit_monic_check(const ComonoidalMonad<C>& t, const typename C::Obj& cobj,
                                     const std::vector<typename C::Obj>& objs) {
  const C& c = t.ambient();
  ProbeVerdict v;
  for (const auto& x : objs) {
    ++v.checked;
    if (v.holds && !c.is_mono(t.map(c.tensor(c.id(cobj), t.eta(x))))) {
      v.holds = false;
      v.witness = c.describe(x);
    }
  }
  return v;
}

}  // namespace catfrob

#endif  // CATFROB_MONAD_HPP
