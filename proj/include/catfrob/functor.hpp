#ifndef CATFROB_FUNCTOR_HPP
#define CATFROB_FUNCTOR_HPP

#include <functional>
#include <string>
#include <vector>

#include "algebra_objects.hpp"
#include "category.hpp"

namespace catfrob {

/// A functor F : S → T that is both monoidal (f₂ : FX⊗FY → F(X⊗Y), f₀ : 𝟙 → F𝟙)
/// and comonoidal (F₂ : F(X⊗Y) → FX⊗FY, F₀ : F𝟙 → 𝟙).
template <class S, class T = S>
struct BimonoidalFunctor {
  std::function<typename T::Obj(const typename S::Obj&)> obj;
  std::function<typename T::Mor(const typename S::Mor&)> map;
  std::function<typename T::Mor(const typename S::Obj&, const typename S::Obj&)> f2;
  typename T::Mor f0;
  std::function<typename T::Mor(const typename S::Obj&, const typename S::Obj&)> F2;
  typename T::Mor F0;
};

/// Monoidal and comonoidal functor laws plus the two Frobenius compatibility
/// squares
///   F₂_{X⊗Y,Z}∘f₂_{X,Y⊗Z} = (f₂_{X,Y}⊗1)∘(1⊗F₂_{Y,Z}),
///   F₂_{X,Y⊗Z}∘f₂_{X⊗Y,Z} = (1⊗f₂_{Y,Z})∘(F₂_{X,Y}⊗1),
/// at every probe triple.
template <MonoidalCategory S, MonoidalCategory T>
LawReport check_frobenius_monoidal_functor(const S& s, const T& t, const BimonoidalFunctor<S, T>& f,
                                           const std::vector<typename S::Obj>& objs) {
  LawReport r;
  auto one = s.unit();
  auto fid = [&](const typename S::Obj& x) { return t.id(f.obj(x)); };
  for (const auto& x : objs) {
    const std::string cx = s.describe(x);
    check_equal(r, t, "monoidal_functor.unit", cx, t.compose(f.f2(one, x), t.tensor(f.f0, fid(x))), fid(x));
    check_equal(r, t, "monoidal_functor.unit", cx, t.compose(f.f2(x, one), t.tensor(fid(x), f.f0)), fid(x));
    check_equal(r, t, "comonoidal_functor.counit", cx, t.compose(t.tensor(f.F0, fid(x)), f.F2(one, x)), fid(x));
    check_equal(r, t, "comonoidal_functor.counit", cx, t.compose(t.tensor(fid(x), f.F0), f.F2(x, one)), fid(x));
    for (const auto& y : objs)
      for (const auto& z : objs) {
        const std::string ctx = cx + "," + s.describe(y) + "," + s.describe(z);
        auto xy = s.tensor(x, y);
        auto yz = s.tensor(y, z);
        check_equal(r, t, "monoidal_functor.associativity", ctx, t.compose(f.f2(xy, z), t.tensor(f.f2(x, y), fid(z))),
                    t.compose(f.f2(x, yz), t.tensor(fid(x), f.f2(y, z))));
        check_equal(r, t, "comonoidal_functor.coassociativity", ctx,
                    t.compose(t.tensor(f.F2(x, y), fid(z)), f.F2(xy, z)),
                    t.compose(t.tensor(fid(x), f.F2(y, z)), f.F2(x, yz)));
        check_equal(r, t, "frobenius_functor.left", ctx, t.compose(f.F2(xy, z), f.f2(x, yz)),
                    t.compose(t.tensor(f.f2(x, y), fid(z)), t.tensor(fid(x), f.F2(y, z))));
        check_equal(r, t, "frobenius_functor.right", ctx, t.compose(f.F2(x, yz), f.f2(xy, z)),
                    t.compose(t.tensor(fid(x), f.f2(y, z)), t.tensor(f.F2(x, y), fid(z))));
      }
  }
  return r;
}

/// A⊗− for a Frobenius monoid A in a symmetric category:
/// f₂ = (m⊗1⊗1)∘(1⊗σ_{X,A}⊗1), f₀ = u, F₂ = (1⊗σ_{A,X}⊗1)∘(d⊗1⊗1), F₀ = e.
template <SymmetricMonoidalCategory C>
BimonoidalFunctor<C, C> tensor_functor(const C& c, const FrobeniusData<C>& a) {
  using Obj = typename C::Obj;
  auto x0 = a.carrier;
  BimonoidalFunctor<C, C> f;
  f.obj = [c, x0](const Obj& x) { return c.tensor(x0, x); };
  f.map = [c, x0](const typename C::Mor& m) { return c.tensor(c.id(x0), m); };
  f.f2 = [c, a](const Obj& x, const Obj& y) {
    return c.compose(tensor_all(c, a.m, c.id(x), c.id(y)), tensor_all(c, c.id(a.carrier), c.symmetry(x, a.carrier), c.id(y)));
  };
  f.f0 = a.u;
  f.F2 = [c, a](const Obj& x, const Obj& y) {
    return c.compose(tensor_all(c, c.id(a.carrier), c.symmetry(a.carrier, x), c.id(y)), tensor_all(c, a.d, c.id(x), c.id(y)));
  };
  f.F0 = a.e;
  return f;
}

/// Image of a dual pair (X, Y, ev, coev) under F: (FX, FY, F₀∘Fev∘f₂, F₂∘Fcoev∘f₀).
template <MonoidalCategory S, MonoidalCategory T>
DualPairData<T> transport_dual_pair(const T& t, const BimonoidalFunctor<S, T>& f, const DualPairData<S>& p) {
  return {f.obj(p.left), f.obj(p.right), compose_all(t, f.F0, f.map(p.ev), f.f2(p.left, p.right)),
          compose_all(t, f.F2(p.right, p.left), f.map(p.coev), f.f0)};
}

/// Image of a Frobenius monoid: multiplication and unit through (f₂, f₀),
/// comultiplication and counit through (F₂, F₀).
template <MonoidalCategory S, MonoidalCategory T>
FrobeniusData<T> transport_frobenius(const T& t, const BimonoidalFunctor<S, T>& f, const FrobeniusData<S>& a) {
  const auto& x = a.carrier;
  return {f.obj(x), t.compose(f.map(a.m), f.f2(x, x)), t.compose(f.map(a.u), f.f0),
          t.compose(f.F2(x, x), f.map(a.d)), t.compose(f.F0, f.map(a.e))};
}

}  // namespace catfrob

#endif  // CATFROB_FUNCTOR_HPP
