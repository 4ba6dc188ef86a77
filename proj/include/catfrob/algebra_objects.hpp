#ifndef CATFROB_ALGEBRA_OBJECTS_HPP
#define CATFROB_ALGEBRA_OBJECTS_HPP

#include <string>
#include <utility>

#include "category.hpp"
#include "error.hpp"

namespace catfrob {

template <class C>
struct MonoidData {
  typename C::Obj carrier;
  typename C::Mor m;  // A⊗A → A
  typename C::Mor u;  // 𝟙 → A
};

template <class C>
struct ComonoidData {
  typename C::Obj carrier;
  typename C::Mor d;  // A → A⊗A
  typename C::Mor e;  // A → 𝟙
};

template <class C>
struct HopfAlgebraData {
  std::string name;
  C cat;
  typename C::Obj carrier;
  typename C::Mor m, u, d, e, s;

  MonoidData<C> monoid() const { return {carrier, m, u}; }
  ComonoidData<C> comonoid() const { return {carrier, d, e}; }
};

/// A comonoid together with a candidate unit and multiplication.
template <class C>
struct FrobeniusData {
  typename C::Obj carrier;
  typename C::Mor m, u, d, e;
};

template <class C>
struct DualPairData {
  typename C::Obj left;   // X
  typename C::Obj right;  // Y
  typename C::Mor ev;     // X⊗Y → 𝟙
  typename C::Mor coev;   // 𝟙 → Y⊗X
};

namespace detail {

template <MonoidalCategory C>
void require_type(const C& c, const typename C::Mor& f, const typename C::Obj& dom, const typename C::Obj& cod,
                  const std::string& what) {
  if (!c.same(c.dom(f), dom) || !c.same(c.cod(f), cod))
    throw ContractViolation(what + ": expected " + c.describe(dom) + " -> " + c.describe(cod) + ", got " +
                            c.describe(c.dom(f)) + " -> " + c.describe(c.cod(f)));
}

}  // namespace detail

template <MonoidalCategory C>
void check_monoid(LawReport& r, const C& c, const MonoidData<C>& a, const std::string& prefix) {
  const auto& x = a.carrier;
  auto one = c.id(x);
  auto xx = c.tensor(x, x);
  detail::require_type(c, a.m, xx, x, prefix + " multiplication");
  detail::require_type(c, a.u, c.unit(), x, prefix + " unit");
  std::string ctx = c.describe(x);
  check_equal(r, c, prefix + ".associativity", ctx, c.compose(a.m, c.tensor(a.m, one)),
              c.compose(a.m, c.tensor(one, a.m)));
  check_equal(r, c, prefix + ".unit", ctx, c.compose(a.m, c.tensor(a.u, one)), one);
  check_equal(r, c, prefix + ".unit", ctx, c.compose(a.m, c.tensor(one, a.u)), one);
}

template <MonoidalCategory C>
void check_comonoid(LawReport& r, const C& c, const ComonoidData<C>& a, const std::string& prefix) {
  const auto& x = a.carrier;
  auto one = c.id(x);
  detail::require_type(c, a.d, x, c.tensor(x, x), prefix + " comultiplication");
  detail::require_type(c, a.e, x, c.unit(), prefix + " counit");
  std::string ctx = c.describe(x);
  check_equal(r, c, prefix + ".coassociativity", ctx, c.compose(c.tensor(a.d, one), a.d),
              c.compose(c.tensor(one, a.d), a.d));
  check_equal(r, c, prefix + ".counit", ctx, c.compose(c.tensor(a.e, one), a.d), one);
  check_equal(r, c, prefix + ".counit", ctx, c.compose(c.tensor(one, a.e), a.d), one);
}

/// Monoid, comonoid, bialgebra compatibility (via the symmetry) and antipode.
template <SymmetricMonoidalCategory C>
LawReport check_hopf(const HopfAlgebraData<C>& h) {
  const C& c = h.cat;
  LawReport r;
  const auto& x = h.carrier;
  detail::require_type(c, h.s, x, x, "antipode");
  check_monoid(r, c, h.monoid(), "hopf");
  check_comonoid(r, c, h.comonoid(), "hopf");
  auto one = c.id(x);
  std::string ctx = c.describe(x);
  auto middle = tensor_all(c, one, c.symmetry(x, x), one);
  // Δ∘m = (m⊗m)∘(1⊗s⊗1)∘(Δ⊗Δ)
  check_equal(r, c, "hopf.bialgebra", ctx, c.compose(h.d, h.m),
              compose_all(c, c.tensor(h.m, h.m), middle, c.tensor(h.d, h.d)));
  check_equal(r, c, "hopf.bialgebra", ctx, c.compose(h.e, h.m), c.tensor(h.e, h.e));
  check_equal(r, c, "hopf.bialgebra", ctx, c.compose(h.d, h.u), c.tensor(h.u, h.u));
  check_equal(r, c, "hopf.bialgebra", ctx, c.compose(h.e, h.u), c.id(c.unit()));
  auto ue = c.compose(h.u, h.e);
  check_equal(r, c, "hopf.antipode", ctx, compose_all(c, h.m, c.tensor(h.s, one), h.d), ue);
  check_equal(r, c, "hopf.antipode", ctx, compose_all(c, h.m, c.tensor(one, h.s), h.d), ue);
  return r;
}

/// Both snake identities: (ev⊗1)(1⊗coev) = 1_X and (1⊗ev)(coev⊗1) = 1_Y.
template <MonoidalCategory C>
LawReport dual_pair_report(const C& c, const DualPairData<C>& p) {
  LawReport r;
  auto ix = c.id(p.left);
  auto iy = c.id(p.right);
  std::string ctx = c.describe(p.left) + "," + c.describe(p.right);
  detail::require_type(c, p.ev, c.tensor(p.left, p.right), c.unit(), "evaluation");
  detail::require_type(c, p.coev, c.unit(), c.tensor(p.right, p.left), "coevaluation");
  check_equal(r, c, "dual.snake_left", ctx, c.compose(c.tensor(p.ev, ix), c.tensor(ix, p.coev)), ix);
  check_equal(r, c, "dual.snake_right", ctx, c.compose(c.tensor(iy, p.ev), c.tensor(p.coev, iy)), iy);
  return r;
}

template <MonoidalCategory C>
bool check_dual_pair(const C& c, const DualPairData<C>& p) {
  try {
    return dual_pair_report(c, p).all_pass();
  } catch (const ContractViolation&) {
    return false;
  }
}

/// Frobenius squares, the two unit triangles and the comonoid laws.
template <MonoidalCategory C>
LawReport check_frobenius_monoid(const C& c, const FrobeniusData<C>& f) {
  LawReport r;
  const auto& x = f.carrier;
  auto one = c.id(x);
  detail::require_type(c, f.m, c.tensor(x, x), x, "Frobenius multiplication");
  detail::require_type(c, f.u, c.unit(), x, "Frobenius unit");
  check_comonoid(r, c, ComonoidData<C>{x, f.d, f.e}, "frobenius");
  std::string ctx = c.describe(x);
  auto dm = c.compose(f.d, f.m);
  check_equal(r, c, "frobenius.square_left", ctx, c.compose(c.tensor(one, f.m), c.tensor(f.d, one)), dm);
  check_equal(r, c, "frobenius.square_right", ctx, c.compose(c.tensor(f.m, one), c.tensor(one, f.d)), dm);
  check_equal(r, c, "frobenius.unit_right", ctx, c.compose(f.m, c.tensor(one, f.u)), one);
  check_equal(r, c, "frobenius.unit_left", ctx, c.compose(f.m, c.tensor(f.u, one)), one);
  return r;
}

}  // namespace catfrob

#endif  // CATFROB_ALGEBRA_OBJECTS_HPP
