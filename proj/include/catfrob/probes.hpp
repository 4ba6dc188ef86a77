#ifndef CATFROB_PROBES_HPP
#define CATFROB_PROBES_HPP

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "finset.hpp"
#include "finvect.hpp"
#include "grvect.hpp"

namespace catfrob {

// Seeded draws use raw mt19937_64 output (whose sequence is fixed by the
// standard) rather than distributions, which vary between library vendors.
inline long small_int(std::mt19937_64& rng, long radius) {
  return static_cast<long>(rng() % static_cast<std::uint64_t>(2 * radius + 1)) - radius;
}

/// The unit first, then every object of size at most 3, truncated to budget.
inline std::vector<FinVect::Obj> probe_objects(const FinVect&, std::uint64_t /*seed*/, std::size_t budget) {
  require(budget >= 1, "probe_objects: budget must be at least 1");
  std::vector<FinVect::Obj> all{{1}, {0}, {2}, {3}};
  if (budget < all.size()) all.resize(budget);
  return all;
}

inline std::vector<FinSet::Obj> probe_objects(const FinSet&, std::uint64_t /*seed*/, std::size_t budget) {
  require(budget >= 1, "probe_objects: budget must be at least 1");
  std::vector<FinSet::Obj> all{{1}, {0}, {2}, {3}};
  if (budget < all.size()) all.resize(budget);
  return all;
}

/// (1|0) first, then (p|q) with p+q <= 3 ordered by max(p,q), then p+q, then q.
inline std::vector<GrVect::Obj> probe_objects(const GrVect&, std::uint64_t /*seed*/, std::size_t budget) {
  require(budget >= 1, "probe_objects: budget must be at least 1");
  std::vector<GrVect::Obj> all{GrVect::obj(1, 0), GrVect::obj(0, 0), GrVect::obj(0, 1), GrVect::obj(1, 1),
                               GrVect::obj(2, 0), GrVect::obj(0, 2), GrVect::obj(2, 1), GrVect::obj(1, 2),
                               GrVect::obj(3, 0), GrVect::obj(0, 3)};
  if (budget < all.size()) all.resize(budget);
  return all;
}

inline FinVect::Mor random_morphism(const FinVect& c, const FinVect::Obj& x, const FinVect::Obj& y,
                                    std::mt19937_64& rng) {
  RationalMatrix m(y.dim, x.dim);
  for (std::size_t i = 0; i < y.dim; ++i)
    for (std::size_t j = 0; j < x.dim; ++j) m.set(i, j, Rational(small_int(rng, 2)));
  return c.from_matrix(x, y, std::move(m));
}

inline GrVect::Mor random_morphism(const GrVect& c, const GrVect::Obj& x, const GrVect::Obj& y,
                                   std::mt19937_64& rng) {
  RationalMatrix m(c.size(y), c.size(x));
  for (std::size_t i = 0; i < c.size(y); ++i)
    for (std::size_t j = 0; j < c.size(x); ++j)
      if (x.degrees[j] == y.degrees[i]) m.set(i, j, Rational(small_int(rng, 2)));
  return c.from_matrix(x, y, std::move(m));
}

inline FinSet::Mor random_morphism(const FinSet& c, const FinSet::Obj& x, const FinSet::Obj& y,
                                   std::mt19937_64& rng) {
  std::vector<std::size_t> t(x.size);
  for (auto& v : t) v = static_cast<std::size_t>(rng() % y.size);
  return c.make(x, y, std::move(t));
}

/// `per_hom` seeded morphisms for every ordered pair of probe objects
/// (skipping empty hom-sets of FinSet).
template <class C>
std::vector<typename C::Mor> probe_morphisms(const C& c, const std::vector<typename C::Obj>& objs, std::uint64_t seed,
                                             std::size_t per_hom = 3) {
  std::mt19937_64 rng(seed);
  std::vector<typename C::Mor> out;
  for (const auto& x : objs)
    for (const auto& y : objs) {
      if constexpr (std::is_same_v<C, FinSet>) {
        if (y.size == 0 && x.size > 0) continue;
      }
      for (std::size_t k = 0; k < per_hom; ++k) out.push_back(random_morphism(c, x, y, rng));
    }
  return out;
}

}  // namespace catfrob

#endif  // CATFROB_PROBES_HPP
