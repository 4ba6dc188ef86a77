#ifndef CATFROB_INVERSE_CACHE_HPP
#define CATFROB_INVERSE_CACHE_HPP

#include <map>
#include <mutex>
#include <string>
#include <utility>

#include "category.hpp"
#include "error.hpp"

namespace catfrob {

/// Memoized inverses keyed by a descriptor string. Descriptors need not
/// determine the morphism, so a hit must also match it exactly.
template <MonoidalCategory C>
class InverseCache {
 public:
  using Mor = typename C::Mor;

  Mor get(const C& c, const std::string& key, const Mor& f, const std::string& what) const {
    {
      std::lock_guard<std::mutex> lock(mutex_);
      auto range = entries_.equal_range(key);
      for (auto it = range.first; it != range.second; ++it)
        if (c.equal(it->second.first, f)) return it->second.second;
    }
    auto g = c.inverse(f);
    if (!g) throw ConstructionError(what + " is not invertible at " + key);
    std::lock_guard<std::mutex> lock(mutex_);
    entries_.emplace(key, std::make_pair(f, *g));
    return *g;
  }

 private:
  mutable std::mutex mutex_;
  mutable std::multimap<std::string, std::pair<Mor, Mor>> entries_;
};

}  // namespace catfrob

#endif  // CATFROB_INVERSE_CACHE_HPP
