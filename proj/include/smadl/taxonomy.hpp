#pragma once

#include <array>
#include <optional>
#include <string_view>

namespace smadl {

/* The four social machine classes, ordered as a diamond lattice:

              Prosumer
             /        \
        Consumer    Provider
             \        /
              Isolated

   The enumerator values encode the lattice as subsets of {consumes,
   provides} (bit 0 = consumes, bit 1 = provides), so join is union and meet
   is intersection. */
enum class TaxonomyClass : unsigned char {
  Isolated = 0,
  Consumer = 1,
  Provider = 2,
  Prosumer = 3,
};

inline constexpr std::array<TaxonomyClass, 4> kAllClasses = {
    TaxonomyClass::Isolated, TaxonomyClass::Consumer, TaxonomyClass::Provider,
    TaxonomyClass::Prosumer};

bool classLeq(TaxonomyClass a, TaxonomyClass b);
TaxonomyClass classJoin(TaxonomyClass a, TaxonomyClass b);
TaxonomyClass classMeet(TaxonomyClass a, TaxonomyClass b);

/// Capitalized name, e.g. "Prosumer".
std::string_view className(TaxonomyClass c);
/// Lowercase name used in prose, e.g. "prosumer".
std::string_view classNameLower(TaxonomyClass c);
std::optional<TaxonomyClass> parseClassName(std::string_view name);

}  // namespace smadl
