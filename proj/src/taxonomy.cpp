#include "smadl/taxonomy.hpp"

namespace smadl {

namespace {
unsigned bits(TaxonomyClass c) { return static_cast<unsigned>(c); }
}  // namespace

bool classLeq(TaxonomyClass a, TaxonomyClass b) { return (bits(a) & ~bits(b)) == 0; }

TaxonomyClass classJoin(TaxonomyClass a, TaxonomyClass b) {
  return static_cast<TaxonomyClass>(bits(a) | bits(b));
}

TaxonomyClass classMeet(TaxonomyClass a, TaxonomyClass b) {
  return static_cast<TaxonomyClass>(bits(a) & bits(b));
}

std::string_view className(TaxonomyClass c) {
  switch (c) {
    case TaxonomyClass::Isolated: return "Isolated";
    case TaxonomyClass::Consumer: return "Consumer";
    case TaxonomyClass::Provider: return "Provider";
    case TaxonomyClass::Prosumer: return "Prosumer";
  }
  return "?";
}

std::string_view classNameLower(TaxonomyClass c) {
  switch (c) {
    case TaxonomyClass::Isolated: return "isolated";
    case TaxonomyClass::Consumer: return "consumer";
    case TaxonomyClass::Provider: return "provider";
    case TaxonomyClass::Prosumer: return "prosumer";
  }
  return "?";
}

std::optional<TaxonomyClass> parseClassName(std::string_view name) {
  for (TaxonomyClass c : kAllClasses)
    if (name == className(c) || name == classNameLower(c)) return c;
  return std::nullopt;
}

}  // namespace smadl
