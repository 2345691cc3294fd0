#pragma once

// Named infinitely divisible laws: the hyperbolic cosine, sine and tangent
// laws, the Laplace law, and the background driving laws of each.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "freeid/measures.hpp"
#include "freeid/voiculescu.hpp"

namespace freeid::measures {

struct CatalogEntry {
  std::string name;
  std::string description;
  LogCharFn log_cf;
  KhintchinePair pair;
  std::optional<voiculescu::VoiculescuFn> closed_v;
  // Name of the selfdecomposable law this entry is the background driver of.
  std::optional<std::string> bdcf_of;

  // Formulas as text, for listings.
  std::string log_cf_text;
  std::string density_text;
  std::string closed_text;
};

/// Throws UnknownDistribution.
const CatalogEntry& catalog_lookup(std::string_view name);

/// All entries in a fixed order: the four laws, then their drivers.
const std::vector<CatalogEntry>& catalog();

/// Name of the background driving law of `name`, if it has one.
std::optional<std::string> driver_of(std::string_view name);

}  // namespace freeid::measures
