#pragma once

#include <string>
#include <vector>

#include "upknot/diagram.hpp"
#include "upknot/laurent.hpp"

namespace upknot {

// A bundled diagram with its expected invariants. Entries sharing a group
// present the same knot, so their computed invariants must coincide; the
// expected values are regression snapshots that were cross-checked against an
// independent implementation before being frozen here.
struct CatalogEntry {
  std::string name;
  std::string group;
  std::string udf;  // diagram text (parse_diagram input)
  Laurent1 delta;
  Laurent1 rho1;
  Laurent2 theta;
};

const std::vector<CatalogEntry>& catalog();
const CatalogEntry* find_catalog_entry(const std::string& name);
UprightDiagram catalog_diagram(const std::string& name);  // throws InputError if unknown

}  // namespace upknot
