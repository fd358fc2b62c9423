#pragma once

#include "ipset/integer.hpp"

#include <string>
#include <vector>

namespace ipset {

struct CatalogEntry {
    std::string name;
    Integer value;
    std::string note;
};

/// Known values shipped with the library, in display order.
const std::vector<CatalogEntry>& catalog();

/// Value of the named entry; throws DomainError for unknown names.
const Integer& catalog_value(const std::string& name);

} // namespace ipset
