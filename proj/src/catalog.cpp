#include "ipset/catalog.hpp"

#include "ipset/errors.hpp"

namespace ipset {

const std::vector<CatalogEntry>& catalog()
{
    static const std::vector<CatalogEntry> entries = {
        {"min_diameter_general_position n=3", 1, "exact"},
        {"min_diameter_general_position n=4", 8, "exact"},
        {"min_diameter_general_position n=5", 73, "exact"},
        {"min_diameter_general_position n=6", 174, "exact"},
        {"min_diameter_general_position n=7", 22270, "exact; unique example up to diameter 30000"},
        {"heptagon_22270_characteristic", 2002, "2*7*11*13"},
        {"heptagon_66810_diameter", 66810, "second known heptagon"},
        {"smallest_6_2_cluster_diameter", 1886, "six points, integral coordinates, general position"},
        {"restricted_search_characteristic_bound", Integer("6469693230"), "2*3*5*7*11*13*17*19*23*29"},
        {"restricted_search_max_diameter", 70000, "characteristic restricted to divisors of the bound"},
        {"modular_max_general_position n=50", 12, "lower bound"},
        {"modular_max_general_position n=61", 9, "lower bound"},
    };
    return entries;
}

const Integer& catalog_value(const std::string& name)
{
    for (const auto& e : catalog())
        if (e.name == name)
            return e.value;
    throw DomainError("no catalog entry named '" + name + "'");
}

} // namespace ipset
