#include "polar/catalog.hpp"

#include <array>

namespace polar {

namespace {

constexpr std::array<CatalogEntry, 6> kAnalytic{{
    {"L", "L"},
    {"z^2", "z^2"},
    {"z^(1/2)", "r^0.5*exp(i*theta/2)"},
    {"sin z", "sin(z)"},
    {"exp z", "exp(z)"},
    {"e^(-i theta)/r", "exp(-i*theta)/r"},
}};

constexpr std::array<CatalogEntry, 3> kWitnesses{{
    {"r", "r"},
    {"theta", "theta"},
    {"r*r", "r*r"},
}};

} // namespace

std::span<const CatalogEntry> analytic_catalog() noexcept { return kAnalytic; }
std::span<const CatalogEntry> non_analytic_witnesses() noexcept { return kWitnesses; }

} // namespace polar
