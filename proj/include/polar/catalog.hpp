#pragma once

#include <span>
#include <string_view>

namespace polar {

struct CatalogEntry {
    std::string_view name;
    std::string_view source; // expression-language text
};

// Polar-analytic functions on all of H that never touch the principal Log cut:
// L, z^2, z^(1/2) written as r^(1/2) e^{i theta/2}, sin z, exp z, e^{-i theta}/r.
std::span<const CatalogEntry> analytic_catalog() noexcept;

// Functions that violate the polar Cauchy-Riemann equations.
std::span<const CatalogEntry> non_analytic_witnesses() noexcept;

} // namespace polar
