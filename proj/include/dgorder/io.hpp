#pragma once

#include "dgorder/catalog.hpp"
#include "dgorder/module.hpp"

#include <optional>
#include <string>

namespace dgo {

// One algebra with optional order, block layout and module.
struct AlgebraFile {
    DgAlgebra algebra;
    std::optional<ZLattice> order;
    std::optional<BlockLayout> blocks;
    std::optional<DgModule> module;
};

// Throws Error(ParseError) with "line:column: message".
AlgebraFile parse_algebra_file(const std::string& text);
AlgebraFile read_algebra_file(const std::string& path);

// Canonical text: equal objects give identical output.
std::string write_algebra_file(const AlgebraFile& file);

AlgebraFile to_file(const BuiltExample& ex);

} // namespace dgo
