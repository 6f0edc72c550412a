#pragma once

#include <map>
#include <string>

#include "algebra.hpp"

namespace iiq {

// Textual algebra document: the algebra itself plus named subspaces and named
// elements. Emission is canonical (entries ordered, subspaces in
// reduced-echelon form), so parse(emit(doc)) reconstructs the document exactly.
struct AlgebraDocument {
    Algebra algebra;
    std::map<std::string, Subspace> subspaces;
    std::map<std::string, Vec> elements;
};

AlgebraDocument parse_algebra_file(const std::string& text);
std::string emit_algebra_file(const AlgebraDocument& doc);

}  // namespace iiq
