#pragma once

#include <string>

#include "helgason/catalog.hpp"

namespace helgason {

enum class BcCase { I, II, III };

const char* to_string(BcCase c);

// Literal evaluation of the printed membership condition for a pair. The
// ag12-d213 row has two printed variants: "table" and "item11".
bool table2(const PairSpec& pair, const Weight& lambda, const std::string& variant = "table");

// Example BC cases, including the numeric prefilter on a_i, b_j.
bool example_bc(BcCase c, int r, int s, const Weight& lambda);

// Which example case governs a generic bc/c spec; throws Precondition if none does.
BcCase example_case_for(const PairSpec& spec);

// table2 for catalog pairs, example_bc for the generic families.
bool closed_form(const PairSpec& pair, const Weight& lambda, const std::string& variant = "table");

}  // namespace helgason
