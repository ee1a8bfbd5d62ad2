#pragma once

#include "arithterm/error.hpp"
#include "arithterm/formulas.hpp"
#include "arithterm/kronecker.hpp"
#include "arithterm/natural.hpp"
#include "arithterm/oracles.hpp"
#include "arithterm/parser.hpp"
#include "arithterm/polynomial.hpp"
#include "arithterm/term.hpp"
#include "arithterm/verify.hpp"
