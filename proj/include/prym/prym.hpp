#pragma once

#include "prym/cyclotomic.hpp"
#include "prym/decompose.hpp"
#include "prym/error.hpp"
#include "prym/foxcover.hpp"
#include "prym/generators.hpp"
#include "prym/intlinalg.hpp"
#include "prym/poly.hpp"
#include "prym/predicates.hpp"
#include "prym/ringlinalg.hpp"
#include "prym/selftest.hpp"
#include "prym/wordlang.hpp"
