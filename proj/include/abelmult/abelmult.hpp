#ifndef ABELMULT_ABELMULT_HPP
#define ABELMULT_ABELMULT_HPP

#include "abelmult/rational.hpp"
#include "abelmult/monomial.hpp"
#include "abelmult/param_poly.hpp"
#include "abelmult/poly_parser.hpp"
#include "abelmult/piecewise.hpp"
#include "abelmult/budget.hpp"
#include "abelmult/ordering.hpp"
#include "abelmult/groebner.hpp"
#include "abelmult/equation.hpp"
#include "abelmult/equation_text.hpp"
#include "abelmult/variational.hpp"
#include "abelmult/closed_forms.hpp"
#include "abelmult/center.hpp"
#include "abelmult/numverify.hpp"
#include "abelmult/variety.hpp"
#include "abelmult/registry.hpp"

#endif
