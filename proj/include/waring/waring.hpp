#ifndef WARING_WARING_HPP
#define WARING_WARING_HPP

#include <waring/bounds.hpp>
#include <waring/decompose.hpp>
#include <waring/flatten.hpp>
#include <waring/groebner.hpp>
#include <waring/linalg.hpp>
#include <waring/matrix.hpp>
#include <waring/poly.hpp>
#include <waring/polyfile.hpp>
#include <waring/scalar.hpp>
#include <waring/solve.hpp>

#endif  // WARING_WARING_HPP
