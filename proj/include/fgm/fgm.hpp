#ifndef FGM_FGM_HPP
#define FGM_FGM_HPP

#include "csv.hpp"
#include "errors.hpp"
#include "mldegree.hpp"
#include "mle.hpp"
#include "model.hpp"
#include "polynomial.hpp"
#include "rational.hpp"
#include "roots.hpp"
#include "verify.hpp"

#endif  // FGM_FGM_HPP
