#ifndef NCPOLY_NCPOLY_HPP
#define NCPOLY_NCPOLY_HPP

#include "algebra.hpp"
#include "division.hpp"
#include "linalg.hpp"
#include "nonassoc.hpp"
#include "ore.hpp"
#include "parse.hpp"
#include "polynomial.hpp"
#include "rational.hpp"
#include "tensor.hpp"

#endif
