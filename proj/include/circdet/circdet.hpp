#ifndef CIRCDET_CIRCDET_HPP
#define CIRCDET_CIRCDET_HPP

#include "circdet/arith.hpp"
#include "circdet/bipoly.hpp"
#include "circdet/bipoly_io.hpp"
#include "circdet/circulant.hpp"
#include "circdet/errors.hpp"
#include "circdet/permanent.hpp"
#include "circdet/permclass.hpp"
#include "circdet/permutation.hpp"
#include "circdet/phi.hpp"
#include "circdet/report_io.hpp"
#include "circdet/verify.hpp"

#endif // CIRCDET_CIRCDET_HPP
