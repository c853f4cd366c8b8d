#pragma once

#include "rankalg/binomial.hpp"
#include "rankalg/core.hpp"
#include "rankalg/hilbert.hpp"
#include "rankalg/linalg.hpp"
#include "rankalg/models.hpp"
#include "rankalg/monomial.hpp"
#include "rankalg/parallel.hpp"
#include "rankalg/plackett_luce.hpp"
#include "rankalg/polynomial.hpp"
#include "rankalg/polytope.hpp"
#include "rankalg/poset.hpp"
#include "rankalg/random_posets.hpp"
#include "rankalg/structural.hpp"
#include "rankalg/toric.hpp"
