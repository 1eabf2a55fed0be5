#pragma once
// Umbrella header.

#include "pclean/campaign.hpp"
#include "pclean/construction.hpp"
#include "pclean/decomposition.hpp"
#include "pclean/filtration.hpp"
#include "pclean/ideal.hpp"
#include "pclean/json_io.hpp"
#include "pclean/monomial.hpp"
#include "pclean/oracle.hpp"
#include "pclean/parser.hpp"
#include "pclean/random.hpp"
#include "pclean/stanley.hpp"
