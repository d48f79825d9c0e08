#pragma once

#include "jacobsthal/natural.hpp"
#include "jacobsthal/sequence.hpp"
#include "jacobsthal/identities.hpp"
#include "jacobsthal/divisibility.hpp"
#include "jacobsthal/modular.hpp"
#include "jacobsthal/primality.hpp"
#include "jacobsthal/factorize.hpp"
#include "jacobsthal/cache.hpp"
#include "jacobsthal/scan.hpp"
#include "jacobsthal/records.hpp"
