#pragma once

#include "algebra.hpp"
#include "catalog.hpp"
#include "chain.hpp"
#include "complex.hpp"
#include "errors.hpp"
#include "explorer.hpp"
#include "fan.hpp"
#include "io.hpp"
#include "linalg.hpp"
#include "moves.hpp"
#include "polynomial.hpp"
#include "rational.hpp"
#include "rng.hpp"
#include "volume.hpp"
