#pragma once

#include "analysis.hpp"
#include "coeffs.hpp"
#include "elliptic.hpp"
#include "errors.hpp"
#include "geometry.hpp"
#include "identities.hpp"
#include "infinity.hpp"
#include "lengths.hpp"
#include "param.hpp"
#include "projreal.hpp"
#include "solve.hpp"
#include "trace.hpp"
