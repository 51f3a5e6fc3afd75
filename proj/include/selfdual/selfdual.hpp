#pragma once
// Umbrella header.

#include "bigint.hpp"
#include "catalog.hpp"
#include "code.hpp"
#include "constructions.hpp"
#include "design.hpp"
#include "enumerate.hpp"
#include "field.hpp"
#include "gleason.hpp"
#include "matrix.hpp"
#include "packed.hpp"
#include "verify.hpp"
