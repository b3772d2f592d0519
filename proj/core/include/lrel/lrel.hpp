#pragma once

#include "lrel/certificate.hpp"
#include "lrel/classify.hpp"
#include "lrel/decompose.hpp"
#include "lrel/invariance.hpp"
#include "lrel/io.hpp"
#include "lrel/relation.hpp"
#include "lrel/shift_model.hpp"
#include "lrel/subspace.hpp"
#include "lrel/tolerance.hpp"
#include "lrel/ztransform.hpp"
