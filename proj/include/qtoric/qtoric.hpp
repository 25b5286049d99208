#pragma once

#include "qtoric/config.hpp"
#include "qtoric/delzant.hpp"
#include "qtoric/errors.hpp"
#include "qtoric/field.hpp"
#include "qtoric/intlinalg.hpp"
#include "qtoric/matrix.hpp"
#include "qtoric/pipeline.hpp"
#include "qtoric/polytope.hpp"
#include "qtoric/quasilattice.hpp"
#include "qtoric/verify.hpp"
