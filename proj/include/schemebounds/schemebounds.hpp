#pragma once

#include "schemebounds/delsarte.hpp"
#include "schemebounds/explicit_scheme.hpp"
#include "schemebounds/families.hpp"
#include "schemebounds/matrix.hpp"
#include "schemebounds/rational.hpp"
#include "schemebounds/scheme.hpp"
#include "schemebounds/scheme_io.hpp"
#include "schemebounds/simplex.hpp"
#include "schemebounds/spectrum.hpp"
