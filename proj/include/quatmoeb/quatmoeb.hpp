#pragma once

#include "quatmoeb/classify.hpp"
#include "quatmoeb/dynamical_type.hpp"
#include "quatmoeb/errors.hpp"
#include "quatmoeb/moebius.hpp"
#include "quatmoeb/qmat2.hpp"
#include "quatmoeb/quaternion.hpp"
#include "quatmoeb/random.hpp"
#include "quatmoeb/spectral.hpp"
#include "quatmoeb/zclass.hpp"
