#pragma once

#include "field.hpp"
#include "random.hpp"
#include "geometry.hpp"
#include "polygon.hpp"
#include "random_polygon.hpp"
#include "strips.hpp"
#include "billiards.hpp"
#include "paths.hpp"
#include "model.hpp"
#include "dynamics.hpp"
#include "verify.hpp"
#include "quasi.hpp"
#include "svg.hpp"
#include "io.hpp"
