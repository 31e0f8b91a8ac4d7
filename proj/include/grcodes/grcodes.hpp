#pragma once

#include "ambient.hpp"
#include "char_p2.hpp"
#include "code.hpp"
#include "common.hpp"
#include "distance.hpp"
#include "factor.hpp"
#include "field.hpp"
#include "hadic.hpp"
#include "howell.hpp"
#include "oracle.hpp"
#include "poly.hpp"
#include "ring.hpp"
#include "zarith.hpp"
