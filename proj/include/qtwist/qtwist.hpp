#pragma once

#include "braid.hpp"
#include "cartan.hpp"
#include "catalog.hpp"
#include "errors.hpp"
#include "limits.hpp"
#include "monomial.hpp"
#include "poly.hpp"
#include "qchar.hpp"
#include "rings.hpp"
#include "series.hpp"
#include "io/cache.hpp"
#include "io/parse.hpp"
#include "io/serialize.hpp"
#include "io/text.hpp"
