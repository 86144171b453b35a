#pragma once

#include "gcfx/bounds.hpp"
#include "gcfx/catalog.hpp"
#include "gcfx/cfcore.hpp"
#include "gcfx/constructions.hpp"
#include "gcfx/errors.hpp"
#include "gcfx/numeric.hpp"
#include "gcfx/serialize.hpp"
#include "gcfx/streams.hpp"
#include "gcfx/transforms.hpp"
#include "gcfx/verify.hpp"
