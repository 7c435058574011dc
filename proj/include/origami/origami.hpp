#pragma once

#include "origami/error.hpp"
#include "origami/moebius.hpp"
#include "origami/geometry.hpp"
#include "origami/word.hpp"
#include "origami/presentations.hpp"
#include "origami/coset_table.hpp"
#include "origami/finite_group.hpp"
#include "origami/builder.hpp"
#include "origami/limitset.hpp"
#include "origami/serialize.hpp"
