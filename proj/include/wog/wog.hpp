#pragma once

#include "wog/error.hpp"
#include "wog/monomial.hpp"
#include "wog/height.hpp"
#include "wog/linalg.hpp"
#include "wog/betti.hpp"
#include "wog/resolutions.hpp"
#include "wog/graph.hpp"
#include "wog/pseudoforest.hpp"
#include "wog/families.hpp"
#include "wog/enumerate.hpp"
#include "wog/classify.hpp"
#include "wog/io.hpp"
#include "wog/cli.hpp"
