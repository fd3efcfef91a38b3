#pragma once

#include "selflink/error.hpp"
#include "selflink/ring.hpp"
#include "selflink/complete_graph.hpp"
#include "selflink/spanning_trees.hpp"
#include "selflink/determinant.hpp"
#include "selflink/forested_form.hpp"
#include "selflink/geometry.hpp"
#include "selflink/link.hpp"
#include "selflink/random.hpp"
#include "selflink/wall_sim.hpp"
