// Umbrella header.
#pragma once

#include "univadj/catalog.hpp"
#include "univadj/charpoly.hpp"
#include "univadj/graph.hpp"
#include "univadj/graph_io.hpp"
#include "univadj/polynomial.hpp"
#include "univadj/rational.hpp"
#include "univadj/regular.hpp"
#include "univadj/roots.hpp"
#include "univadj/union_formula.hpp"
#include "univadj/universal.hpp"
