#pragma once

#include "restrictor/certificate.hpp"
#include "restrictor/covering.hpp"
#include "restrictor/embedding.hpp"
#include "restrictor/errors.hpp"
#include "restrictor/fullness.hpp"
#include "restrictor/generators.hpp"
#include "restrictor/graph.hpp"
#include "restrictor/induced_copy.hpp"
#include "restrictor/io.hpp"
#include "restrictor/main_lemma.hpp"
#include "restrictor/numeric.hpp"
#include "restrictor/oracles.hpp"
#include "restrictor/outcome.hpp"
#include "restrictor/partitions.hpp"
#include "restrictor/predicates.hpp"
#include "restrictor/rng.hpp"
#include "restrictor/schedule.hpp"
#include "restrictor/small_tree.hpp"
#include "restrictor/theorem.hpp"
#include "restrictor/vertex_set.hpp"
