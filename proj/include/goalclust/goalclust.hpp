#ifndef GOALCLUST_GOALCLUST_HPP
#define GOALCLUST_GOALCLUST_HPP

#include "goalclust/bench.hpp"
#include "goalclust/dataset.hpp"
#include "goalclust/error.hpp"
#include "goalclust/kmeans.hpp"
#include "goalclust/oracle.hpp"
#include "goalclust/partition.hpp"
#include "goalclust/pmedian.hpp"
#include "goalclust/solver.hpp"
#include "goalclust/stats.hpp"
#include "goalclust/vns.hpp"
#include "goalclust/ward.hpp"

#endif // GOALCLUST_GOALCLUST_HPP
