#pragma once

#include "ipdclust/baselines.hpp"
#include "ipdclust/cluster.hpp"
#include "ipdclust/csv.hpp"
#include "ipdclust/datagen.hpp"
#include "ipdclust/distance.hpp"
#include "ipdclust/kde.hpp"
#include "ipdclust/parallel.hpp"
#include "ipdclust/pca.hpp"
#include "ipdclust/report.hpp"
#include "ipdclust/svg.hpp"
#include "ipdclust/types.hpp"
#include "ipdclust/validation.hpp"
