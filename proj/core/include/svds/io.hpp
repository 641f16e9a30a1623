#pragma once

#include <string>
#include <vector>

#include "svds/measure.hpp"
#include "svds/relation.hpp"
#include "svds/trajectory.hpp"

namespace svds {

/* shortest round-trip decimal for doubles; readers recover the exact bits */
std::string format_double(double v);

/* trajectory CSV: header t,x0[,x1...] */
void write_trajectory_csv(const std::string& path, const Trajectory& X);
Trajectory read_trajectory_csv(const std::string& path);

/* measure CSV: header cell,c0[,c1...],weight */
void write_measure_csv(const std::string& path, const EmpiricalMeasure& mu);
std::vector<double> read_measure_weights_csv(const std::string& path, const Grid& grid);

/* edge-list CSV: header from,to */
void write_edges_csv(const std::string& path, const FiniteRelation& F);
FiniteRelation read_edges_csv(const std::string& path);

/* discrete measure CSV: header state,weight */
void write_discrete_measure_csv(const std::string& path, const DiscreteMeasure& mu);
DiscreteMeasure read_discrete_measure_csv(const std::string& path);

/* coupling CSV: header from,to,weight */
void write_coupling_csv(const std::string& path, const EdgeCoupling& coupling);

/* recurrent-set CSV: header state */
void write_state_set_csv(const std::string& path, const std::vector<int>& states);

}  // namespace svds
