#pragma once

#include <string>
#include <vector>

#include "ecm/ecm_iteration.hpp"
#include "ecm/homogenization.hpp"
#include "ecm/plasticity1d.hpp"

namespace ecm::io {

// shared "%.17g" formatting so reruns are byte-identical
std::string fmt(double v);

std::string to_json(const MaterialField1D& f);
MaterialField1D material1d_from_json(const std::string& text);

std::string to_json(const MaterialField2D& f);
MaterialField2D material2d_from_json(const std::string& text);

std::string to_json(const DisplacementField& u);
DisplacementField displacement_from_json(const std::string& text);

std::string trace_csv(const EcmTrace& t);
std::string trace_summary_json(const EcmTrace& t);

std::string stochastic_csv(const std::vector<StochasticRow>& rows, double f_hom);
std::string plastic_csv(const std::vector<PlasticPoint>& curve);
std::string delta_sweep_csv(const HomogenizationReport& rep);

// legacy-format structured grid with point displacement vectors
std::string vtk_structured(const DisplacementField& u);

void write_file(const std::string& path, const std::string& content);
std::string read_file(const std::string& path);

}  // namespace ecm::io
