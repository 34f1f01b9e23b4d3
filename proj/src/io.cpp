#include "ecm/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "ecm/errors.hpp"

namespace ecm::io {

using nlohmann::json;

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

namespace {

// numbers are emitted through fmt() as raw tokens to keep output stable
json num(double v) { return json::parse(fmt(v)); }

json num_array(const std::vector<double>& vs) {
    json a = json::array();
    for (double v : vs) a.push_back(num(v));
    return a;
}

std::vector<double> dbl_array(const json& a) {
    std::vector<double> out;
    out.reserve(a.size());
    for (const auto& v : a) out.push_back(v.get<double>());
    return out;
}

}  // namespace

std::string to_json(const MaterialField1D& f) {
    f.validate();
    json j;
    j["breakpoints"] = num_array(f.breakpoints);
    j["values"] = num_array(f.values);
    return j.dump(2) + "\n";
}

MaterialField1D material1d_from_json(const std::string& text) {
    const json j = json::parse(text);
    MaterialField1D f;
    f.breakpoints = dbl_array(j.at("breakpoints"));
    f.values = dbl_array(j.at("values"));
    f.validate();
    return f;
}

std::string to_json(const MaterialField2D& f) {
    f.validate();
    json j;
    j["mesh_n"] = f.mesh.n;
    j["lambda_per_element"] = num_array(f.lambda);
    j["mu"] = num(f.mu);
    return j.dump(2) + "\n";
}

MaterialField2D material2d_from_json(const std::string& text) {
    const json j = json::parse(text);
    MaterialField2D f;
    f.mesh = Mesh2D(j.at("mesh_n").get<int>());
    f.lambda = dbl_array(j.at("lambda_per_element"));
    f.mu = j.at("mu").get<double>();
    f.validate();
    return f;
}

std::string to_json(const DisplacementField& u) {
    u.validate();
    json j;
    j["mesh_n"] = u.mesh.n;
    j["l"] = num(u.l);
    j["u1"] = num_array(u.u1);
    j["u2"] = num_array(u.u2);
    return j.dump(2) + "\n";
}

DisplacementField displacement_from_json(const std::string& text) {
    const json j = json::parse(text);
    DisplacementField u;
    u.mesh = Mesh2D(j.at("mesh_n").get<int>());
    u.l = j.at("l").get<double>();
    u.u1 = dbl_array(j.at("u1"));
    u.u2 = dbl_array(j.at("u2"));
    u.validate();
    return u;
}

std::string trace_csv(const EcmTrace& t) {
    std::ostringstream os;
    os << "n,dummy_value,force,rel_change\n";
    for (std::size_t k = 0; k < t.dummy_values.size(); ++k) {
        os << k << "," << fmt(t.dummy_values[k]) << ",";
        if (k < t.forces.size()) os << fmt(t.forces[k]);
        os << ",";
        if (k > 0 && t.dummy_values[k - 1] != 0.0)
            os << fmt(std::abs(t.dummy_values[k] - t.dummy_values[k - 1]) /
                      std::abs(t.dummy_values[k - 1]));
        os << "\n";
    }
    return os.str();
}

std::string trace_summary_json(const EcmTrace& t) {
    json j;
    j["limit"] = num(t.limit());
    j["iterations"] = t.iterations;
    j["converged"] = t.converged;
    j["stop_reason"] = to_string(t.stop_reason);
    return j.dump(2) + "\n";
}

std::string stochastic_csv(const std::vector<StochasticRow>& rows, double f_hom) {
    std::ostringstream os;
    os << "n_cells,samples,mean_F,std_F,F_hom,abs_err\n";
    for (const auto& r : rows)
        os << r.n_cells << "," << r.samples << "," << fmt(r.mean_force) << ","
           << fmt(r.std_force) << "," << fmt(f_hom) << "," << fmt(r.mean_abs_err) << "\n";
    return os.str();
}

std::string plastic_csv(const std::vector<PlasticPoint>& curve) {
    std::ostringstream os;
    os << "l,F_direct,F_ecm,regime\n";
    for (const auto& p : curve)
        os << fmt(p.l) << "," << fmt(p.force_direct) << "," << fmt(p.force_ecm) << ","
           << (p.plastic ? "plastic" : "elastic") << "\n";
    return os.str();
}

std::string delta_sweep_csv(const HomogenizationReport& rep) {
    std::ostringstream os;
    os << "cells_per_side,delta,force\n";
    for (const auto& r : rep.rows)
        os << r.cells_per_side << "," << fmt(r.delta) << "," << fmt(r.force) << "\n";
    return os.str();
}

std::string vtk_structured(const DisplacementField& u) {
    u.validate();
    const int np = u.mesh.n + 1;
    std::ostringstream os;
    os << "# vtk DataFile Version 3.0\n"
       << "tensile displacement\n"
       << "ASCII\n"
       << "DATASET STRUCTURED_GRID\n"
       << "DIMENSIONS " << np << " " << np << " 1\n"
       << "POINTS " << np * np << " double\n";
    for (int k = 0; k < u.mesh.num_nodes(); ++k) {
        const auto xy = u.mesh.node_coord(k);
        os << fmt(xy[0]) << " " << fmt(xy[1]) << " 0\n";
    }
    os << "POINT_DATA " << np * np << "\n"
       << "VECTORS displacement double\n";
    for (int k = 0; k < u.mesh.num_nodes(); ++k)
        os << fmt(u.u1[static_cast<std::size_t>(k)]) << " "
           << fmt(u.u2[static_cast<std::size_t>(k)]) << " 0\n";
    return os.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InvalidArgument("cannot open for writing: " + path);
    out << content;
    if (!out) throw InvalidArgument("write failed: " + path);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InvalidArgument("cannot open: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

}  // namespace ecm::io
