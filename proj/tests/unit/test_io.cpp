#include <doctest.h>

#include <cstdio>
#include <string>

#include "ecm/errors.hpp"
#include "ecm/io.hpp"
#include "ecm/material2d.hpp"

using namespace ecm;

TEST_CASE("double formatting is stable and lossless") {
    CHECK(io::fmt(3.0) == "3");
    CHECK(io::fmt(0.1) == "0.10000000000000001");
    CHECK(io::fmt(-2.5e-11) == "-2.5000000000000001e-11");

    for (double v : {1.0 / 3.0, 6.25e-4, 123456.789, -0.0, 1e300}) {
        double parsed = 0.0;
        std::sscanf(io::fmt(v).c_str(), "%lf", &parsed);
        CHECK(parsed == v);
    }
}

TEST_CASE("material1d json round trip") {
    const MaterialField1D f =
        build_ecm_kappa_1d(PhaseParams::elastic1d(2.0, 6.0, 0.5), 3.7);
    const std::string text = io::to_json(f);
    const MaterialField1D back = io::material1d_from_json(text);
    CHECK(back.breakpoints == f.breakpoints);
    CHECK(back.values == f.values);
    CHECK(io::to_json(back) == text);

    CHECK_THROWS(io::material1d_from_json("{\"breakpoints\": [0, 1]}"));
}

TEST_CASE("material2d json round trip") {
    const PhaseParams p = PhaseParams::plane2d(1.0, 1.0, 0.1, 1.0, 0.5);
    const MaterialField2D f =
        build_ecm_lambda_2d(Mesh2D(32), p, solve_ecm_radii(0.5), 1.05);
    const MaterialField2D back = io::material2d_from_json(io::to_json(f));
    CHECK(back.mesh.n == 32);
    CHECK(back.lambda == f.lambda);
    CHECK(back.mu == f.mu);
}

TEST_CASE("displacement json round trip") {
    const Mesh2D mesh(4);
    const DisplacementField u = DisplacementField::sample(
        mesh, 0.01, [](double x, double y) { return x * y - 1.0 / 3.0; },
        [](double x, double) { return 0.25 * x; });
    const DisplacementField back = io::displacement_from_json(io::to_json(u));
    CHECK(back.mesh.n == 4);
    CHECK(back.l == u.l);
    CHECK(back.u1 == u.u1);
    CHECK(back.u2 == u.u2);
}

TEST_CASE("trace serialization") {
    EcmTrace t;
    t.dummy_values = {4.0, 3.75, 3.5};
    t.forces = {3.75, 3.5};
    t.converged = true;
    t.iterations = 2;
    t.stop_reason = StopReason::tolerance;

    const std::string csv = io::trace_csv(t);
    CHECK(csv.find("n,dummy_value,force,rel_change\n") == 0);
    CHECK(csv.find("\n0,4,3.75,\n") != std::string::npos);
    CHECK(csv.find("\n2,3.5,,") != std::string::npos);

    const std::string summary = io::trace_summary_json(t);
    CHECK(summary.find("\"limit\": 3.5") != std::string::npos);
    CHECK(summary.find("\"iterations\": 2") != std::string::npos);
    CHECK(summary.find("\"converged\": true") != std::string::npos);
    CHECK(summary.find("\"stop_reason\": \"tolerance\"") != std::string::npos);
}

TEST_CASE("tabular serializers") {
    const std::vector<StochasticRow> rows = {{10, 5, 3.1, 0.2, 0.05}};
    const std::string sto = io::stochastic_csv(rows, 3.0);
    CHECK(sto == "n_cells,samples,mean_F,std_F,F_hom,abs_err\n"
                 "10,5,3.1000000000000001,0.20000000000000001,3,0.050000000000000003\n");

    const std::vector<PlasticPoint> curve = {{0.5, 2.0 / 3.0, 2.0 / 3.0, false, true},
                                             {1.25, 1.78, 1.78, true, true}};
    const std::string pla = io::plastic_csv(curve);
    CHECK(pla.find("l,F_direct,F_ecm,regime\n") == 0);
    CHECK(pla.find(",elastic\n") != std::string::npos);
    CHECK(pla.find(",plastic\n") != std::string::npos);

    HomogenizationReport rep;
    rep.rows = {{1, 1.0, 0.03}, {2, 0.5, 0.031}};
    const std::string csv = io::delta_sweep_csv(rep);
    CHECK(csv == "cells_per_side,delta,force\n"
                 "1,1,0.029999999999999999\n"
                 "2,0.5,0.031\n");
}

TEST_CASE("vtk output shape") {
    const Mesh2D mesh(2);
    const DisplacementField u = DisplacementField::sample(
        mesh, 0.01, [](double, double) { return 0.0; }, [](double, double y) { return y; });
    const std::string vtk = io::vtk_structured(u);
    CHECK(vtk.find("# vtk DataFile Version 3.0\n") == 0);
    CHECK(vtk.find("DATASET STRUCTURED_GRID\n") != std::string::npos);
    CHECK(vtk.find("DIMENSIONS 3 3 1\n") != std::string::npos);
    CHECK(vtk.find("POINTS 9 double\n") != std::string::npos);
    CHECK(vtk.find("VECTORS displacement double\n") != std::string::npos);

    int newlines = 0;
    for (char c : vtk) newlines += (c == '\n');
    CHECK(newlines == 6 + 9 + 2 + 9);
}

TEST_CASE("file round trip") {
    const std::string path = "io_test_scratch.txt";
    io::write_file(path, "alpha\nbeta\n");
    CHECK(io::read_file(path) == "alpha\nbeta\n");
    std::remove(path.c_str());
    CHECK_THROWS_AS(io::read_file("definitely/not/here.txt"), InvalidArgument);
}
